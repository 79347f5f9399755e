# -*- coding: utf-8 -*-

## Gassmann Tools ############################################################
# Author:     AJ Zwijnenburg
# Version:    v1.0
# Date:       2026-10-18
# Copyright:  Copyright (C) 2026 - AJ Zwijnenburg
# License:    MIT
##############################################################################

## Copyright notice ##########################################################
# Copyright 2026 AJ Zwijnenburg
#
# Permission is hereby granted, free of charge, to any person obtaining a copy 
# of this software and associated documentation files (the "Software"), to deal 
# in the Software without restriction, including without limitation the rights 
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell 
# copies of the Software, and to permit persons to whom the Software is 
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in  
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR 
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE # WARRANTIES OF MERCHANTABILITY, 
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE 
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, 
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN 
# THE SOFTWARE.
##############################################################################

"""
Command line front end

    python -m tools [--json] [--workers N] [-v] <command> ...

Exit codes: 0 check passed or no obstruction found, 1 obstruction or inequality found,
2 input error, 3 limit exceeded (unknown).

:def: main
Parses the arguments, runs the command and returns the exit code
"""

from __future__ import annotations
from typing import Union, List, Dict, Any, Sequence

from . import Format, Verdict, InputError, LimitError, json
from .config import RunConfig
from .perm import PermGroup, read_pgrp, parse_permutations
from .fp import (
    Presentation, HomomorphismSpec, read_presentation, parse_words, todd_coxeter, hom_search
)
from .gassmann import almost_conjugate, search_gassmann_pairs
from .obstruction import GroupHandle, QuotientMap, s_of_group, csinv, verify_cs_finite, s16_demo
from . import catalog

import argparse
import logging
import os
import sys

logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_FOUND: int = 1
EXIT_INPUT: int = 2
EXIT_LIMIT: int = 3

def _verdict_code(verdict: Verdict) -> int:
    if verdict == Verdict.obstructed:
        return EXIT_FOUND
    if verdict == Verdict.unknown:
        return EXIT_LIMIT
    return EXIT_OK

def _emit(config: RunConfig, text: str, data: Dict[str, Any]) -> None:
    if config.output == Format.json:
        print(json.dumps_pretty(data))
    else:
        print(text)

def _load(path: str) -> Union[PermGroup, Presentation]:
    """
    Loads a .pgrp or .fp file
        :raises InputError: on an unknown extension
    """
    extension = os.path.splitext(path)[1]
    if extension == ".pgrp":
        return read_pgrp(path)
    if extension == ".fp":
        return read_presentation(path)
    raise InputError(f"unknown file type '{extension}', expected .pgrp or .fp")

def _load_group(path: str) -> PermGroup:
    group = _load(path)
    if not isinstance(group, PermGroup):
        raise InputError(f"'{path}' is not a permutation group file")
    return group

def _load_presentation(path: str) -> Presentation:
    presentation = _load(path)
    if not isinstance(presentation, Presentation):
        raise InputError(f"'{path}' is not a presentation file")
    return presentation

## Commands
def _demo(args: argparse.Namespace, config: RunConfig) -> int:
    if args.name == "s16":
        report = s16_demo(args.n, config)
    else:
        from .mathieu import m23_demo
        report = m23_demo(config, args.data)
    print(report.dumps(config.output))
    return _verdict_code(report.verdict)

def _check_gassmann(args: argparse.Namespace, config: RunConfig) -> int:
    group, h, k = (_load_group(x) for x in (args.group, args.h, args.k))
    verdict, certificate = almost_conjugate(
        group, h, k, class_mode=args.mode, class_limit=config.max_class_order,
        limit=config.max_enumeration_order, workers=config.workers
    )
    print(certificate.dumps(config.output))
    return EXIT_OK if verdict else EXIT_FOUND

def _s_invariant(args: argparse.Namespace, config: RunConfig) -> int:
    source = _load(args.file)
    if isinstance(source, PermGroup):
        if args.subgroup:
            raise InputError("--subgroup applies to presentation files only")
        handle = GroupHandle(group=source)
    elif args.subgroup:
        table = todd_coxeter(source, parse_words(args.subgroup, source.generator_names), config.max_cosets)
        handle = GroupHandle(presentation=source, table=table)
    else:
        handle = GroupHandle(presentation=source)

    invariants = handle.abelianization()
    s = s_of_group(handle)
    _emit(
        config,
        f"{handle.describe()}\nabelianization = {invariants}\nS = {s}",
        {"group": handle.describe(), "abelianization": invariants.export(), "S": s}
    )
    return EXIT_OK

def _csinv(args: argparse.Namespace, config: RunConfig) -> int:
    pi = _load(args.pi)
    group, h, k = (_load_group(x) for x in args.triple)

    if args.phi == "identity":
        phi = "identity"
    else:
        with open(args.phi, "r", encoding="utf-8") as f:
            _, images = parse_permutations(f.read())
        if isinstance(pi, PermGroup):
            phi = QuotientMap(pi, group, images)
        else:
            phi = HomomorphismSpec(pi, group, images)

    report = csinv(pi, phi, group, h, k, config)
    print(report.dumps(config.output))
    return _verdict_code(report.verdict)

def _verify_cs(args: argparse.Namespace, config: RunConfig) -> int:
    verification = verify_cs_finite(_load_group(args.group), config)
    print(verification.dumps(config.output))
    return _verdict_code(verification.verdict)

def _verify_cs_q8abc(args: argparse.Namespace, config: RunConfig) -> int:
    group = catalog.build_q8abc(args.a, args.b, args.c, config.max_enumeration_order)
    verification = verify_cs_finite(group, config)
    print(verification.dumps(config.output))
    return _verdict_code(verification.verdict)

def _search_pairs(args: argparse.Namespace, config: RunConfig) -> int:
    group = _load_group(args.group)
    pairs = search_gassmann_pairs(group, limit=config.max_subgroup_order, class_limit=config.max_class_order)
    text = f"{group.describe()}: {len(pairs)} non-conjugate Gassmann pairs"
    for h, k, certificate in pairs:
        text += f"\n\nH = {h}\nK = {k}\n{certificate}"
    _emit(config, text, {
        "group": group.describe(),
        "pairs": [{"H": str(h), "K": str(k), "certificate": c._export_json()} for h, k, c in pairs]
    })
    return EXIT_OK

def _coset_enum(args: argparse.Namespace, config: RunConfig) -> int:
    presentation = _load_presentation(args.file)
    subgroup = parse_words(args.subgroup, presentation.generator_names) if args.subgroup else []
    table = todd_coxeter(presentation, subgroup, config.max_cosets)
    _emit(config, f"index = {table.num_cosets}", {
        "presentation": str(presentation),
        "subgroup": [presentation.format_word(x) for x in subgroup],
        "index": table.num_cosets
    })
    return EXIT_OK

def _hom_search(args: argparse.Namespace, config: RunConfig) -> int:
    presentation = _load_presentation(args.file)
    group = _load_group(args.group)
    result = hom_search(
        presentation, group, surjective_only=not args.all, budget=config.hom_budget,
        limit=config.max_enumeration_order
    )
    kind = "homomorphisms" if args.all else "surjections"
    text = f"{len(result)} {kind}{'' if result.exhaustive else ' (search incomplete)'}"
    for hom in result:
        text += f"\n  {hom.describe()}"
    _emit(config, text, {
        "count": len(result),
        "surjective_only": not args.all,
        "exhaustive": result.exhaustive,
        "homomorphisms": [x.export() for x in result]
    })
    return EXIT_OK if result.exhaustive else EXIT_LIMIT

def _options(defaults: bool) -> argparse.ArgumentParser:
    """
    The global options, accepted before and after the subcommand. Defaults are set on the top
    level parser only, the subcommand copies default to SUPPRESS
    """
    def default(value: Any) -> Any:
        return value if defaults else argparse.SUPPRESS

    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--json", action="store_true", default=default(False), help="write json reports")
    options.add_argument("--workers", type=int, default=default(1), help="processes of the fixed point scans")
    options.add_argument("--max-cosets", type=int, default=default(None), help="coset enumeration limit")
    options.add_argument("--max-group-order", type=int, default=default(None), help="element enumeration limit")
    options.add_argument("--max-subgroup-order", type=int, default=default(None), help="subgroup lattice limit")
    options.add_argument("-v", "--verbose", action="count", default=default(0), help="-v info, -vv debug logging")
    return options

def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m tools", description="Gassmann pairs and the CS obstruction", parents=[_options(True)]
    )
    commands = parser.add_subparsers(dest="command", required=True)
    common = [_options(False)]

    demo = commands.add_parser("demo", parents=common, help="run a worked example")
    demo.add_argument("name", choices=["s16", "m23"])
    demo.add_argument("--n", type=int, default=16, help="degree of the ambient symmetric group")
    demo.add_argument("--data", default=None, help="M23 generator file")
    demo.set_defaults(run=_demo)

    check = commands.add_parser("check-gassmann", parents=common, help="almost-conjugacy certificate of H and K in G")
    check.add_argument("group")
    check.add_argument("h")
    check.add_argument("k")
    check.add_argument("--mode", choices=["auto", "classes", "cycle_type"], default="auto")
    check.set_defaults(run=_check_gassmann)

    s_invariant = commands.add_parser("s-invariant", parents=common, help="S of a group or of a subgroup of a presented group")
    s_invariant.add_argument("file")
    s_invariant.add_argument("--subgroup", default=None, help="comma separated subgroup generators")
    s_invariant.set_defaults(run=_s_invariant)

    cs = commands.add_parser("csinv", parents=common, help="csinv for a map and a Gassmann pair")
    cs.add_argument("--pi", required=True, help=".pgrp or .fp file")
    cs.add_argument("--phi", default="identity", help="'identity' or a .pgrp file of generator images")
    cs.add_argument("--triple", nargs=3, required=True, metavar=("G", "H", "K"))
    cs.set_defaults(run=_csinv)

    verify = commands.add_parser("verify-cs", parents=common, help="exhaustive CS check of a finite group")
    verify.add_argument("group")
    verify.set_defaults(run=_verify_cs)

    q8abc = commands.add_parser("verify-cs-q8abc", parents=common, help="exhaustive CS check of Q(8a,b,c)")
    q8abc.add_argument("a", type=int)
    q8abc.add_argument("b", type=int)
    q8abc.add_argument("c", type=int)
    q8abc.set_defaults(run=_verify_cs_q8abc)

    search = commands.add_parser("search-pairs", parents=common, help="all non-conjugate Gassmann pairs")
    search.add_argument("group")
    search.set_defaults(run=_search_pairs)

    coset = commands.add_parser("coset-enum", parents=common, help="Todd-Coxeter coset enumeration")
    coset.add_argument("file")
    coset.add_argument("--subgroup", default=None, help="comma separated subgroup generators")
    coset.set_defaults(run=_coset_enum)

    homs = commands.add_parser("hom-search", parents=common, help="surjections of a presented group onto a permutation group")
    homs.add_argument("file")
    homs.add_argument("group")
    homs.add_argument("--all", action="store_true", help="list all homomorphisms, not only surjections")
    homs.set_defaults(run=_hom_search)

    return parser

def main(argv: Union[None, Sequence[str]]=None) -> int:
    """
    Runs the command line
        :param argv: the arguments, defaults to sys.argv[1:]
        :returns: the exit code
    """
    args = _parser().parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = RunConfig.from_env(
            max_cosets=args.max_cosets,
            max_enumeration_order=args.max_group_order,
            max_subgroup_order=args.max_subgroup_order,
            workers=args.workers,
            output=Format.json if args.json else Format.text
        )
        return args.run(args, config)
    except InputError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except LimitError as error:
        print(f"limit exceeded: {error}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT
