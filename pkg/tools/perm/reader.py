# -*- coding: utf-8 -*-

## Gassmann Tools Permutation ################################################
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
Reader and writer of the permutation group text format (.pgrp)

    # comment
    degree 4
    (1 2)
    (1 2 3 4)

The first non comment line declares the degree, every following line holds one
generator in 1-based disjoint cycle notation. Blank lines and # comments are ignored.

:def: parse_permutations
Parses .pgrp text into the degree and the generator list

:def: parse_pgrp
Parses .pgrp text into a PermGroup

:def: read_pgrp
Reads a .pgrp file into a PermGroup

:def: format_pgrp
Formats a PermGroup as .pgrp text
"""

from __future__ import annotations
from typing import Union, List, Tuple

from .. import InputError, ParseError
from .permutation import Permutation
from .group import PermGroup

import os
import re

_CYCLE_LINE = re.compile(r"\s*(\(\s*(\d+(\s*[\s,]\s*\d+)*)?\s*\)\s*)+")
_CYCLE = re.compile(r"\(([^()]*)\)")

def parse_permutations(text: str) -> Tuple[int, List[Permutation]]:
    """
    Parses .pgrp formatted text
        :param text: the file contents
        :raises ParseError: with line and column of the first malformed token
        :returns: the degree and the generators
    """
    degree: Union[None, int] = None
    generators: List[Permutation] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue

        if degree is None:
            tokens = line.split()
            if len(tokens) != 2 or tokens[0] != "degree":
                raise ParseError("expected 'degree n' as first statement", number, len(raw) - len(raw.lstrip()) + 1)
            try:
                degree = int(tokens[1])
            except ValueError:
                raise ParseError(f"degree '{tokens[1]}' is not an integer", number, line.index(tokens[1]) + 1) from None
            if degree < 1:
                raise ParseError("degree must be positive", number, line.index(tokens[1]) + 1)
            continue

        match = _CYCLE_LINE.match(line)
        if match is None or match.end() != len(line):
            column = match.end() + 1 if match is not None else len(line) - len(line.lstrip()) + 1
            raise ParseError("malformed cycle notation", number, column)

        cycles = [[int(x) for x in re.split(r"[\s,]+", cycle.strip())] for cycle in _CYCLE.findall(line) if cycle.strip()]
        try:
            generators.append(Permutation.from_cycles(degree, cycles, one_based=True))
        except InputError as error:
            raise ParseError(str(error), number, 1) from None

    if degree is None:
        raise ParseError("missing 'degree n' statement")

    return degree, generators

def parse_pgrp(text: str, name: Union[None, str]=None) -> PermGroup:
    """
    Parses .pgrp formatted text into a group
        :param text: the file contents
        :param name: the group description
        :raises ParseError: on malformed input
    """
    degree, generators = parse_permutations(text)
    return PermGroup(generators, degree, name=name)

def read_pgrp(path: str) -> PermGroup:
    """
    Reads a .pgrp file. The group is named after the file
        :param path: path to the file
        :raises InputError: when path doesnt point to a valid file
        :raises ParseError: on malformed input
    """
    if not os.path.isfile(path):
        raise InputError(f"file '{path}' does not exist")

    with open(path, "r", encoding="utf-8") as f:
        text = f.read()

    name = os.path.splitext(os.path.basename(path))[0]
    try:
        return parse_pgrp(text, name)
    except ParseError as error:
        raise ParseError(f"{path}: {error.message}", error.line, error.column) from None

def format_pgrp(group: PermGroup, comment: Union[None, str]=None) -> str:
    """
    Formats the generators of a group as .pgrp text
    """
    output = ""
    if comment:
        for line in comment.splitlines():
            output += f"# {line}\n"
    output += f"degree {group.degree}\n"
    for generator in group.generators:
        output += f"{generator}\n"
    return output
