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
The Mathieu group M23, its Golay code and the two index 253 subgroups inducing the same
permutation character: the heptad stabilizer 2^4:A7 and the 2-subset stabilizer L3(4):2.

:def: build_m23
Builds M23 from the shipped generator file and checks its order and 4-transitivity

:def: golay_code
The binary [23,12,7] Golay code invariant under M23

:def: golay_heptads
The 253 weight 7 codewords

:def: m23_index253_actions
The actions of M23 on point pairs and on heptads

:class: M23Report
The end to end M23 computation

:def: m23_demo
Runs the M23 computation
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict, Any, FrozenSet, Sequence

from . import Verdict, DataError
from .abstract import AbstractReport
from .config import RunConfig
from .perm import Permutation, PermGroup, read_pgrp, setwise_stabilizer, is_k_transitive
from .gassmann import Action, almost_conjugate, perm_reps_equivalent
from .obstruction import CsReport, csinv

from itertools import combinations
import os
import numpy as np
import logging

logger = logging.getLogger(__name__)

M23_DATA: str = os.path.join(os.path.dirname(__file__), "data", "m23.pgrp")
M23_ORDER: int = 10200960
LENGTH: int = 23
QUADRATIC_RESIDUES: FrozenSet[int] = frozenset({1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18})

def build_m23(path: Union[None, str]=None) -> PermGroup:
    """
    Reads M23 from a .pgrp file. The file is trusted only if the group it generates has order
    10 200 960 and is 4-transitive on 23 points
        :param path: the generator file, defaults to the shipped tools/data/m23.pgrp
        :raises DataError: if the file is missing or fails the checks
    """
    path = M23_DATA if path is None else path
    if not os.path.isfile(path):
        raise DataError(f"M23 generator file '{path}' is missing")

    group = read_pgrp(path)
    group.name = "M23"
    if group.degree != LENGTH or group.order != M23_ORDER:
        raise DataError(f"M23 generator file gives degree {group.degree}, order {group.order}")
    if not is_k_transitive(group, 4):
        raise DataError("M23 generator file does not give a 4-transitive group")
    logger.info("M23 built: order 10200960, 4-transitive")
    return group

def _permute(word: int, g: Permutation) -> int:
    output = 0
    for i in range(LENGTH):
        if word >> i & 1:
            output |= 1 << g.images[i]
    return output

def _reduce(basis: Dict[int, int], word: int) -> int:
    """
    Reduces a word against an echelon basis keyed by leading bit
    """
    while word:
        lead = word.bit_length() - 1
        if lead not in basis:
            return word
        word ^= basis[lead]
    return 0

def _echelon(words: Sequence[int]) -> Dict[int, int]:
    basis: Dict[int, int] = {}
    for word in words:
        word = _reduce(basis, word)
        if word:
            basis[word.bit_length() - 1] = word
    return basis

def _cyclic_span(support: Sequence[int]) -> Dict[int, int]:
    word = sum(1 << x for x in support)
    mask = (1 << LENGTH) - 1
    shifts = [((word << k) | (word >> (LENGTH - k))) & mask for k in range(LENGTH)]
    return _echelon(shifts)

def golay_code(group: PermGroup) -> np.ndarray:
    """
    The 4096 codewords of the binary [23,12,7] Golay code invariant under the group, as a
    (4096, 23) array of bits. Candidates are the cyclic codes spanned by the translates of the
    quadratic residues Q, the non-residues N, Q+{0} and N+{0} of GF(23)
        :raises DataError: if no candidate is a [23,12,7] code invariant under the group
    """
    non_residues = frozenset(range(1, LENGTH)) - QUADRATIC_RESIDUES
    candidates = [
        sorted(QUADRATIC_RESIDUES), sorted(non_residues),
        sorted(QUADRATIC_RESIDUES | {0}), sorted(non_residues | {0})
    ]
    for support in candidates:
        basis = _cyclic_span(support)
        if len(basis) != 12:
            continue
        if any(_reduce(basis, _permute(x, g)) for x in basis.values() for g in group.generators):
            continue

        rows = np.array([[x >> i & 1 for i in range(LENGTH)] for x in basis.values()], dtype=np.int64)
        messages = (np.arange(1 << 12)[:, None] >> np.arange(12)) & 1
        codewords = (messages @ rows) % 2
        weights = codewords.sum(axis=1)
        if weights[1:].min() != 7 or int((weights == 7).sum()) != 253:
            continue
        logger.debug(f"Golay code spanned by the translates of {support}")
        return codewords
    raise DataError("no quadratic residue code of length 23 is invariant under the group")

def golay_heptads(group: Union[None, PermGroup]=None) -> List[FrozenSet[int]]:
    """
    The 253 supports of the weight 7 Golay codewords, sorted
    """
    group = build_m23() if group is None else group
    codewords = golay_code(group)
    heptads = [frozenset(np.flatnonzero(x).tolist()) for x in codewords if x.sum() == 7]
    return sorted(heptads, key=sorted)

def m23_index253_actions(group: PermGroup, heptads: Union[None, Sequence[FrozenSet[int]]]=None) -> Tuple[Action, Action]:
    """
    The actions of M23 on the 253 point pairs and on the 253 heptads
        :raises DataError: if an action is not transitive
    """
    heptads = golay_heptads(group) if heptads is None else heptads
    pairs = Action.on_blocks(group, list(combinations(range(LENGTH), 2)))
    blocks = Action.on_blocks(group, heptads)
    for action in (pairs, blocks):
        if not action.is_transitive():
            raise DataError(f"M23 does not act transitively on its {action.name}")
    return pairs, blocks

class M23Report(AbstractReport):
    """
    The M23 computation: group checks, the two degree 253 actions, their equivalence and csinv
    """
    def __init__(
        self, order: int, four_transitive: bool, heptads: int, stabilizer_orders: Tuple[int, int],
        equivalent: bool, report: CsReport
    ) -> None:
        self.order: int = order
        self.four_transitive: bool = four_transitive
        self.heptads: int = heptads
        self.stabilizer_orders: Tuple[int, int] = stabilizer_orders
        self.equivalent: bool = equivalent
        self.report: CsReport = report

    @property
    def verdict(self) -> Verdict:
        """
        The csinv verdict, unknown unless the full scan confirmed the scan mode certificate
        """
        if not self.equivalent:
            return Verdict.unknown
        return self.report.verdict

    def _export_json(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "four_transitive": self.four_transitive,
            "heptads": self.heptads,
            "stabilizer_orders": list(self.stabilizer_orders),
            "equivalent": self.equivalent,
            "report": self.report._export_json(),
            "verdict": self.verdict.value
        }

    def _export_text(self) -> str:
        output = f"|M23| = {self.order}, 4-transitive: {'yes' if self.four_transitive else 'no'}\n"
        output += f"heptads: {self.heptads}\n"
        output += f"stabilizer orders: heptad {self.stabilizer_orders[0]}, pair {self.stabilizer_orders[1]}\n"
        output += f"equal fixed point counts on all of M23: {'yes' if self.equivalent else 'no'}\n"
        output += self.report._export_text()
        if not self.equivalent:
            output += f"\nscan certificate not confirmed by the full scan, overall verdict: {self.verdict.value}"
        return output

def m23_demo(config: Union[None, RunConfig]=None, path: Union[None, str]=None) -> M23Report:
    """
    H = stabilizer of a heptad, K = stabilizer of a point pair. Both have index 253; the actions on
    the cosets have equal fixed point counts on every element (full scan), S(H) = 0 as H is
    perfect and S(K) = 1 as K/K' = Z/2
    """
    config = RunConfig() if config is None else config
    group = build_m23(path)
    heptads = golay_heptads(group)
    pairs, blocks = m23_index253_actions(group, heptads)

    h = setwise_stabilizer(group, sorted(heptads[0]))
    k = setwise_stabilizer(group, [0, 1])
    h.name, k.name = "heptad stabilizer 2^4:A7", "pair stabilizer L3(4):2"
    if h.order != blocks.stabilizer_order() or k.order != pairs.stabilizer_order():
        raise DataError("stabilizer orders do not match the action degrees")

    equivalent = perm_reps_equivalent(
        group, pairs, blocks, mode="full_scan", workers=config.workers, limit=config.max_enumeration_order
    )
    _, certificate = almost_conjugate(
        group, h, k, class_mode="scan", actions=[Action.natural(group), pairs, blocks], workers=config.workers
    )
    report = csinv(group, "identity", group, h, k, config, certificate)
    if not equivalent:
        logger.warning("the degree 253 actions differ on some element, the csinv verdict is not confirmed")
    return M23Report(group.order, True, len(heptads), (h.order, k.order), equivalent, report)
