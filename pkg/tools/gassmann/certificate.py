# -*- coding: utf-8 -*-

## Gassmann Tools Gassmann ###################################################
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
Almost-conjugacy of subgroups by class intersection counting

:class: GassmannCertificate
Per conjugacy class the number of elements of H and of K in the class

:def: almost_conjugate
Compares the class intersection counts of two subgroups

:def: regular_pair_almost_conjugate
Compares two regular subgroups of a symmetric group through their order statistics

:def: coset_fix_count
The number of cosets of H fixed by an element, from class data

:def: condition_one
Whether every element of H is conjugate to an element of K
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict, Any, Sequence, Hashable, Mapping

from .. import InputError
from ..abstract import AbstractReport
from ..config import RunConfig
from ..perm import PermGroup, cycle_type, CycleType, conjugacy_classes, enumerate_elements
from .statistics import OrderStatistics
from .action import Action, fix_profile

from collections import Counter
from math import factorial
import logging

logger = logging.getLogger(__name__)

CLASS_MODES = ("auto", "classes", "cycle_type", "scan")

class GassmannCertificate(AbstractReport):
    """
    The class intersection counts of a pair of subgroups
        :param ambient: description of the ambient group G
        :param entries: (class key, |C and H|, |C and K|) for every class meeting H or K
        :param mode: the class mode the keys come from
        :param exact: False when the keys are fix-count signatures, which may merge classes
    """
    def __init__(self, ambient: str, entries: Sequence[Tuple[str, int, int]], mode: str="classes", exact: bool=True) -> None:
        self.ambient: str = ambient
        self.entries: List[Tuple[str, int, int]] = [(str(key), int(a), int(b)) for key, a, b in entries]
        self.mode: str = mode
        self.exact: bool = exact
        self.verdict: bool = all(h == k for _, h, k in self.entries)

    @property
    def order_h(self) -> int:
        return sum(x[1] for x in self.entries)

    @property
    def order_k(self) -> int:
        return sum(x[2] for x in self.entries)

    def swapped(self) -> GassmannCertificate:
        """
        The certificate of the pair (K, H)
        """
        return GassmannCertificate(self.ambient, [(key, b, a) for key, a, b in self.entries], self.mode, self.exact)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> GassmannCertificate:
        """
        Rebuilds a certificate from its json export
            :raises InputError: if the stored verdict contradicts the counts
        """
        certificate = cls(
            data["ambient"],
            [(x["key"], x["inH"], x["inK"]) for x in data["classes"]],
            data.get("mode", "classes"),
            data.get("exact", True)
        )
        if certificate.verdict != data["verdict"]:
            raise InputError("certificate verdict contradicts its counts")
        return certificate

    def _export_json(self) -> Dict[str, Any]:
        return {
            "ambient": self.ambient,
            "classes": [{"key": key, "inH": a, "inK": b} for key, a, b in self.entries],
            "verdict": self.verdict,
            "mode": self.mode,
            "exact": self.exact
        }

    def _export_text(self) -> str:
        width = max([len(x[0]) for x in self.entries] + [5])
        output = f"ambient: {self.ambient}\n"
        output += f"{'class':<{width}}  {'|C∩H|':>7}  {'|C∩K|':>7}\n"
        for key, h, k in self.entries:
            output += f"{key:<{width}}  {h:>7}  {k:>7}{'' if h == k else '  *'}\n"
        output += f"almost-conjugate: {'yes' if self.verdict else 'no'}"
        if not self.exact:
            output += " (fix-count signature classes)"
        return output

    def __eq__(self, other) -> bool:
        if not isinstance(other, GassmannCertificate):
            return NotImplemented
        return self._export_json() == other._export_json()

    def __repr__(self) -> str:
        return f"(GassmannCertificate:{len(self.entries)} classes, {self.verdict})"

def _certificate(
    ambient: str, counts_h: Mapping[Hashable, int], counts_k: Mapping[Hashable, int], mode: str, exact: bool=True,
    label=str
) -> GassmannCertificate:
    keys = sorted(set(counts_h) | set(counts_k))
    entries = [(label(x), counts_h.get(x, 0), counts_k.get(x, 0)) for x in keys]
    return GassmannCertificate(ambient, entries, mode, exact)

def _is_symmetric(group: PermGroup) -> bool:
    return group.order == factorial(group.degree)

def almost_conjugate(
    group: PermGroup, h: PermGroup, k: PermGroup, class_mode: str="auto",
    actions: Union[None, Sequence[Action]]=None, class_limit: Union[None, int]=None,
    limit: Union[None, int]=None, workers: int=1
) -> Tuple[bool, GassmannCertificate]:
    """
    Counts |C and H| and |C and K| for every conjugacy class C of G meeting H or K
        :param group: the ambient group G
        :param h: the subgroup H
        :param k: the subgroup K
        :param class_mode: "classes" computes the classes of G explicitly, "cycle_type" keys by cycle
            type and requires G to be the full symmetric group, "scan" keys by the fixed-point counts
            under the given actions; "auto" picks the first feasible of these
        :param actions: the actions of G used in scan mode
        :param class_limit: class computation limit, defaults to RunConfig.MAX_CLASS_ORDER
        :param limit: enumeration limit for H and K, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :param workers: process count of scan mode
        :raises InputError: if H or K is not a subgroup of G or no class mode is feasible
    """
    class_limit = RunConfig.MAX_CLASS_ORDER if class_limit is None else class_limit
    if class_mode not in CLASS_MODES:
        raise InputError(f"unknown class mode '{class_mode}'")
    if not h.is_subgroup_of(group) or not k.is_subgroup_of(group):
        raise InputError("H and K must be subgroups of G")

    if class_mode == "auto":
        if group.order <= class_limit:
            class_mode = "classes"
        elif _is_symmetric(group):
            class_mode = "cycle_type"
        elif actions:
            class_mode = "scan"
        else:
            raise InputError(f"no feasible class mode for a group of order {group.order}")

    ambient = group.describe()
    if class_mode == "classes":
        table = conjugacy_classes(group, class_limit)
        counts_h = Counter(table.class_of(x) for x in enumerate_elements(h, limit))
        counts_k = Counter(table.class_of(x) for x in enumerate_elements(k, limit))
        certificate = _certificate(ambient, counts_h, counts_k, "classes", label=lambda x: str(table.representative(x)))
    elif class_mode == "cycle_type":
        if not _is_symmetric(group):
            raise InputError("cycle type classes require the full symmetric group")
        counts_h = Counter(cycle_type(x) for x in enumerate_elements(h, limit))
        counts_k = Counter(cycle_type(x) for x in enumerate_elements(k, limit))
        certificate = _certificate(ambient, counts_h, counts_k, "cycle_type")
    else:
        if not actions:
            raise InputError("scan mode requires the actions of the ambient group")
        counts_h = fix_profile(h, actions, workers=workers, limit=limit)
        counts_k = fix_profile(k, actions, workers=workers, limit=limit)
        certificate = _certificate(
            ambient, counts_h, counts_k, "scan", exact=False, label=lambda x: "fix " + ",".join(str(y) for y in x)
        )

    logger.info(f"almost-conjugacy by {certificate.mode}: {len(certificate.entries)} classes, verdict {certificate.verdict}")
    return certificate.verdict, certificate

def regular_pair_almost_conjugate(stats_h: OrderStatistics, stats_k: OrderStatistics) -> Tuple[bool, GassmannCertificate]:
    """
    Two groups of order n, embedded regularly in S_n, are almost-conjugate iff they have the same
    number of elements of every order: an element of order k acts with n/k cycles of length k.
        :raises InputError: if the group orders differ
    """
    n = stats_h.group_order
    if stats_k.group_order != n:
        raise InputError(f"group orders differ: {n} and {stats_k.group_order}")

    def by_type(stats: OrderStatistics) -> Dict[CycleType, int]:
        return {CycleType([k] * (n // k)): v for k, v in stats.counts.items()}

    certificate = _certificate(f"S{n}", by_type(stats_h), by_type(stats_k), "cycle_type")
    return certificate.verdict, certificate

def coset_fix_count(class_count: int, centralizer_order: int, subgroup_order: int) -> int:
    """
    The number of right cosets of H fixed by g: |C and H| * |C_G(g)| / |H| with C the class of g
        :raises InputError: if the division is not exact
    """
    count, remainder = divmod(class_count * centralizer_order, subgroup_order)
    if remainder:
        raise InputError("inconsistent class data: fixed coset count is not an integer")
    return count

def condition_one(group: PermGroup, h: PermGroup, k: PermGroup, class_limit: Union[None, int]=None) -> bool:
    """
    Whether every element of H is conjugate in G to some element of K
    """
    table = conjugacy_classes(group, class_limit)
    classes_k = {table.class_of(x) for x in enumerate_elements(k)}
    return all(table.class_of(x) in classes_k for x in enumerate_elements(h))
