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
Conjugacy classes and abelianization data of permutation groups

:class: ConjugacyClassTable
The conjugacy classes of a group with a class lookup for each element

:def: conjugacy_classes
Computes the conjugacy classes by brute force conjugation orbits

:def: abelian_invariants_of_perm_group
Computes the invariant factors of G/G' from power subgroup layers
"""

from __future__ import annotations
from typing import List, Tuple, Dict, Iterator, Union

from .. import InputError, LimitError
from ..config import RunConfig
from ..snf import AbelianInvariants
from .permutation import Permutation
from .group import PermGroup, enumerate_elements, derived_subgroup

from sympy import factorint, multiplicity
import logging

logger = logging.getLogger(__name__)

class ConjugacyClassTable:
    """
    The conjugacy classes of a group. Classes are ordered by element order, then class size,
    then representative. Each representative is the smallest element (by images) of its class.
        :param group: the group
        :param classes: (representative, size) per class
        :param index: element to class number lookup
    """
    def __init__(self, group: PermGroup, classes: List[Tuple[Permutation, int]], index: Dict[Permutation, int]) -> None:
        self.group: PermGroup = group
        self.classes: List[Tuple[Permutation, int]] = classes
        self.total: int = sum(x[1] for x in classes)
        self._index: Dict[Permutation, int] = index

    def class_of(self, element: Permutation) -> int:
        """
        Returns the class number of an element
            :raises InputError: if the element is not in the group
        """
        try:
            return self._index[element]
        except KeyError:
            raise InputError(f"{element} is not an element of the group") from None

    def representative(self, number: int) -> Permutation:
        return self.classes[number][0]

    def size(self, number: int) -> int:
        return self.classes[number][1]

    def centralizer_order(self, number: int) -> int:
        return self.total // self.classes[number][1]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[Tuple[Permutation, int]]:
        return iter(self.classes)

    def __repr__(self) -> str:
        return f"(ConjugacyClassTable:{len(self.classes)} classes)"

    def __str__(self) -> str:
        output = f"{len(self.classes)} conjugacy classes, total {self.total}\n"
        for representative, size in self.classes:
            output += f"  order {representative.order():>3}  size {size:>8}  {representative}\n"
        return output

def conjugacy_classes(group: PermGroup, limit: Union[None, int]=None) -> ConjugacyClassTable:
    """
    Partitions the group into conjugation orbits
        :param group: the group
        :param limit: largest allowed group order, defaults to RunConfig.MAX_CLASS_ORDER
        :raises LimitError: if the group order exceeds the limit
    """
    limit = RunConfig.MAX_CLASS_ORDER if limit is None else limit
    if group.order > limit:
        raise LimitError(f"group order {group.order} exceeds the class computation limit {limit}")

    elements = sorted(enumerate_elements(group))
    inverses = [x.inverse() for x in group.generators]
    index: Dict[Permutation, int] = {}
    raw: List[List[Permutation]] = []
    for element in elements:
        if element in index:
            continue
        number = len(raw)
        index[element] = number
        orbit = [element]
        for x in orbit:
            for g, g_inverse in zip(group.generators, inverses):
                y = g_inverse * x * g
                if y not in index:
                    index[y] = number
                    orbit.append(y)
        raw.append(orbit)

    order = sorted(range(len(raw)), key=lambda i: (raw[i][0].order(), len(raw[i]), raw[i][0]))
    renumber = {old: new for new, old in enumerate(order)}
    classes = [(raw[i][0], len(raw[i])) for i in order]
    index = {x: renumber[i] for x, i in index.items()}

    logger.info(f"{len(classes)} conjugacy classes in a group of order {group.order}")
    return ConjugacyClassTable(group, classes, index)

def abelian_invariants_of_perm_group(group: PermGroup) -> AbelianInvariants:
    """
    Returns the invariant factors of the finite abelian group G/G'. For each prime p dividing
    [G:G'] the subgroups U_j = <G', g^(p^j) for g in the generators> are built; the index
    |U_j-1|/|U_j| = p^r_j gives the number r_j of cyclic p-factors of exponent >= j.
    """
    derived = derived_subgroup(group)
    quotient = group.order // derived.order
    if quotient == 1:
        return AbelianInvariants([], 0)

    prime_exponents: Dict[int, List[int]] = {}
    for prime in sorted(factorint(quotient)):
        previous = group.order
        power = prime
        layer_ranks: List[int] = []
        while True:
            layer = PermGroup(list(derived.generators) + [g ** power for g in group.generators], group.degree)
            rank = multiplicity(prime, previous // layer.order)
            if rank == 0:
                break
            layer_ranks.append(rank)
            previous = layer.order
            power *= prime
        # Exponent of the t-th largest cyclic factor: the number of layers of rank > t
        prime_exponents[prime] = [sum(1 for r in layer_ranks if r > t) for t in range(layer_ranks[0])]

    count = max(len(x) for x in prime_exponents.values())
    factors = []
    for t in range(count):
        factor = 1
        for prime, exponents in prime_exponents.items():
            if t < len(exponents):
                factor *= prime ** exponents[t]
        factors.append(factor)

    return AbelianInvariants(sorted(factors), 0)
