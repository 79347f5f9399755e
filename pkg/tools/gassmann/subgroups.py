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
Subgroup lattices of small permutation groups and the search for Gassmann pairs

:class: GroupTable
The elements of a small group with its multiplication table

:class: SubgroupLattice
All subgroups up to a given order, grouped into conjugacy classes

:def: enumerate_subgroups
One representative of every conjugacy class of subgroups

:def: search_gassmann_pairs
All non-conjugate almost-conjugate subgroup pairs of a group
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict

from .. import LimitError
from ..config import RunConfig
from ..perm import Permutation, PermGroup, enumerate_elements, conjugacy_classes
from .certificate import GassmannCertificate

import numpy as np
import logging

logger = logging.getLogger(__name__)

class GroupTable:
    """
    The elements of a group in sorted order, the identity first, with the multiplication table.
    Elements are identified by their images of the base points.
        :param group: the group
        :param limit: largest allowed order, defaults to RunConfig.MAX_SUBGROUP_ORDER
        :raises LimitError: if the group order exceeds the limit
    """
    def __init__(self, group: PermGroup, limit: Union[None, int]=None) -> None:
        limit = RunConfig.MAX_SUBGROUP_ORDER if limit is None else limit
        if group.order > limit:
            raise LimitError(f"group order {group.order} exceeds the subgroup enumeration limit {limit}")

        self.group: PermGroup = group
        self.elements: List[Permutation] = sorted(enumerate_elements(group))
        self.index: Dict[Permutation, int] = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)

        images = np.array([x.images for x in self.elements], dtype=np.int32).reshape(n, group.degree)
        base = list(group.base)
        lookup = {images[i, base].tobytes(): i for i in range(n)}

        # row x, column y: the product x*y, whose base images are y[x[b]]
        self.table: np.ndarray = np.empty((n, n), dtype=np.int32)
        for x in range(n):
            products = np.ascontiguousarray(images[:, images[x, base]])
            self.table[x] = [lookup[row.tobytes()] for row in products]

        self.inverse: np.ndarray = np.argmin(self.table, axis=1).astype(np.int32)
        self.generators: List[int] = [self.index[x] for x in group.generators]

    def conjugation(self, g: int) -> np.ndarray:
        """
        The map x -> g^-1*x*g on element numbers
        """
        return self.table[self.table[self.inverse[g]], g]

    def closure(self, generators: List[int]) -> List[int]:
        """
        The element numbers of the subgroup generated by the elements, in discovery order
        """
        members = [0]
        seen = {0}
        for x in members:
            for g in generators:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    members.append(y)
        return members

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"(GroupTable:{len(self.elements)})"

def _mask(members: List[int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << x
    return mask

class SubgroupLattice:
    """
    All subgroups of order at most max_order, found by the cyclic extension method: starting from
    the cyclic subgroups every known subgroup is extended by each cyclic subgroup it does not
    contain. Subgroups are stored as bitmasks over the element numbers of a GroupTable.
        :param group: the group
        :param max_order: the largest subgroup order to collect, defaults to the group order
        :param limit: largest allowed group order, defaults to RunConfig.MAX_SUBGROUP_ORDER
        :raises LimitError: if the group order exceeds the limit
    """
    def __init__(self, group: PermGroup, max_order: Union[None, int]=None, limit: Union[None, int]=None) -> None:
        self.group: PermGroup = group
        self.table: GroupTable = GroupTable(group, limit)
        self.max_order: int = group.order if max_order is None else max_order

        self.generators: Dict[int, List[int]] = {}
        self.members: Dict[int, List[int]] = {}
        self._extend()

        self.classes: List[List[int]] = []
        self._conjugacy()
        logger.info(
            f"subgroup lattice of a group of order {group.order}: {len(self.members)} subgroups in {len(self.classes)} classes"
        )

    def _add(self, generators: List[int], members: List[int]) -> Union[None, int]:
        mask = _mask(members)
        if mask in self.members:
            return None
        self.members[mask] = sorted(members)
        self.generators[mask] = generators
        return mask

    def _extend(self) -> None:
        table = self.table
        self._add([], [0])

        cyclic: List[Tuple[int, int]] = []
        for x in range(1, len(table)):
            members = table.closure([x])
            if len(members) > self.max_order:
                continue
            mask = self._add([x], members)
            if mask is not None:
                cyclic.append((mask, x))

        layer = [x for x, _ in cyclic]
        while layer:
            logger.debug(f"cyclic extension layer of {len(layer)} subgroups")
            discovered = []
            for mask in layer:
                for c_mask, c in cyclic:
                    if c_mask & ~mask == 0:
                        continue
                    generators = self.generators[mask] + [c]
                    members = table.closure(generators)
                    if len(members) > self.max_order:
                        continue
                    extended = self._add(generators, members)
                    if extended is not None:
                        discovered.append(extended)
            layer = discovered

    def _conjugacy(self) -> None:
        table = self.table
        maps = [table.conjugation(g) for g in table.generators]
        assigned: Dict[int, int] = {}
        for mask in sorted(self.members, key=lambda x: (len(self.members[x]), self.members[x])):
            if mask in assigned:
                continue
            number = len(self.classes)
            orbit = [mask]
            assigned[mask] = number
            for x in orbit:
                members = self.members[x]
                for conjugate in maps:
                    y = _mask(int(conjugate[i]) for i in members)
                    if y not in assigned:
                        assigned[y] = number
                        orbit.append(y)
            self.classes.append(orbit)
        self._class_of = assigned

    def order(self, mask: int) -> int:
        return len(self.members[mask])

    def is_normal(self, mask: int) -> bool:
        return len(self.classes[self._class_of[mask]]) == 1

    def subgroup(self, mask: int) -> PermGroup:
        """
        The subgroup as a permutation group on the points of the ambient group
        """
        elements = self.table.elements
        return PermGroup([elements[x] for x in self.generators[mask]], self.group.degree)

    def representatives(self) -> List[int]:
        """
        The first subgroup of every conjugacy class, by order then elements
        """
        return [x[0] for x in self.classes]

    def normal_subgroups(self) -> List[PermGroup]:
        """
        The normal subgroups, by increasing order
        """
        return [self.subgroup(x[0]) for x in self.classes if len(x) == 1]

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"(SubgroupLattice:{len(self.members)} subgroups, {len(self.classes)} classes)"

def enumerate_subgroups(group: PermGroup, max_order: Union[None, int]=None, limit: Union[None, int]=None) -> List[PermGroup]:
    """
    One representative per conjugacy class of subgroups of order at most max_order, by increasing order
        :raises LimitError: if the group order exceeds the subgroup enumeration limit
    """
    lattice = SubgroupLattice(group, max_order, limit)
    return [lattice.subgroup(x) for x in lattice.representatives()]

def search_gassmann_pairs(
    group: PermGroup, max_order: Union[None, int]=None, limit: Union[None, int]=None,
    class_limit: Union[None, int]=None
) -> List[Tuple[PermGroup, PermGroup, GassmannCertificate]]:
    """
    All unordered pairs of non-conjugate subgroups meeting every conjugacy class of G equally.
    Pairs are ordered by subgroup order, then by the position of the classes in the lattice.
        :raises LimitError: if the group is too large for the subgroup lattice
    """
    if group.is_abelian():
        return []

    lattice = SubgroupLattice(group, max_order, limit)
    classes = conjugacy_classes(group, class_limit)
    class_of = [classes.class_of(x) for x in lattice.table.elements]

    by_vector: Dict[Tuple[int, ...], List[int]] = {}
    for mask in lattice.representatives():
        vector = [0] * len(classes)
        for x in lattice.members[mask]:
            vector[class_of[x]] += 1
        by_vector.setdefault(tuple(vector), []).append(mask)

    ambient = group.describe()
    pairs = []
    for vector, masks in by_vector.items():
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                entries = [(str(classes.representative(c)), n, n) for c, n in enumerate(vector) if n]
                pairs.append((lattice.order(a), a, b, entries))

    pairs.sort(key=lambda x: (x[0], lattice.representatives().index(x[1]), lattice.representatives().index(x[2])))
    logger.info(f"{len(pairs)} Gassmann pairs in a group of order {group.order}")
    return [
        (lattice.subgroup(a), lattice.subgroup(b), GassmannCertificate(ambient, entries, "classes"))
        for _, a, b, entries in pairs
    ]
