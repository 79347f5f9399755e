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
Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

:class: PermGroup
A permutation group with base, strong generators and transversals

:def: build_group
Builds a PermGroup from a generator list

:def: enumerate_elements
Streams every element of a group exactly once

:def: setwise_stabilizer
Returns the subgroup mapping a point set onto itself

:def: normal_closure
Returns the smallest normal subgroup containing a set of elements

:def: derived_subgroup
Returns the commutator subgroup

:def: is_k_transitive
Whether a group acts transitively on ordered k-tuples of distinct points

:class: CosetSpace
The right cosets of a subgroup with canonical coset representatives
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict, Sequence, Iterator

from .. import InputError, LimitError
from ..config import RunConfig
from .permutation import Permutation

from collections import deque
import logging

logger = logging.getLogger(__name__)

class PermGroup:
    """
    A permutation group on the points 0..degree-1. The stabilizer chain is computed on
    construction by the deterministic Schreier–Sims algorithm, so the order and membership
    test are exact and reproducible for a fixed generator list.
        :param generators: the generating permutations
        :param degree: the number of points, required when generators is empty
        :param base: optional prefix of the base; remaining base points are first moved points
        :param name: optional human readable description
        :raises InputError: on degree mismatch or invalid base points
    """
    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: Union[None, int]=None,
        base: Union[None, Sequence[int]]=None,
        name: Union[None, str]=None
    ) -> None:
        generators = list(generators)
        if degree is None:
            if not generators:
                raise InputError("the degree of a group without generators must be given")
            degree = generators[0].degree
        for generator in generators:
            if generator.degree != degree:
                raise InputError(f"generator degree {generator.degree} does not match group degree {degree}")

        self.degree: int = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.name: Union[None, str] = name

        self.base: List[int] = []
        self._strong: List[List[Permutation]] = []
        self._transversals: List[Dict[int, Tuple[Permutation, Permutation]]] = []
        self._identity: Permutation = Permutation.identity(degree)

        self._schreier_sims(base)

        self.order: int = 1
        for transversal in self._transversals:
            self.order *= len(transversal)

    ## Stabilizer chain
    def _schreier_sims(self, prefix: Union[None, Sequence[int]]) -> None:
        """
        Deterministic Schreier–Sims. Levels are checked from the deepest up; when a Schreier
        generator does not sift, its residue extends the strong generators of the levels it
        reached and checking restarts at the deepest touched level.
        """
        generators = [x for x in self.generators if not x.is_identity()]

        if prefix:
            for point in prefix:
                if point < 0 or point >= self.degree:
                    raise InputError(f"base point {point} outside of degree {self.degree}")
                if point in self.base:
                    raise InputError(f"base point {point} occurs twice")
                self.base.append(point)

        for generator in generators:
            if all(generator.images[b] == b for b in self.base):
                self.base.append(generator.first_moved_point())

        for i in range(len(self.base)):
            fixed = self.base[:i]
            self._strong.append([x for x in generators if all(x.images[b] == b for b in fixed)])
            self._transversals.append(self._orbit_transversal(i))

        i = len(self.base) - 1
        while i >= 0:
            restart = self._check_level(i)
            if restart is None:
                i -= 1
            else:
                i = restart

        logger.debug(f"stabilizer chain: base {self.base}, orbits {[len(x) for x in self._transversals]}")

    def _orbit_transversal(self, level: int) -> Dict[int, Tuple[Permutation, Permutation]]:
        """
        Breadth first orbit of the base point of a level, mapping each orbit point to a
        (coset representative, inverse) pair. The representative maps the base point to the orbit point.
        """
        point = self.base[level]
        transversal = {point: (self._identity, self._identity)}
        queue = [point]
        for point in queue:
            u = transversal[point][0]
            for s in self._strong[level]:
                image = s.images[point]
                if image not in transversal:
                    w = u * s
                    transversal[image] = (w, w.inverse())
                    queue.append(image)
        return transversal

    def _check_level(self, level: int) -> Union[None, int]:
        """
        Sifts all Schreier generators of a level. Returns the level to restart at after the
        chain was extended, or None if all generators sift
        """
        transversal = self._transversals[level]
        for point, (u, _) in list(transversal.items()):
            for s in self._strong[level]:
                h = u * s * transversal[s.images[point]][1]
                if h.is_identity():
                    continue
                residue, depth = self._strip(h, level + 1)
                if depth == len(self.base) and residue.is_identity():
                    continue

                if depth == len(self.base):
                    self.base.append(residue.first_moved_point())
                    self._strong.append([])
                    self._transversals.append({})
                for extend in range(level + 1, depth + 1):
                    self._strong[extend].append(residue)
                    self._transversals[extend] = self._orbit_transversal(extend)
                return depth
        return None

    def _strip(self, g: Permutation, start: int=0) -> Tuple[Permutation, int]:
        """
        Sifts g through the chain from level start. Returns the residue and the level at which
        sifting stopped (len(base) if it passed all levels)
        """
        for level in range(start, len(self.base)):
            entry = self._transversals[level].get(g.images[self.base[level]])
            if entry is None:
                return g, level
            g = g * entry[1]
        return g, len(self.base)

    ## Queries
    @property
    def identity(self) -> Permutation:
        return self._identity

    @property
    def transversals(self) -> List[List[Permutation]]:
        """
        The coset representatives of each chain level, level 0 outermost
        """
        return [[u for u, _ in x.values()] for x in self._transversals]

    def orbit_sizes(self) -> List[int]:
        return [len(x) for x in self._transversals]

    def level_generators(self, level: int) -> List[Permutation]:
        """
        Strong generators of the pointwise stabilizer of the first `level` base points
        """
        if level >= len(self.base):
            return []
        return list(self._strong[level])

    def contains(self, g: Permutation) -> bool:
        """
        Membership test by sifting
            :raises InputError: on degree mismatch
        """
        if g.degree != self.degree:
            raise InputError(f"permutation degree {g.degree} does not match group degree {self.degree}")
        residue, depth = self._strip(g)
        return depth == len(self.base) and residue.is_identity()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        if self.degree != other.degree:
            return False
        return all(other.contains(x) for x in self.generators)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1:]:
                if a * b != b * a:
                    return False
        return True

    def orbit(self, point: int) -> List[int]:
        orbit = [point]
        seen = {point}
        for x in orbit:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        return orbit

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def elements(self, limit: Union[None, int]=None) -> Iterator[Permutation]:
        return enumerate_elements(self, limit)

    def describe(self) -> str:
        """
        Short description: name (if any), degree and order
        """
        if self.name:
            return f"{self.name} (degree {self.degree}, order {self.order})"
        return f"group of degree {self.degree}, order {self.order}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.order == other.order and self.is_subgroup_of(other)

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"(PermGroup[{self.degree}]:{self.order})"

    def __str__(self) -> str:
        generators = ", ".join(str(x) for x in self.generators) if self.generators else "()"
        return f"<{generators}> {self.describe()}"

def build_group(generators: Sequence[Permutation], degree: Union[None, int]=None, name: Union[None, str]=None) -> PermGroup:
    """
    Builds the group generated by the permutations
        :param generators: the generators, all of one degree
        :param degree: required if generators is empty
        :raises InputError: on degree mismatch
    """
    return PermGroup(generators, degree, name=name)

def enumerate_elements(group: PermGroup, limit: Union[None, int]=None) -> Iterator[Permutation]:
    """
    Yields every element of the group exactly once, as products u_k*...*u_1*u_0 of
    transversal elements, the deepest level first
        :param group: the group to enumerate
        :param limit: the enumeration limit, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises LimitError: if the group order exceeds the limit
    """
    limit = RunConfig.MAX_ENUMERATION_ORDER if limit is None else limit
    if group.order > limit:
        raise LimitError(f"group order {group.order} exceeds the enumeration limit {limit}")

    levels = group.transversals

    def walk(level: int, accumulated: Permutation) -> Iterator[Permutation]:
        if level < 0:
            yield accumulated
            return
        for u in levels[level]:
            yield from walk(level - 1, accumulated * u)

    yield from walk(len(levels) - 1, group.identity)

def setwise_stabilizer(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """
    Returns {g in G : g(S) = S} by backtracking over a stabilizer chain whose base starts
    with the points of S. A branch is pruned as soon as a base point of S is mapped outside S.
        :param group: the group G
        :param points: the set S
        :raises InputError: if a point is out of range
    """
    subset = sorted(set(points))
    for point in subset:
        if point < 0 or point >= group.degree:
            raise InputError(f"point {point} outside of degree {group.degree}")

    in_set = set(subset)
    if not subset or len(subset) == group.degree:
        return group
    if all({g.images[x] for x in subset} == in_set for g in group.generators):
        return group

    chain = PermGroup(group.generators, group.degree, base=subset)
    depth = len(subset)
    transversals = chain._transversals
    found = PermGroup(chain.level_generators(depth), group.degree)
    generators = list(found.generators)

    def search(level: int, suffix: Permutation) -> None:
        nonlocal found
        if level == depth:
            if not found.contains(suffix):
                generators.append(suffix)
                found = PermGroup(generators, group.degree)
            return
        for point, (u, _) in transversals[level].items():
            if suffix.images[point] in in_set:
                search(level + 1, u * suffix)

    search(0, chain.identity)
    logger.debug(f"setwise stabilizer of {len(subset)} points has order {found.order}")
    return found

def commutator(a: Permutation, b: Permutation) -> Permutation:
    """
    Returns a^-1 * b^-1 * a * b
    """
    return a.inverse() * b.inverse() * a * b

def normal_closure(group: PermGroup, elements: Sequence[Permutation]) -> PermGroup:
    """
    Returns the smallest normal subgroup of the group containing the elements
        :param group: the ambient group
        :param elements: elements of the ambient group
    """
    generators = [x for x in elements if not x.is_identity()]
    closure = PermGroup(generators, group.degree)
    queue = deque(generators)
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = x.conjugate(g)
            if not closure.contains(y):
                generators.append(y)
                closure = PermGroup(generators, group.degree)
                queue.append(y)
    return closure

def derived_subgroup(group: PermGroup) -> PermGroup:
    """
    Returns the commutator subgroup: the normal closure of the commutators of all generator pairs
    """
    generators = group.generators
    commutators = []
    for i, a in enumerate(generators):
        for b in generators[i + 1:]:
            c = commutator(a, b)
            if not c.is_identity():
                commutators.append(c)
    derived = normal_closure(group, commutators)
    logger.debug(f"derived subgroup of order {derived.order} in a group of order {group.order}")
    return derived

def is_k_transitive(group: PermGroup, k: int) -> bool:
    """
    Whether the group acts transitively on ordered k-tuples of distinct points. Reads the orbit
    sizes along a chain with base prefix 0..k-1; these are n, n-1, .. n-k+1 exactly when
    the group is k-transitive.
    """
    if k > group.degree:
        return False
    chain = PermGroup(group.generators, group.degree, base=range(k))
    sizes = chain.orbit_sizes()
    return all(sizes[i] == group.degree - i for i in range(k))

class CosetSpace:
    """
    The right cosets H*g of a subgroup H in a group G. Each coset is identified by the images of its
    lexicographically smallest element, found greedily along a chain of H with full base 0..n-1.
    Cosets are numbered breadth first from H along the generators of G.
        :param group: the group G
        :param subgroup: the subgroup H
        :param max_degree: index limit, defaults to RunConfig.MAX_COSET_DEGREE
        :param generators: the elements of G to expand along, defaults to the generators of G
        :raises InputError: if H is not contained in G
        :raises LimitError: if the index exceeds max_degree
    """
    def __init__(
        self, group: PermGroup, subgroup: PermGroup, max_degree: Union[None, int]=None,
        generators: Union[None, Sequence[Permutation]]=None
    ) -> None:
        max_degree = RunConfig.MAX_COSET_DEGREE if max_degree is None else max_degree
        if not subgroup.is_subgroup_of(group):
            raise InputError("subgroup is not contained in the group")

        self.group: PermGroup = group
        self.subgroup: PermGroup = subgroup
        self.index: int = group.order // subgroup.order
        if self.index > max_degree:
            raise LimitError(f"index too large: {self.index} exceeds the coset degree limit {max_degree}")

        self._chain = PermGroup(subgroup.generators, group.degree, base=range(group.degree))
        self.representatives: List[Permutation] = [group.identity]
        self._lookup: Dict[Tuple[int, ...], int] = {self.key(group.identity): 0}

        generators = group.generators if generators is None else generators
        for representative in self.representatives:
            for generator in generators:
                g = representative * generator
                key = self.key(g)
                if key not in self._lookup:
                    self._lookup[key] = len(self.representatives)
                    self.representatives.append(g)
        if len(self.representatives) != self.index:
            raise InputError("the expansion elements do not generate the group")

    def key(self, g: Permutation) -> Tuple[int, ...]:
        """
        The images of the smallest element of H*g
        """
        for transversal in self._chain._transversals:
            best_point, best_u = None, None
            for point, (u, _) in transversal.items():
                if best_point is None or g.images[point] < g.images[best_point]:
                    best_point, best_u = point, u
            g = best_u * g
        return g.images

    def index_of(self, g: Permutation) -> int:
        """
        The number of the coset H*g
        """
        return self._lookup[self.key(g)]

    def action_of(self, g: Permutation) -> Permutation:
        """
        The permutation Hx -> Hxg of the cosets
        """
        return Permutation([self.index_of(x * g) for x in self.representatives], check=False)

    def __len__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"(CosetSpace:{self.index} cosets)"
