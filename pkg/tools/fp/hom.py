# -*- coding: utf-8 -*-

## Gassmann Tools Presentation ###############################################
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
Homomorphisms from finitely presented groups to permutation groups

:class: HomomorphismSpec
A verified homomorphism given by generator images

:class: HomSearchResult
The outcome of hom_search with its exhaustiveness flag

:def: hom_search
Enumerates all homomorphisms to a finite permutation group by backtracking
"""

from __future__ import annotations
from typing import Union, List, Sequence, Dict, Iterator

from .. import InputError
from ..config import RunConfig
from ..perm import Permutation, PermGroup, enumerate_elements
from .word import Word
from .presentation import Presentation

from math import gcd
import logging

logger = logging.getLogger(__name__)

class HomomorphismSpec:
    """
    A homomorphism phi from a presented group to a permutation group, given by one image per generator
        :param source: the presentation
        :param target: the target group
        :param images: the generator images
        :param injective: whether phi is known to be injective; derived from a known source order if omitted
        :raises InputError: if an image is not in the target or a relator does not map to the identity
    """
    def __init__(
        self, source: Presentation, target: PermGroup, images: Sequence[Permutation],
        injective: Union[None, bool]=None
    ) -> None:
        self.source: Presentation = source
        self.target: PermGroup = target
        self.images: List[Permutation] = list(images)

        if len(self.images) != source.num_generators:
            raise InputError(f"{len(self.images)} images for {source.num_generators} generators")
        for image in self.images:
            if not target.contains(image):
                raise InputError(f"image {image} is not an element of the target")
        for relator in source.relators:
            if not self.evaluate(relator).is_identity():
                raise InputError(f"relator {source.format_word(relator)} does not map to the identity: not a homomorphism")

        self.surjective: bool = PermGroup(self.images, target.degree).order == target.order
        if injective is None and source.order is not None:
            injective = self.surjective and source.order == target.order
        self.injective: Union[None, bool] = injective

    def evaluate(self, word: Word) -> Permutation:
        """
        Returns phi(word)
        """
        result = self.target.identity
        for letter in word:
            image = self.images[abs(letter) - 1]
            result = result * (image if letter > 0 else image.inverse())
        return result

    def export(self) -> Dict[str, str]:
        return {name: str(image) for name, image in zip(self.source.generator_names, self.images)}

    def describe(self) -> str:
        return ", ".join(f"{name} -> {image}" for name, image in zip(self.source.generator_names, self.images))

    def __repr__(self) -> str:
        return f"(HomomorphismSpec:{self.describe()})"

class HomSearchResult:
    """
    The homomorphisms found by hom_search
        homs: the homomorphisms, ordered by their image tuples
        exhaustive: False if the budget ran out before the search completed
        visited: the number of partial assignments visited
    """
    def __init__(self, homs: List[HomomorphismSpec], exhaustive: bool, visited: int) -> None:
        self.homs: List[HomomorphismSpec] = homs
        self.exhaustive: bool = exhaustive
        self.visited: int = visited

    def __len__(self) -> int:
        return len(self.homs)

    def __iter__(self) -> Iterator[HomomorphismSpec]:
        return iter(self.homs)

    def __getitem__(self, key: int) -> HomomorphismSpec:
        return self.homs[key]

    def __repr__(self) -> str:
        return f"(HomSearchResult:{len(self.homs)} homs{'' if self.exhaustive else ', partial'})"

def _power_constraints(presentation: Presentation) -> Dict[int, int]:
    """
    For relators g^e in a single generator, the image order of g must divide e
    """
    constraints: Dict[int, int] = {}
    for relator in presentation.relators:
        generators = set(relator.generator_indices)
        if len(generators) == 1:
            generator = generators.pop()
            exponent = abs(relator.exponent_sum(generator))
            if exponent and len(relator) == exponent:
                previous = constraints.get(generator, 0)
                constraints[generator] = gcd(previous, exponent)
    return constraints

def hom_search(
    presentation: Presentation, target: PermGroup, surjective_only: bool=False,
    budget: Union[None, int]=None, limit: Union[None, int]=None
) -> HomSearchResult:
    """
    Enumerates the homomorphisms by assigning target elements to the generators in order. A relator
    is checked as soon as all its generators are assigned; relators that are powers of a single
    generator restrict the candidate images by order.
        :param presentation: the source
        :param target: the finite target group
        :param surjective_only: keep only surjections
        :param budget: the number of partial assignments to visit, defaults to RunConfig.HOM_BUDGET
        :param limit: enumeration limit of the target, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises LimitError: if the target is too large to enumerate
        :returns: the homomorphisms, flagged non-exhaustive when the budget ran out
    """
    budget = RunConfig.HOM_BUDGET if budget is None else budget
    elements = sorted(enumerate_elements(target, limit))
    orders = {x: x.order() for x in elements}

    constraints = _power_constraints(presentation)
    candidates = []
    for generator in range(presentation.num_generators):
        exponent = constraints.get(generator)
        if exponent is None:
            candidates.append(elements)
        else:
            candidates.append([x for x in elements if exponent % orders[x] == 0])

    schedule: List[List[Word]] = [[] for _ in range(presentation.num_generators)]
    for relator in presentation.relators:
        if relator:
            schedule[relator.max_generator()].append(relator)

    identity = target.identity
    homs: List[HomomorphismSpec] = []
    assignment: List[Permutation] = []
    visited = 0
    exhaustive = True

    def evaluate(word: Word) -> Permutation:
        result = identity
        for letter in word:
            image = assignment[abs(letter) - 1]
            result = result * (image if letter > 0 else image.inverse())
        return result

    def search(generator: int) -> bool:
        nonlocal visited, exhaustive
        if generator == presentation.num_generators:
            hom = HomomorphismSpec(presentation, target, assignment)
            if hom.surjective or not surjective_only:
                homs.append(hom)
            return True
        for candidate in candidates[generator]:
            visited += 1
            if visited > budget:
                exhaustive = False
                return False
            assignment.append(candidate)
            if all(evaluate(x).is_identity() for x in schedule[generator]):
                if not search(generator + 1):
                    assignment.pop()
                    return False
            assignment.pop()
        return True

    search(0)
    if not exhaustive:
        logger.warning(f"hom_search budget of {budget} exhausted after {len(homs)} homomorphisms")
    logger.info(f"hom_search: {len(homs)} homomorphisms, {visited} assignments visited")
    return HomSearchResult(homs, exhaustive, visited)
