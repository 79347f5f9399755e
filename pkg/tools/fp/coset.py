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
Coset enumeration and coset actions of finitely presented groups

:class: CosetTable
A complete coset table of a finite index subgroup

:def: todd_coxeter
HLT coset enumeration with lookahead

:def: coset_action
The permutation action of the generators on the cosets

:def: coset_table_from_hom
The coset table of a preimage subgroup, read off a homomorphism to a permutation group
"""

from __future__ import annotations
from typing import Union, List, Sequence, Dict, Any

from .. import InputError, LimitError
from ..config import RunConfig
from ..perm import Permutation, PermGroup, CosetSpace
from .word import Word
from .presentation import Presentation

import logging

logger = logging.getLogger(__name__)

def _column(letter: int) -> int:
    """
    Column of a letter: generator i uses column 2i, its inverse column 2i+1
    """
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1

class CosetTable:
    """
    The right action of the generators on the cosets of a subgroup. Coset 0 is the subgroup
    itself, table[c][2i] is c*g_i and table[c][2i+1] is c*g_i^-1
        :param presentation: the presentation of the group
        :param table: the rows of the table
        :param subgroup_words: words generating the subgroup
        :param complete: whether every entry is defined
    """
    def __init__(
        self, presentation: Presentation, table: List[List[Union[None, int]]],
        subgroup_words: Sequence[Word]=(), complete: bool=True
    ) -> None:
        self.presentation: Presentation = presentation
        self.table: List[List[Union[None, int]]] = table
        self.subgroup_words: List[Word] = list(subgroup_words)
        self.complete: bool = complete

    @property
    def num_cosets(self) -> int:
        return len(self.table)

    def act(self, coset: int, word: Word) -> int:
        """
        Returns coset*word
            :raises InputError: if the table is not complete along the word
        """
        for letter in word:
            image = self.table[coset][_column(letter)]
            if image is None:
                raise InputError("coset table is incomplete")
            coset = image
        return coset

    def verify(self) -> bool:
        """
        Checks the complete table: columns of a generator and its inverse are mutually inverse,
        every relator traces to the identity from every coset and every subgroup word fixes coset 0
        """
        if not self.complete:
            return False
        for coset, row in enumerate(self.table):
            for column, image in enumerate(row):
                if image is None or self.table[image][column ^ 1] != coset:
                    return False
        for relator in self.presentation.relators:
            for coset in range(self.num_cosets):
                if self.act(coset, relator) != coset:
                    return False
        return all(self.act(0, x) == 0 for x in self.subgroup_words)

    def export(self) -> Dict[str, Any]:
        return {
            "index": self.num_cosets,
            "subgroup": [self.presentation.format_word(x) for x in self.subgroup_words],
            "table": [list(x) for x in self.table]
        }

    def __repr__(self) -> str:
        return f"(CosetTable:{self.num_cosets} cosets)"

class _CosetLimit(Exception):
    """Raised internally when a definition would exceed the live coset limit"""
    pass

class _Enumerator:
    """
    HLT coset enumeration. Coincidences are merged through a union-find forest with path
    compression. When a definition would exceed the live coset limit, a lookahead pass scans every
    live coset without defining, and the interrupted coset is processed again.
    """
    def __init__(self, presentation: Presentation, subgroup: Sequence[Word], max_cosets: int) -> None:
        self.columns = 2 * presentation.num_generators
        self.relators = [[_column(x) for x in relator] for relator in presentation.relators]
        self.subgroup = [[_column(x) for x in word] for word in subgroup]
        self.max_cosets = max_cosets

        self.table: List[List[Union[None, int]]] = []
        self.parent: List[int] = []
        self.live = 0
        self.definitions = 0

    ## Union-find
    def rep(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def merge(self, a: int, b: int, queue: List[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.parent[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: List[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            for column in range(self.columns):
                image = self.table[dead][column]
                if image is None:
                    continue
                self.table[image][column ^ 1] = None
                mu = self.rep(dead)
                nu = self.rep(image)
                if self.table[mu][column] is not None:
                    self.merge(nu, self.table[mu][column], queue)
                elif self.table[nu][column ^ 1] is not None:
                    self.merge(mu, self.table[nu][column ^ 1], queue)
                else:
                    self.table[mu][column] = nu
                    self.table[nu][column ^ 1] = mu

    ## Definitions and scans
    def new_coset(self) -> int:
        coset = len(self.table)
        self.table.append([None] * self.columns)
        self.parent.append(coset)
        self.live += 1
        return coset

    def define(self, coset: int, column: int) -> None:
        if self.live >= self.max_cosets:
            raise _CosetLimit
        image = self.new_coset()
        self.definitions += 1
        self.table[coset][column] = image
        self.table[image][column ^ 1] = coset

    def scan(self, coset: int, word: List[int], fill: bool) -> None:
        """
        Traces the word around the coset from both ends. With fill, missing entries are defined until
        the word closes; without fill only deductions and coincidences are recorded
        """
        table = self.table
        forward, i = coset, 0
        backward, j = coset, len(word) - 1
        while True:
            while i <= j and table[forward][word[i]] is not None:
                forward = table[forward][word[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and table[backward][word[j] ^ 1] is not None:
                backward = table[backward][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                table[forward][word[i]] = backward
                table[backward][word[i] ^ 1] = forward
                return
            if not fill:
                return
            self.define(forward, word[i])

    def look_ahead(self) -> None:
        before = self.live
        for coset in range(len(self.table)):
            for relator in self.relators:
                if not self.is_live(coset):
                    break
                self.scan(coset, relator, fill=False)
        logger.debug(f"lookahead at the coset limit: {before} -> {self.live} live cosets")

    def process(self, coset: int) -> None:
        for relator in self.relators:
            if not self.is_live(coset):
                return
            self.scan(coset, relator, fill=True)
        if self.is_live(coset):
            for column in range(self.columns):
                if self.table[coset][column] is None:
                    self.define(coset, column)

    def guarded(self, step) -> None:
        """
        Runs a step, retrying it after a lookahead when the coset limit interrupts it
            :raises LimitError: if the lookahead frees no room
        """
        while True:
            try:
                step()
                return
            except _CosetLimit:
                self.look_ahead()
                if self.live >= self.max_cosets:
                    raise LimitError(f"coset enumeration exceeded {self.max_cosets} cosets") from None

    ## Driver
    def run(self) -> None:
        self.new_coset()
        for word in self.subgroup:
            self.guarded(lambda: self.scan(0, word, fill=True))

        coset = 0
        while coset < len(self.table):
            if self.is_live(coset):
                self.guarded(lambda: self.process(coset))
            coset += 1

    def standardized(self) -> List[List[int]]:
        """
        Renumbers the live cosets in breadth first order from coset 0, scanning columns in order
        """
        order = {self.rep(0): 0}
        queue = [self.rep(0)]
        for coset in queue:
            for column in range(self.columns):
                image = self.rep(self.table[coset][column])
                if image not in order:
                    order[image] = len(order)
                    queue.append(image)
        table = [[0] * self.columns for _ in queue]
        for coset in queue:
            for column in range(self.columns):
                table[order[coset]][column] = order[self.rep(self.table[coset][column])]
        return table

def todd_coxeter(
    presentation: Presentation, subgroup: Sequence[Word]=(), max_cosets: Union[None, int]=None
) -> CosetTable:
    """
    Enumerates the cosets of the subgroup generated by the words. The returned table is complete,
    standardized and its size is the exact index
        :param presentation: the group presentation
        :param subgroup: subgroup generators, empty for the trivial subgroup
        :param max_cosets: coset limit, defaults to RunConfig.MAX_COSETS
        :raises InputError: if max_cosets is not positive
        :raises LimitError: when the enumeration does not close within the limit. This means unknown,
            not infinite
    """
    max_cosets = RunConfig.MAX_COSETS if max_cosets is None else max_cosets
    if max_cosets < 1:
        raise InputError("max_cosets must be positive")
    for word in subgroup:
        if word.max_generator() >= presentation.num_generators:
            raise InputError(f"subgroup word {word} uses an unknown generator")

    enumerator = _Enumerator(presentation, subgroup, max_cosets)
    enumerator.run()
    table = enumerator.standardized()
    logger.info(f"coset enumeration closed: index {len(table)}, {enumerator.definitions} cosets defined")
    return CosetTable(presentation, table, subgroup, complete=True)

def coset_action(table: CosetTable) -> PermGroup:
    """
    The permutation group generated by the generator actions on the cosets. Generator i maps
    to the permutation c -> c*g_i
        :raises InputError: if the table is incomplete
    """
    if not table.complete or any(x is None for row in table.table for x in row):
        raise InputError("coset action of an incomplete table")
    generators = [
        Permutation([row[2 * i] for row in table.table])
        for i in range(table.presentation.num_generators)
    ]
    return PermGroup(generators, table.num_cosets)

def coset_table_from_hom(
    presentation: Presentation, hom: "HomomorphismSpec", subgroup: PermGroup,
    max_degree: Union[None, int]=None
) -> CosetTable:
    """
    The coset table of phi^-1(H) in the presented group, built from the right cosets of H in the
    target. Cosets of phi^-1(H) correspond to cosets of H because phi is surjective.
        :param presentation: the source presentation of hom
        :param hom: the surjection phi
        :param subgroup: H, a subgroup of the target
        :param max_degree: index limit, defaults to RunConfig.MAX_COSET_DEGREE
        :raises InputError: if phi is not surjective or H is not contained in the target
        :raises LimitError: if the index exceeds max_degree ("index too large")
    """
    from .rewrite import schreier_generators

    if hom.source != presentation:
        raise InputError("homomorphism source differs from the presentation")
    if not hom.surjective:
        raise InputError("homomorphism is not surjective")

    images = []
    for image in hom.images:
        images.append(image)
        images.append(image.inverse())
    cosets = CosetSpace(hom.target, subgroup, max_degree, generators=images)

    table = [
        [cosets.index_of(representative * image) for image in images]
        for representative in cosets.representatives
    ]

    output = CosetTable(presentation, table, complete=True)
    output.subgroup_words = schreier_generators(output)
    logger.info(f"coset table of a preimage subgroup: index {len(cosets)}")
    return output
