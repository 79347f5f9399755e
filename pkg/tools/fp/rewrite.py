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
Reidemeister–Schreier rewriting and abelianized relation matrices

:def: schreier_generators
The nontrivial Schreier words of the subgroup belonging to a coset table

:def: reidemeister_schreier
A presentation of the subgroup belonging to a coset table

:def: abelianized_relation_matrix
The exponent sum matrix of a presentation
"""

from __future__ import annotations
from typing import List, Dict, Tuple

from .. import InputError
from ..snf import IntMatrix
from .word import Word
from .presentation import Presentation
from .coset import CosetTable

import logging

logger = logging.getLogger(__name__)

def _letter(column: int) -> int:
    return column // 2 + 1 if column % 2 == 0 else -(column // 2 + 1)

def _spanning_tree(table: CosetTable) -> List[Word]:
    """
    Coset representatives along a breadth first spanning tree from coset 0
    """
    if not table.complete:
        raise InputError("coset table is incomplete")
    representatives = {0: Word()}
    queue = [0]
    for coset in queue:
        for column, image in enumerate(table.table[coset]):
            if image not in representatives:
                representatives[image] = representatives[coset] * Word([_letter(column)])
                queue.append(image)
    if len(representatives) != table.num_cosets:
        raise InputError("coset table is not transitive")
    return [representatives[x] for x in range(table.num_cosets)]

def _schreier_index(table: CosetTable) -> Tuple[List[Word], Dict[Tuple[int, int], int], List[str]]:
    """
    Numbers the nontrivial Schreier generators rep(c)*g*rep(c*g)^-1 by (coset, generator)
    """
    representatives = _spanning_tree(table)
    names = table.presentation.generator_names
    words: List[Word] = []
    index: Dict[Tuple[int, int], int] = {}
    labels: List[str] = []
    for coset in range(table.num_cosets):
        for generator in range(table.presentation.num_generators):
            image = table.table[coset][2 * generator]
            word = representatives[coset] * Word.generator(generator) * representatives[image].inverse()
            if word:
                index[(coset, generator)] = len(words)
                words.append(word)
                labels.append(f"{names[generator]}_{coset}")
    return words, index, labels

def schreier_generators(table: CosetTable) -> List[Word]:
    """
    Words generating the stabilizer of coset 0: one per table edge off the spanning tree
        :raises InputError: if the table is incomplete
    """
    return _schreier_index(table)[0]

def reidemeister_schreier(presentation: Presentation, table: CosetTable) -> Presentation:
    """
    A presentation of the subgroup stabilizing coset 0. The generators are the nontrivial
    Schreier generators, named <generator>_<coset>; the relators are the relators of the
    presentation traced from every coset and rewritten in the Schreier generators.
        :param presentation: the group presentation
        :param table: a complete coset table of the presentation
        :raises InputError: if the table is incomplete or belongs to another presentation
    """
    if table.presentation != presentation:
        raise InputError("coset table belongs to another presentation")
    words, index, labels = _schreier_index(table)

    relators: List[Word] = []
    seen = set()
    for start in range(table.num_cosets):
        for relator in presentation.relators:
            coset = start
            letters = []
            for letter in relator:
                generator = abs(letter) - 1
                if letter > 0:
                    number = index.get((coset, generator))
                    if number is not None:
                        letters.append(number + 1)
                    coset = table.table[coset][2 * generator]
                else:
                    coset = table.table[coset][2 * generator + 1]
                    number = index.get((coset, generator))
                    if number is not None:
                        letters.append(-(number + 1))
            rewritten = Word(letters)
            if rewritten and rewritten not in seen:
                seen.add(rewritten)
                relators.append(rewritten)

    logger.debug(f"Reidemeister–Schreier: index {table.num_cosets}, {len(words)} generators, {len(relators)} relators")
    name = f"index {table.num_cosets} subgroup of {presentation.name}" if presentation.name else None
    return Presentation(labels, relators, name=name)

def abelianized_relation_matrix(presentation: Presentation) -> IntMatrix:
    """
    One row per relator, one column per generator, entries are exponent sums
    """
    return IntMatrix(
        [[relator.exponent_sum(i) for i in range(presentation.num_generators)] for relator in presentation.relators],
        cols=presentation.num_generators
    )
