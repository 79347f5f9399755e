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
Permutation representations and fixed-point scans

:class: Action
A permutation representation of a group on a finite domain

:def: fix_profile
Histogram of fixed-point count signatures over all elements of a group

:def: perm_reps_equivalent
Whether two actions of a group have equal fixed-point counts on every element
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict, Sequence, Callable, FrozenSet, Iterable

from .. import InputError, LimitError
from ..config import RunConfig
from ..perm import Permutation, PermGroup, CosetSpace, conjugacy_classes

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
import numpy as np
import logging

logger = logging.getLogger(__name__)

# Number of elements handled in one vectorised block
BATCH_SIZE: int = 1 << 15

class Action:
    """
    A homomorphism rho: G -> Sym(domain) given by an image function
        :param group: the acting group G
        :param degree: the size of the domain
        :param image: function returning rho(g) for g in G
        :param name: description of the domain
    """
    def __init__(self, group: PermGroup, degree: int, image: Callable[[Permutation], Permutation], name: str) -> None:
        self.group: PermGroup = group
        self.degree: int = degree
        self._image: Callable[[Permutation], Permutation] = image
        self.name: str = name
        self._image_group: Union[None, PermGroup] = None

    @classmethod
    def natural(cls, group: PermGroup) -> Action:
        """
        The action of G on its points
        """
        return cls(group, group.degree, lambda g: g, "points")

    @classmethod
    def on_cosets(cls, group: PermGroup, subgroup: PermGroup, max_degree: Union[None, int]=None) -> Action:
        """
        The action Hx -> Hxg of G on the right cosets of H
            :raises InputError: if H is not a subgroup of G
            :raises LimitError: if the index exceeds max_degree
        """
        cosets = CosetSpace(group, subgroup, max_degree)
        return cls(group, len(cosets), cosets.action_of, f"cosets of a subgroup of order {subgroup.order}")

    @classmethod
    def on_blocks(cls, group: PermGroup, blocks: Sequence[Iterable[int]]) -> Action:
        """
        The action of G on a G-invariant family of point sets
            :raises InputError: if the family is not invariant under the generators
        """
        blocks = [frozenset(x) for x in blocks]
        lookup: Dict[FrozenSet[int], int] = {x: i for i, x in enumerate(blocks)}
        if len(lookup) != len(blocks):
            raise InputError("the block family contains duplicates")

        def image(g: Permutation) -> Permutation:
            try:
                return Permutation([lookup[frozenset(g.images[x] for x in block)] for block in blocks], check=False)
            except KeyError:
                raise InputError("the block family is not invariant under the group") from None

        for generator in group.generators:
            image(generator)
        size = len(blocks[0]) if blocks else 0
        return cls(group, len(blocks), image, f"{len(blocks)} blocks of size {size}")

    def image(self, g: Permutation) -> Permutation:
        return self._image(g)

    def generator_images(self) -> List[Permutation]:
        return [self._image(x) for x in self.group.generators]

    def image_group(self) -> PermGroup:
        """
        The image rho(G) as a permutation group of the domain
        """
        if self._image_group is None:
            self._image_group = PermGroup(self.generator_images(), self.degree, name=f"{self.group.name or 'group'} on {self.name}")
        return self._image_group

    def is_transitive(self) -> bool:
        return self.image_group().is_transitive()

    def stabilizer_order(self) -> int:
        """
        The order of the stabilizer of point 0 in G
            :raises InputError: if the action is not transitive
        """
        if not self.is_transitive():
            raise InputError("stabilizer order of an intransitive action")
        return self.group.order // self.degree

    def __repr__(self) -> str:
        return f"(Action:{self.degree} {self.name})"

def _level_arrays(group: PermGroup, action: Action) -> List[np.ndarray]:
    """
    Per chain level an array with the action images of the transversal elements, one row each
    """
    return [
        np.array([action.image(u).images for u in level], dtype=np.int32).reshape(len(level), action.degree)
        for level in group.transversals
    ]

def _split_level(sizes: Sequence[int], batch_size: int) -> int:
    """
    The first chain level of the vectorised block: the deep levels whose product fits in a batch
    """
    split = len(sizes)
    block = 1
    while split > 0 and block * sizes[split - 1] <= batch_size:
        split -= 1
        block *= sizes[split]
    return split

def _block(arrays: List[np.ndarray], split: int, degree: int) -> np.ndarray:
    """
    All products u_k*...*u_split of the deep levels as one (elements, degree) array. The image of
    x*u is u[x], so a level is applied by indexing its rows with the accumulated block.
    """
    block = np.arange(degree, dtype=np.int32).reshape(1, degree)
    for level in reversed(range(split, len(arrays))):
        transversal = arrays[level]
        block = transversal[:, block].transpose(1, 0, 2).reshape(-1, degree)
    return block

def _scan_chunk(
    outer: List[List[np.ndarray]], blocks: List[np.ndarray], firsts: Sequence[int], radix: int
) -> Dict[int, int]:
    """
    Tallies the encoded fix-count signatures of all elements whose level 0 transversal element is
    one of firsts. Runs in a worker process.
    """
    counts: Counter = Counter()
    points = [np.arange(x.shape[1], dtype=np.int32) for x in blocks]
    depth = len(outer[0])

    def tally(suffixes: List[np.ndarray]) -> None:
        code = np.zeros(blocks[0].shape[0], dtype=np.int64)
        for suffix, block, point in zip(suffixes, blocks, points):
            fixed = (suffix[block] == point).sum(axis=1)
            code = code * radix + fixed
        values, frequency = np.unique(code, return_counts=True)
        counts.update(dict(zip(values.tolist(), frequency.tolist())))

    def visit(level: int, suffixes: List[np.ndarray]) -> None:
        if level == depth:
            tally(suffixes)
            return
        for j in range(outer[0][level].shape[0]):
            # image of u*S is S[u]
            visit(level + 1, [suffix[levels[level][j]] for suffix, levels in zip(suffixes, outer)])

    if depth == 0:
        tally(points)
    else:
        for first in firsts:
            visit(1, [levels[0][first] for levels in outer])
    return dict(counts)

def fix_profile(
    group: PermGroup, actions: Sequence[Action], workers: int=1, limit: Union[None, int]=None,
    batch_size: int=BATCH_SIZE
) -> Dict[Tuple[int, ...], int]:
    """
    Counts, over all elements g of the group, the signature (fix(rho_1(g)), .., fix(rho_r(g))).
    Elements are enumerated along the stabilizer chain of the group: the deep levels form one
    vectorised block, the outer levels are walked recursively and partitioned across processes
    by their level 0 transversal element. Partial tallies are merged by addition.
        :param group: the group to enumerate, each action must accept its elements
        :param actions: the actions to evaluate
        :param workers: process count
        :param limit: enumeration limit, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :param batch_size: the maximum number of elements of a vectorised block
        :raises LimitError: if the group is too large to enumerate
        :returns: signature to element count
    """
    limit = RunConfig.MAX_ENUMERATION_ORDER if limit is None else limit
    if group.order > limit:
        raise LimitError(f"group order {group.order} exceeds the enumeration limit {limit}")
    if not actions:
        raise InputError("fix_profile requires at least one action")

    radix = max(x.degree for x in actions) + 1
    if radix ** len(actions) >= 2**62:
        raise InputError("too many actions for a single scan")

    arrays = [_level_arrays(group, x) for x in actions]
    split = _split_level(group.orbit_sizes(), batch_size)
    blocks = [_block(levels, split, x.degree) for levels, x in zip(arrays, actions)]
    outer = [levels[:split] for levels in arrays]

    if split == 0:
        tallies = [_scan_chunk(outer, blocks, [], radix)]
    else:
        firsts = list(range(outer[0][0].shape[0]))
        workers = max(1, min(workers, len(firsts)))
        chunks = [firsts[i::workers] for i in range(workers)]
        if workers == 1:
            tallies = [_scan_chunk(outer, blocks, chunks[0], radix)]
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                tallies = list(executor.map(_scan_chunk, [outer] * workers, [blocks] * workers, chunks, [radix] * workers))

    merged: Counter = Counter()
    for tally in tallies:
        merged.update(tally)

    profile: Dict[Tuple[int, ...], int] = {}
    for code in sorted(merged):
        signature = []
        for _ in actions:
            code, fixed = divmod(code, radix)
            signature.append(fixed)
        profile[tuple(reversed(signature))] = merged[code]

    logger.info(f"fix-count scan of {sum(profile.values())} elements over {len(actions)} actions: {len(profile)} signatures")
    return dict(sorted(profile.items()))

def perm_reps_equivalent(
    group: PermGroup, action1: Action, action2: Action, mode: str="auto", workers: int=1,
    class_limit: Union[None, int]=None, limit: Union[None, int]=None
) -> bool:
    """
    Whether two permutation representations have equal fixed-point counts on every element of G.
    For transitive actions this is equivalence of the representations.
        :param group: the acting group
        :param action1: the first action
        :param action2: the second action
        :param mode: "full_scan" enumerates all of G; "class_reps" compares on conjugacy class
            representatives; "auto" picks class_reps when the classes are computable
        :param workers: process count of the full scan
        :param class_limit: class computation limit, defaults to RunConfig.MAX_CLASS_ORDER
        :param limit: enumeration limit, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises InputError: on degree mismatch, a foreign action or an unknown mode
        :raises LimitError: if the chosen mode exceeds its limit
    """
    class_limit = RunConfig.MAX_CLASS_ORDER if class_limit is None else class_limit
    if action1.degree != action2.degree:
        raise InputError(f"action degrees differ: {action1.degree} and {action2.degree}")
    if action1.group != group or action2.group != group:
        raise InputError("the actions do not belong to the group")

    if mode == "auto":
        mode = "class_reps" if group.order <= class_limit else "full_scan"

    if mode == "class_reps":
        table = conjugacy_classes(group, class_limit)
        for representative, _ in table:
            if action1.image(representative).fixed_point_count() != action2.image(representative).fixed_point_count():
                return False
        return True
    elif mode == "full_scan":
        profile = fix_profile(group, [action1, action2], workers=workers, limit=limit)
        mismatches = sum(count for (a, b), count in profile.items() if a != b)
        if mismatches:
            logger.info(f"fixed-point counts differ on {mismatches} elements")
        return mismatches == 0
    else:
        raise InputError(f"unknown comparison mode '{mode}'")
