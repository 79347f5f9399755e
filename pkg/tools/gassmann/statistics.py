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
Element order statistics and regular representations

:class: OrderStatistics
The number of elements of each order in a finite group

:def: order_statistics
Counts the element orders of a permutation group

:class: RegularEmbedding
The map of a group into the symmetric group on its own elements

:def: regular_embedding
The image of the regular embedding as a permutation group
"""

from __future__ import annotations
from typing import Union, Dict, Any, Mapping

from .. import InputError
from ..perm import Permutation, PermGroup, enumerate_elements

from collections import Counter
import logging

logger = logging.getLogger(__name__)

class OrderStatistics:
    """
    Census of element orders
        :param counts: element order to number of elements of that order
        :param group_order: the group order n
        :raises InputError: if the counts do not describe a group of order n
    """
    def __init__(self, counts: Mapping[int, int], group_order: int) -> None:
        self.counts: Dict[int, int] = {k: counts[k] for k in sorted(counts) if counts[k]}
        self.group_order: int = group_order

        if sum(self.counts.values()) != group_order:
            raise InputError(f"order counts sum to {sum(self.counts.values())}, not {group_order}")
        if self.counts.get(1) != 1:
            raise InputError("a group has exactly one element of order 1")
        for order in self.counts:
            if group_order % order:
                raise InputError(f"element order {order} does not divide the group order {group_order}")

    def export(self) -> Dict[str, Any]:
        return {"order": self.group_order, "counts": {str(k): v for k, v in self.counts.items()}}

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderStatistics):
            return NotImplemented
        return self.group_order == other.group_order and self.counts == other.counts

    def __repr__(self) -> str:
        return f"(OrderStatistics:{self.group_order})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}:{v}" for k, v in self.counts.items()) + "}"

def order_statistics(group: PermGroup, limit: Union[None, int]=None) -> OrderStatistics:
    """
    Counts the elements of every order
        :param group: the group
        :param limit: enumeration limit, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises LimitError: if the group is too large to enumerate
    """
    counts = Counter(x.order() for x in enumerate_elements(group, limit))
    return OrderStatistics(counts, group.order)

class RegularEmbedding:
    """
    The regular representation of a group: every element h maps to the permutation x -> x*h of
    the group elements. Elements are numbered in sorted order, so the identity is point 0.
    Right multiplication is used as products compose left to right; the left regular
    representation is conjugate to it in the symmetric group.
        :param group: the group to embed
        :param limit: enumeration limit, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises LimitError: if the group is too large to enumerate
    """
    def __init__(self, group: PermGroup, limit: Union[None, int]=None) -> None:
        self.source: PermGroup = group
        self.elements = sorted(enumerate_elements(group, limit))
        self._index: Dict[Permutation, int] = {x: i for i, x in enumerate(self.elements)}

        name = f"regular image of {group.name}" if group.name else None
        generators = [self(x) for x in group.generators]
        self.image: PermGroup = PermGroup(generators, len(self.elements), name=name)

    def __call__(self, h: Permutation) -> Permutation:
        """
        The image of an element of the source group
            :raises InputError: if h is not an element of the source group
        """
        if h not in self._index:
            raise InputError(f"{h} is not an element of the embedded group")
        return Permutation([self._index[x * h] for x in self.elements], check=False)

    def __repr__(self) -> str:
        return f"(RegularEmbedding:{len(self.elements)})"

def regular_embedding(group: PermGroup, limit: Union[None, int]=None) -> PermGroup:
    """
    Returns the faithful degree-|H| image of the group acting on itself by multiplication
    """
    embedding = RegularEmbedding(group, limit)
    logger.debug(f"regular embedding of a group of order {group.order}")
    return embedding.image
