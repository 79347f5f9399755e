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
Permutations on the points 0..n-1 and their cycle types.

Products are read left to right: x^(p*q) = q(p(x)), so a word of permutations acts
on a point from its first letter to its last.

:class: Permutation
An immutable bijection on {0, .., degree-1}

:class: CycleType
The multiset of cycle lengths of a permutation, fixed points included

:def: cycle_type
Returns the CycleType of a permutation
"""

from __future__ import annotations
from typing import Union, List, Tuple, Sequence, Iterable

from .. import InputError

from functools import reduce
from math import gcd

class Permutation:
    """
    An immutable permutation stored as the tuple of point images
        :param images: images[i] is the image of point i
        :param check: whether to verify that images is a bijection
    """
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int], check: bool=True) -> None:
        self.images: Tuple[int, ...] = tuple(images)
        self._hash: Union[None, int] = None

        if check:
            if sorted(self.images) != list(range(len(self.images))):
                raise InputError(f"images {list(self.images)} are not a bijection on 0..{len(self.images)-1}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]], one_based: bool=False) -> Permutation:
        """
        Builds a permutation from disjoint cycles
            :param degree: the number of points
            :param cycles: the cycles, each a sequence of points
            :param one_based: whether the points are numbered from 1
            :raises InputError: if a point is out of range or the cycles are not disjoint
        """
        images = list(range(degree))
        seen = set()
        offset = 1 if one_based else 0
        for cycle in cycles:
            points = [int(x) - offset for x in cycle]
            for point in points:
                if point < 0 or point >= degree:
                    raise InputError(f"point {point + offset} outside of degree {degree}")
                if point in seen:
                    raise InputError(f"point {point + offset} occurs in more than one cycle")
                seen.add(point)
            for i, point in enumerate(points):
                images[point] = points[(i + 1) % len(points)]
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise InputError(f"degree mismatch: {self.degree} vs {other.degree}")
        other_images = other.images
        return Permutation([other_images[i] for i in self.images], check=False)

    def inverse(self) -> Permutation:
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(images, check=False)

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent) % self.order()
        result = Permutation.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, other: Permutation) -> Permutation:
        """
        Returns other^-1 * self * other
        """
        return other.inverse() * self * other

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool=False) -> List[Tuple[int, ...]]:
        """
        Returns the disjoint cycles, each starting at its smallest point, ordered by that point
            :param include_fixed: whether to include the cycles of length 1
        """
        seen = [False] * len(self.images)
        output = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            if len(cycle) > 1 or include_fixed:
                output.append(tuple(cycle))
        return output

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), (len(x) for x in self.cycles()), 1)

    def fixed_point_count(self) -> int:
        return sum(1 for i, x in enumerate(self.images) if i == x)

    def first_moved_point(self) -> Union[None, int]:
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __str__(self) -> str:
        """
        Disjoint cycle notation with 1-based points
        """
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)

    def __repr__(self) -> str:
        return f"(Permutation[{self.degree}]:{str(self)})"

class CycleType:
    """
    The cycle lengths of a permutation including the fixed points, sorted descending.
    Conjugacy classes of the symmetric group are exactly the cycle types
        :param parts: the cycle lengths
    """
    def __init__(self, parts: Iterable[int]) -> None:
        self.parts: Tuple[int, ...] = tuple(sorted(parts, reverse=True))
        if any(x < 1 for x in self.parts):
            raise InputError("cycle lengths must be positive")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.parts, 1)

    def multiplicities(self) -> List[Tuple[int, int]]:
        """
        Returns (length, count) pairs, longest first
        """
        output = []
        for part in self.parts:
            if output and output[-1][0] == part:
                output[-1] = (part, output[-1][1] + 1)
            else:
                output.append((part, 1))
        return output

    @classmethod
    def from_string(cls, text: str) -> CycleType:
        """
        Parses the '4^2·1^8' notation
            :raises InputError: if the text is malformed
        """
        parts = []
        try:
            for token in text.split("·"):
                length, _, count = token.partition("^")
                parts.extend([int(length)] * (int(count) if count else 1))
        except ValueError:
            raise InputError(f"malformed cycle type '{text}'") from None
        return cls(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleType):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: CycleType) -> bool:
        return (self.order(), self.parts) < (other.order(), other.parts)

    def __str__(self) -> str:
        return "·".join(f"{length}^{count}" for length, count in self.multiplicities())

    def __repr__(self) -> str:
        return f"(CycleType:{str(self)})"

def cycle_type(permutation: Permutation) -> CycleType:
    """
    Returns the cycle type of the permutation, fixed points included as 1s
    """
    return CycleType(len(x) for x in permutation.cycles(include_fixed=True))
