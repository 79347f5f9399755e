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
Freely reduced words in the generators of a free group.

A letter is a nonzero integer: +(i+1) is generator i, -(i+1) its inverse.

:class: Word
An immutable freely reduced word
"""

from __future__ import annotations
from typing import Tuple, Sequence, Iterator, List

from .. import InputError

class Word:
    """
    A freely reduced word. Reduction happens on construction and is idempotent
        :param letters: signed 1-based generator indices
    """
    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[int]=()) -> None:
        stack: List[int] = []
        for letter in letters:
            if letter == 0:
                raise InputError("0 is not a valid letter")
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        self.letters: Tuple[int, ...] = tuple(stack)

    @classmethod
    def generator(cls, index: int, exponent: int=1) -> Word:
        """
        Returns the word g_index^exponent
        """
        letter = index + 1 if exponent > 0 else -(index + 1)
        return cls([letter] * abs(exponent))

    @property
    def generator_indices(self) -> List[int]:
        return [abs(x) - 1 for x in self.letters]

    def pairs(self) -> List[Tuple[int, int]]:
        """
        The letters as (generator index, exponent sign) pairs
        """
        return [(abs(x) - 1, 1 if x > 0 else -1) for x in self.letters]

    def inverse(self) -> Word:
        return Word([-x for x in reversed(self.letters)])

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, exponent: int) -> Word:
        base = self if exponent >= 0 else self.inverse()
        return Word(base.letters * abs(exponent))

    def exponent_sum(self, index: int) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters if abs(x) == index + 1)

    def max_generator(self) -> int:
        """
        The largest generator index in the word, -1 for the empty word
        """
        return max((abs(x) - 1 for x in self.letters), default=-1)

    def format(self, names: Sequence[str]) -> str:
        """
        Formats the word in the presentation grammar, runs of one letter are written as powers
        """
        if not self.letters:
            return "1"
        syllables = []
        for letter in self.letters:
            if syllables and syllables[-1][0] == letter:
                syllables[-1][1] += 1
            else:
                syllables.append([letter, 1])
        output = []
        for letter, count in syllables:
            exponent = count if letter > 0 else -count
            name = names[abs(letter) - 1]
            output.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(output)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"(Word:{list(self.letters)})"
