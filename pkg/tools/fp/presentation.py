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
Finite presentations and their text grammar (.fp files)

    < a, b | a^2, b^3, (a*b)^5 >
    < u, v, c | u^2, v^2, c^4, [u,v], c*u*c^-1 = v >   # comment

A term is a generator name, 1, a bracketed word, a commutator [x,y] = x^-1*y^-1*x*y,
or a term raised to a nonzero integer power. Words are products of terms joined by *.
A relation w1 = w2 is stored as the relator w1*w2^-1.

:class: Presentation
Generator names and relators

:def: parse_presentation
Parses the grammar into a Presentation

:def: parse_words
Parses a comma separated list of words over known generator names

:def: read_presentation
Reads a .fp file
"""

from __future__ import annotations
from typing import Union, List, Sequence, Dict, Any

from .. import InputError, ParseError
from .word import Word

import os
import re
import pyparsing as pp

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")

class Presentation:
    """
    A finite presentation < generators | relators >
        :param generator_names: the ordered generator names
        :param relators: the relators as words
        :param order: the group order, if known
        :param name: optional description
        :raises InputError: on duplicate or invalid names or relators using unknown generators
    """
    def __init__(
        self, generator_names: Sequence[str], relators: Sequence[Word]=(),
        order: Union[None, int]=None, name: Union[None, str]=None
    ) -> None:
        self.generator_names: List[str] = list(generator_names)
        self.relators: List[Word] = list(relators)
        self.order: Union[None, int] = order
        self.name: Union[None, str] = name

        if len(set(self.generator_names)) != len(self.generator_names):
            raise InputError(f"duplicate generator names in {self.generator_names}")
        for generator in self.generator_names:
            if not _IDENTIFIER.match(generator):
                raise InputError(f"invalid generator name '{generator}'")
        for relator in self.relators:
            if relator.max_generator() >= len(self.generator_names):
                raise InputError(f"relator {relator} uses an unknown generator")

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    def format_word(self, word: Word) -> str:
        return word.format(self.generator_names)

    def describe(self) -> str:
        if self.name:
            return f"{self.name} {self}"
        return str(self)

    def export(self) -> Dict[str, Any]:
        return {
            "generators": list(self.generator_names),
            "relators": [self.format_word(x) for x in self.relators]
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.generator_names == other.generator_names and self.relators == other.relators

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"(Presentation:{self.num_generators} generators, {len(self.relators)} relators)"

    def __str__(self) -> str:
        relators = ", ".join(self.format_word(x) for x in self.relators)
        return f"< {', '.join(self.generator_names)} | {relators} >"

## Syntax tree
class _Name:
    def __init__(self, name: str, loc: int) -> None:
        self.name = name
        self.loc = loc

    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        try:
            return Word.generator(lookup[self.name])
        except KeyError:
            raise ParseError(f"unknown generator '{self.name}'", pp.lineno(self.loc, text), pp.col(self.loc, text)) from None

class _Identity:
    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        return Word()

class _Power:
    def __init__(self, base, exponents: List[int]) -> None:
        self.base = base
        self.exponents = exponents

    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        word = self.base.evaluate(lookup, text)
        for exponent in self.exponents:
            word = word ** exponent
        return word

class _Product:
    def __init__(self, factors: list) -> None:
        self.factors = factors

    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        word = Word()
        for factor in self.factors:
            word = word * factor.evaluate(lookup, text)
        return word

class _Commutator:
    def __init__(self, left, right) -> None:
        self.left = left
        self.right = right

    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        a = self.left.evaluate(lookup, text)
        b = self.right.evaluate(lookup, text)
        return a.inverse() * b.inverse() * a * b

class _Relation:
    def __init__(self, left, right) -> None:
        self.left = left
        self.right = right

    def evaluate(self, lookup: Dict[str, int], text: str) -> Word:
        word = self.left.evaluate(lookup, text)
        if self.right is not None:
            word = word * self.right.evaluate(lookup, text).inverse()
        return word

def _check_exponent(text: str, loc: int, toks: pp.ParseResults) -> int:
    value = int(toks[0])
    if value == 0:
        raise pp.ParseFatalException(text, loc, "zero exponent")
    return value

def _build_grammar() -> Dict[str, pp.ParserElement]:
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    integer = pp.Regex(r"[+-]?\d+").set_parse_action(_check_exponent)

    word = pp.Forward()
    name_atom = name.copy().set_parse_action(lambda text, loc, toks: _Name(toks[0], loc))
    identity_atom = pp.Literal("1").set_parse_action(lambda: _Identity())
    commutator = (pp.Suppress("[") + word + pp.Suppress(",") + word + pp.Suppress("]")).set_parse_action(
        lambda toks: _Commutator(toks[0], toks[1])
    )
    bracketed = pp.Suppress("(") + word + pp.Suppress(")")
    atom = name_atom | identity_atom | commutator | bracketed

    power = (atom + pp.ZeroOrMore(pp.Suppress("^") + integer)).set_parse_action(
        lambda toks: _Power(toks[0], list(toks[1:]))
    )
    word <<= (power + pp.ZeroOrMore(pp.Suppress("*") + power)).set_parse_action(
        lambda toks: _Product(list(toks))
    )
    relation = (word + pp.Optional(pp.Suppress("=") + word)).set_parse_action(
        lambda toks: _Relation(toks[0], toks[1] if len(toks) > 1 else None)
    )

    names = name + pp.ZeroOrMore(pp.Suppress(",") + name)
    relations = pp.Optional(relation + pp.ZeroOrMore(pp.Suppress(",") + relation))
    presentation = (
        pp.Suppress("<") + pp.Group(names) + pp.Suppress("|") + pp.Group(relations) + pp.Suppress(">")
    )
    presentation.ignore(pp.python_style_comment)

    word_list = pp.Optional(word + pp.ZeroOrMore(pp.Suppress(",") + word))
    word_list.ignore(pp.python_style_comment)

    return {"presentation": presentation, "words": word_list}

_GRAMMAR = _build_grammar()

def parse_presentation(text: str, name: Union[None, str]=None) -> Presentation:
    """
    Parses a presentation. Relators that reduce to the empty word are dropped
        :param text: the presentation in the grammar
        :param name: optional description
        :raises ParseError: on syntax errors (with line and column), unknown generator names,
            duplicate generator names and zero exponents
    """
    try:
        tokens = _GRAMMAR["presentation"].parse_string(text, parse_all=True)
    except pp.ParseBaseException as error:
        raise ParseError(error.msg, error.lineno, error.col) from None

    generator_names = list(tokens[0])
    lookup: Dict[str, int] = {}
    for index, generator in enumerate(generator_names):
        if generator in lookup:
            raise ParseError(f"duplicate generator '{generator}'")
        lookup[generator] = index

    relators = [x.evaluate(lookup, text) for x in tokens[1]]
    return Presentation(generator_names, [x for x in relators if x], name=name)

def parse_words(text: str, generator_names: Sequence[str]) -> List[Word]:
    """
    Parses a comma separated list of words, for instance subgroup generators 'a, b^2*a'
        :raises ParseError: on syntax errors or unknown generator names
    """
    try:
        tokens = _GRAMMAR["words"].parse_string(text, parse_all=True)
    except pp.ParseBaseException as error:
        raise ParseError(error.msg, error.lineno, error.col) from None

    lookup = {x: i for i, x in enumerate(generator_names)}
    return [x.evaluate(lookup, text) for x in tokens]

def read_presentation(path: str) -> Presentation:
    """
    Reads a .fp file. The presentation is named after the file
        :raises InputError: when path doesnt point to a valid file
        :raises ParseError: on malformed input
    """
    if not os.path.isfile(path):
        raise InputError(f"file '{path}' does not exist")

    with open(path, "r", encoding="utf-8") as f:
        text = f.read()

    name = os.path.splitext(os.path.basename(path))[0]
    try:
        return parse_presentation(text, name)
    except ParseError as error:
        raise ParseError(f"{path}: {error.message}", error.line, error.column) from None
