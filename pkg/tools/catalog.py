# -*- coding: utf-8 -*-

## Gassmann Tools ############################################################
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
Catalog of named groups as permutation groups and as presentations

:def: symmetric_group
The symmetric group on n points

:def: alternating_group
The alternating group on n points

:def: cyclic_group, dihedral_group, abelian_group, abelian_groups
Small abelian and dihedral groups

:def: affine_z8
The affine group of Z/8 with a classical non-conjugate Gassmann pair

:def: direct_product, affine_group, random_subgroups
Products, affine groups of Z/n and seeded random subgroups for the cross check corpus

:def: build_16gamma2c1
The order 16 group with the order statistics of Z4+Z2+Z2 and abelianization Z4+Z2

:def: build_q8abc
The groups Q(8a,b,c) as regular permutation groups

:def: finite_catalog
The cross check corpus: named groups with presentations, products, affine groups, random subgroups
"""

from __future__ import annotations
from typing import Union, List, Tuple, Sequence

from . import InputError, DataError, LimitError
from .config import RunConfig
from .perm import Permutation, PermGroup, abelian_invariants_of_perm_group, enumerate_elements
from .fp import Word, Presentation, parse_presentation, todd_coxeter, coset_action
from .snf import AbelianInvariants
from .gassmann import order_statistics

from fractions import Fraction
from itertools import product
from math import factorial, gcd
from sympy import factorint
from sympy.ntheory.modular import crt
from sympy.utilities.iterables import partitions
import logging
import random

logger = logging.getLogger(__name__)

MAX_SYMMETRIC_DEGREE: int = 24

## Permutation groups
def symmetric_group(n: int) -> PermGroup:
    """
    S_n generated by (1 2) and (1 2 .. n)
        :raises InputError: if n is outside 1..24
    """
    if n < 1 or n > MAX_SYMMETRIC_DEGREE:
        raise InputError(f"symmetric group degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    if n == 1:
        return PermGroup([], 1, name="S1")
    generators = [
        Permutation.from_cycles(n, [[0, 1]]),
        Permutation.from_cycles(n, [list(range(n))])
    ]
    return PermGroup(generators, n, name=f"S{n}")

def alternating_group(n: int) -> PermGroup:
    """
    A_n generated by the 3-cycles (1 2 i)
    """
    if n < 1 or n > MAX_SYMMETRIC_DEGREE:
        raise InputError(f"alternating group degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    generators = [Permutation.from_cycles(n, [[0, 1, i]]) for i in range(2, n)]
    return PermGroup(generators, n, name=f"A{n}")

def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise InputError("group order must be positive")
    if n == 1:
        return PermGroup([], 1, name="C1")
    return PermGroup([Permutation.from_cycles(n, [list(range(n))])], n, name=f"C{n}")

def dihedral_group(n: int) -> PermGroup:
    """
    The symmetries of the n-gon, order 2n
        :raises InputError: if n < 3
    """
    if n < 3:
        raise InputError("the dihedral group needs a polygon of at least 3 vertices")
    rotation = Permutation([(x + 1) % n for x in range(n)])
    reflection = Permutation([(-x) % n for x in range(n)])
    return PermGroup([rotation, reflection], n, name=f"D{2 * n}")

def abelian_group(factors: Sequence[int]) -> PermGroup:
    """
    Z/d1 + .. + Z/dk as a product of disjoint cycles
        :raises InputError: if a factor is not positive
    """
    if any(x < 1 for x in factors):
        raise InputError("cyclic factors must be positive")
    degree = max(1, sum(x for x in factors if x > 1))
    generators = []
    start = 0
    for factor in factors:
        if factor == 1:
            continue
        generators.append(Permutation.from_cycles(degree, [list(range(start, start + factor))]))
        start += factor
    name = "+".join(f"Z{x}" for x in factors if x > 1) or "Z1"
    return PermGroup(generators, degree, name=name)

def abelian_groups(order: int) -> List[List[int]]:
    """
    The invariant factor lists of all abelian groups of the order, each ascending
    """
    if order < 1:
        raise InputError("group order must be positive")
    per_prime = []
    for prime, exponent in sorted(factorint(order).items()):
        options = []
        for partition in partitions(exponent):
            parts = sorted((k for k, v in partition.items() for _ in range(v)), reverse=True)
            options.append([prime ** x for x in parts])
        per_prime.append(options)

    output = []
    for combination in product(*per_prime):
        length = max((len(x) for x in combination), default=0)
        factors = []
        for t in range(length):
            factor = 1
            for powers in combination:
                if t < len(powers):
                    factor *= powers[t]
            factors.append(factor)
        output.append(sorted(factors))
    return sorted(output)

def affine_z8() -> PermGroup:
    """
    The maps x -> a*x + b of Z/8 with a odd, order 32
    """
    generators = [
        Permutation([(3 * x) % 8 for x in range(8)]),
        Permutation([(5 * x) % 8 for x in range(8)]),
        Permutation([(x + 1) % 8 for x in range(8)])
    ]
    return PermGroup(generators, 8, name="AGL(1,Z/8)")

def affine_z8_pair() -> Tuple[PermGroup, PermGroup, PermGroup]:
    """
    (G, H, K) with H = {x -> a*x} and K = {x, 3x+4, 5x+4, 7x}: almost-conjugate, not conjugate
    """
    group = affine_z8()
    h = PermGroup([Permutation([(3 * x) % 8 for x in range(8)]), Permutation([(5 * x) % 8 for x in range(8)])], 8)
    k = PermGroup([Permutation([(3 * x + 4) % 8 for x in range(8)]), Permutation([(5 * x + 4) % 8 for x in range(8)])], 8)
    return group, h, k

def affine_group(n: int) -> PermGroup:
    """
    AGL(1,Z/n): the maps x -> a*x + b of Z/n with a a unit, order n*phi(n)
        :raises InputError: if n < 2
    """
    if n < 2:
        raise InputError("the affine group needs n >= 2")
    generators = [Permutation([(a * x) % n for x in range(n)]) for a in range(2, n) if gcd(a, n) == 1]
    generators.append(Permutation([(x + 1) % n for x in range(n)]))
    return PermGroup(generators, n, name=f"AGL(1,Z/{n})")

def direct_product(*groups: PermGroup) -> PermGroup:
    """
    The direct product of the groups, each factor acting on its own block of points
        :raises InputError: without factors
    """
    if not groups:
        raise InputError("a direct product needs at least one factor")
    degree = sum(x.degree for x in groups)
    generators = []
    start = 0
    for group in groups:
        for g in group.generators:
            images = list(range(degree))
            images[start:start + group.degree] = [start + x for x in g.images]
            generators.append(Permutation(images, check=False))
        start += group.degree
    return PermGroup(generators, degree, name="x".join(x.name or "G" for x in groups))

def random_subgroups(group: PermGroup, count: int, seed: int=0, generators: int=2) -> List[PermGroup]:
    """
    Subgroups generated by randomly chosen elements of the group, reproducible from the seed
        :param group: the ambient group, small enough to enumerate
        :param count: the number of subgroups
        :param seed: the random seed
        :param generators: the number of random elements per subgroup
    """
    rng = random.Random(seed)
    elements = sorted(enumerate_elements(group))
    output = []
    for number in range(count):
        chosen = [rng.choice(elements) for _ in range(generators)]
        output.append(PermGroup(chosen, group.degree, name=f"{group.name or 'G'}.r{seed}.{number}"))
    return output

## Presentations
def cyclic_presentation(n: int) -> Presentation:
    return Presentation(["a"], [Word.generator(0, n)], order=n, name=f"C{n}")

def abelian_presentation(factors: Sequence[int]) -> Presentation:
    """
    < x1, .., xk | xi^di, [xi, xj] >
    """
    names = [f"x{i + 1}" for i in range(len(factors))]
    relators = [Word.generator(i, d) for i, d in enumerate(factors)]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = Word.generator(i), Word.generator(j)
            relators.append(a.inverse() * b.inverse() * a * b)
    order = 1
    for factor in factors:
        order *= factor
    return Presentation(names, relators, order=order, name="+".join(f"Z{x}" for x in factors))

def dihedral_presentation(n: int) -> Presentation:
    presentation = parse_presentation(f"< r, s | r^{n}, s^2, (s*r)^2 >", name=f"D{2 * n}")
    presentation.order = 2 * n
    return presentation

def von_dyck_presentation(l: int, m: int, n: int) -> Presentation:
    """
    < a, b | a^l, b^m, (a*b)^n >, with the known order when 1/l + 1/m + 1/n > 1
    """
    if min(l, m, n) < 1:
        raise InputError("von Dyck exponents must be positive")
    presentation = parse_presentation(f"< a, b | a^{l}, b^{m}, (a*b)^{n} >", name=f"D({l},{m},{n})")
    excess = Fraction(1, l) + Fraction(1, m) + Fraction(1, n) - 1
    if excess > 0:
        presentation.order = int(2 / excess)
    return presentation

def symmetric_presentation(n: int) -> Presentation:
    """
    The two generator presentation of S_n with s = (1 2) and t = (1 2 .. n):
    < s, t | s^2, t^n, (s*t)^(n-1), (s*t^-1*s*t)^3, (s*t^-j*s*t^j)^2 for 2 <= j <= n-2 >
        :raises InputError: if n < 3
    """
    if n < 3:
        raise InputError("the symmetric group presentation needs n >= 3")
    s, t = Word.generator(0), Word.generator(1)
    relators = [s ** 2, t ** n, (s * t) ** (n - 1), (s * t.inverse() * s * t) ** 3]
    for j in range(2, n - 1):
        relators.append((s * (t ** -j) * s * (t ** j)) ** 2)
    return Presentation(["s", "t"], relators, order=factorial(n), name=f"S{n}")

GAMMA_PRESENTATION: str = "< u, v, c | u^2, v^2, c^4, [u,v], c*u*c^-1 = v, c*v*c^-1 = u >"

def gamma_presentation() -> Presentation:
    presentation = parse_presentation(GAMMA_PRESENTATION, name="16Γ2c1 (realization)")
    presentation.order = 16
    return presentation

def _q8abc_exponents(a: int, b: int, c: int) -> Tuple[int, int]:
    """
    Exponents s, t acting on Z/bc as (+1, -1) and (-1, +1) on Z/b + Z/c
    """
    bc = b * c
    s = int(crt([b, c], [1, -1])[0]) % bc
    t = int(crt([b, c], [-1, 1])[0]) % bc
    return s or bc, t or bc

def q8abc_presentation(a: int, b: int, c: int) -> Presentation:
    """
    < x, y, z | x^2a = y^2, y*x*y^-1 = x^-1, z^bc, x*z*x^-1 = z^s, y*z*y^-1 = z^t >
        :raises InputError: if the parameters are not pairwise coprime positive integers with b, c odd
    """
    if min(a, b, c) < 1:
        raise InputError("Q(8a,b,c) parameters must be positive")
    if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
        raise InputError("Q(8a,b,c) parameters must be pairwise coprime")
    if b % 2 == 0 or c % 2 == 0:
        raise InputError("Q(8a,b,c) parameters b and c must be odd")

    s, t = _q8abc_exponents(a, b, c)
    text = f"< x, y, z | x^{2 * a} = y^2, y*x*y^-1 = x^-1, z^{b * c}, x*z*x^-1 = z^{s}, y*z*y^-1 = z^{t} >"
    presentation = parse_presentation(text, name=f"Q({8 * a},{b},{c})")
    presentation.order = 8 * a * b * c
    return presentation

## Realizations
def _regular_realization(presentation: Presentation, max_cosets: Union[None, int]=None) -> PermGroup:
    """
    The presented group acting on the cosets of the trivial subgroup
        :raises DataError: if the coset count differs from the known order
    """
    table = todd_coxeter(presentation, max_cosets=max_cosets)
    group = coset_action(table)
    group.name = presentation.name
    if presentation.order is not None and group.order != presentation.order:
        raise DataError(f"{presentation.name} has order {group.order}, expected {presentation.order}")
    return group

def build_16gamma2c1() -> PermGroup:
    """
    Z2^2 x| Z4 with the generator of Z4 swapping the Z2 factors, as a regular group of degree 16.
    Checked at construction: order 16, order statistics {1:1, 2:7, 4:8}, abelianization Z4+Z2.
        :raises DataError: if a check fails
    """
    group = _regular_realization(gamma_presentation())
    statistics = order_statistics(group)
    if statistics.counts != {1: 1, 2: 7, 4: 8}:
        raise DataError(f"16Γ2c1 realization has order statistics {statistics}")
    if abelian_invariants_of_perm_group(group) != AbelianInvariants([2, 4]):
        raise DataError("16Γ2c1 realization does not have abelianization Z4+Z2")
    return group

def build_q8abc(a: int, b: int, c: int, limit: Union[None, int]=None) -> PermGroup:
    """
    Q(8a,b,c) of order 8abc as a regular permutation group
        :param limit: largest allowed order, defaults to RunConfig.MAX_ENUMERATION_ORDER
        :raises InputError: on invalid parameters
        :raises LimitError: if 8abc exceeds the limit
    """
    presentation = q8abc_presentation(a, b, c)
    limit = RunConfig.MAX_ENUMERATION_ORDER if limit is None else limit
    if presentation.order > limit:
        raise LimitError(f"Q({8 * a},{b},{c}) has order {presentation.order}, above the limit {limit}")
    return _regular_realization(presentation)

def quaternion_group() -> PermGroup:
    group = build_q8abc(1, 1, 1)
    group.name = "Q8"
    return group

class CatalogEntry:
    """
    A finite group available as permutation group and, if known, as presentation
    """
    def __init__(self, name: str, group: PermGroup, presentation: Union[None, Presentation]=None) -> None:
        self.name: str = name
        self.group: PermGroup = group
        self.presentation: Union[None, Presentation] = presentation

    def __repr__(self) -> str:
        return f"(CatalogEntry:{self.name} {self.group.order})"

def finite_catalog(max_order: int=2000) -> List[CatalogEntry]:
    """
    The catalog groups used for cross checks, by increasing order: the named groups with their
    presentations, products, affine groups and seeded random subgroups of two small ambient groups
        :param max_order: the largest group order to include
    """
    entries = [
        CatalogEntry("C6", cyclic_group(6), cyclic_presentation(6)),
        CatalogEntry("Z2+Z4", abelian_group([2, 4]), abelian_presentation([2, 4])),
        CatalogEntry("Z4+Z2+Z2", abelian_group([4, 2, 2]), abelian_presentation([4, 2, 2])),
        CatalogEntry("Z2+Z2+Z2+Z2", abelian_group([2, 2, 2, 2]), abelian_presentation([2, 2, 2, 2])),
        CatalogEntry("S3", symmetric_group(3), symmetric_presentation(3)),
        CatalogEntry("D8", dihedral_group(4), dihedral_presentation(4)),
        CatalogEntry("D10", dihedral_group(5), dihedral_presentation(5)),
        CatalogEntry("Q8", quaternion_group(), q8abc_presentation(1, 1, 1)),
        CatalogEntry("16Γ2c1", build_16gamma2c1(), gamma_presentation()),
        CatalogEntry("S4", symmetric_group(4), symmetric_presentation(4)),
        CatalogEntry("Q(8,3,1)", build_q8abc(1, 3, 1), q8abc_presentation(1, 3, 1)),
        CatalogEntry("AGL(1,Z/8)", affine_z8()),
        CatalogEntry("Q(16,3,1)", build_q8abc(2, 3, 1), q8abc_presentation(2, 3, 1)),
        CatalogEntry("A5", alternating_group(5), von_dyck_presentation(2, 3, 5)),
        CatalogEntry("S5", symmetric_group(5), symmetric_presentation(5)),
        CatalogEntry("Q(8,5,3)", build_q8abc(1, 5, 3), q8abc_presentation(1, 5, 3)),
        CatalogEntry("A4", alternating_group(4)),
    ]
    products = [
        (dihedral_group(4), cyclic_group(2)),
        (quaternion_group(), cyclic_group(2)),
        (quaternion_group(), cyclic_group(3)),
        (symmetric_group(3), symmetric_group(3)),
        (symmetric_group(4), cyclic_group(2)),
        (dihedral_group(4), dihedral_group(4)),
        (alternating_group(4), cyclic_group(3)),
        (alternating_group(5), cyclic_group(2)),
        (symmetric_group(4), symmetric_group(3)),
        (affine_z8(), cyclic_group(3)),
        (alternating_group(5), cyclic_group(3)),
        (symmetric_group(5), cyclic_group(2)),
        (alternating_group(5), symmetric_group(3)),
    ]
    for factors in products:
        group = direct_product(*factors)
        entries.append(CatalogEntry(group.name, group))
    for n in (7, 9, 11, 12, 13, 15, 16, 20, 24, 27, 31, 32, 41):
        group = affine_group(n)
        entries.append(CatalogEntry(group.name, group))
    for ambient in (direct_product(symmetric_group(4), symmetric_group(3)), affine_group(16)):
        for group in random_subgroups(ambient, 8, seed=2026):
            if group.order > 1:
                entries.append(CatalogEntry(group.name, group))

    entries = [x for x in entries if x.group.order <= max_order]
    return sorted(entries, key=lambda x: x.group.order)
