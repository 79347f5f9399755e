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
Exact integer linear algebra: Smith normal form, abelian invariants, ranks over Q and F2
and the S invariant. All arithmetic uses python integers, so there is no overflow.

:class: IntMatrix
An integer matrix stored row-major

:class: SnfResult
The Smith normal form of a matrix with optional unimodular transforms

:class: AbelianInvariants
A finitely generated abelian group: free rank plus torsion invariant factors

:def: smith_normal_form
Computes the Smith normal form

:def: abelian_invariants
Reads the abelian group presented by a relation matrix

:def: s_invariant
The number of even invariant factors modulo 2

:def: ranks
Rank over the rationals (fraction free elimination) and over F2 (bit row elimination)

:def: s_from_ranks
The S invariant read off the two ranks
"""

from __future__ import annotations
from typing import Union, List, Tuple, Sequence, Dict, Any

from . import InputError

class IntMatrix:
    """
    Integer matrix
        :param entries: the rows
        :param cols: the column count, required when there are no rows
        :raises InputError: if the rows are of unequal length
    """
    def __init__(self, entries: Sequence[Sequence[int]], cols: Union[None, int]=None) -> None:
        self.entries: List[List[int]] = [[int(x) for x in row] for row in entries]
        self.rows: int = len(self.entries)
        if cols is None:
            if not self.entries:
                raise InputError("the column count of a matrix without rows must be given")
            cols = len(self.entries[0])
        self.cols: int = cols

        for row in self.entries:
            if len(row) != self.cols:
                raise InputError(f"row of length {len(row)} in a matrix with {self.cols} columns")

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], cols=size)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = other.transpose().entries
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, column)) for column in columns] for row in self.entries],
            cols=other.cols
        )

    def determinant(self) -> int:
        """
        Determinant by Bareiss fraction free elimination
            :raises InputError: if the matrix is not square
        """
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        a = [row[:] for row in self.entries]
        n = self.rows
        sign = 1
        previous = 1
        for k in range(n):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries[key[0]][key[1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def export(self) -> List[List[int]]:
        return [row[:] for row in self.entries]

    def __repr__(self) -> str:
        return f"(IntMatrix:{self.rows}x{self.cols})"

    def __str__(self) -> str:
        if not self.entries:
            return f"[] ({self.rows}x{self.cols})"
        return "\n".join("[" + " ".join(f"{x:>4}" for x in row) + "]" for row in self.entries)

class SnfResult:
    """
    Smith normal form U*M*V = D
        invariant_factors: the nonzero diagonal entries d1 | d2 | .. | dr, 1s retained
        rank: r
        transform_u, transform_v: the unimodular transforms, None unless requested
    """
    def __init__(
        self, rows: int, cols: int, invariant_factors: List[int],
        transform_u: Union[None, IntMatrix]=None, transform_v: Union[None, IntMatrix]=None
    ) -> None:
        self.rows: int = rows
        self.cols: int = cols
        self.invariant_factors: List[int] = invariant_factors
        self.rank: int = len(invariant_factors)
        self.transform_u: Union[None, IntMatrix] = transform_u
        self.transform_v: Union[None, IntMatrix] = transform_v

    def diagonal(self) -> IntMatrix:
        """
        Returns D as a rows x cols matrix
        """
        d = IntMatrix.zeros(self.rows, self.cols)
        for i, factor in enumerate(self.invariant_factors):
            d.entries[i][i] = factor
        return d

    def stripped(self) -> List[int]:
        """
        The invariant factors without the leading 1s
        """
        return [x for x in self.invariant_factors if x != 1]

    def __repr__(self) -> str:
        return f"(SnfResult:{self.invariant_factors})"

class AbelianInvariants:
    """
    The abelian group Z^free_rank + Z/d1 + .. + Z/dk
        :param torsion: invariant factors > 1 with d1 | d2 | .. | dk
        :param free_rank: the rank of the free part
        :raises InputError: if the torsion does not form a divisibility chain
    """
    def __init__(self, torsion: Sequence[int], free_rank: int=0) -> None:
        self.torsion: Tuple[int, ...] = tuple(int(x) for x in torsion)
        self.free_rank: int = int(free_rank)

        if self.free_rank < 0:
            raise InputError("free rank must be non-negative")
        for i, factor in enumerate(self.torsion):
            if factor < 2:
                raise InputError(f"torsion factor {factor} must exceed 1")
            if i and factor % self.torsion[i - 1]:
                raise InputError(f"torsion {list(self.torsion)} is not a divisibility chain")

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> Union[None, int]:
        """
        The group order, None if infinite
        """
        if self.free_rank:
            return None
        output = 1
        for factor in self.torsion:
            output *= factor
        return output

    def export(self) -> Dict[str, Any]:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianInvariants):
            return NotImplemented
        return self.torsion == other.torsion and self.free_rank == other.free_rank

    def __hash__(self) -> int:
        return hash((self.torsion, self.free_rank))

    def __repr__(self) -> str:
        return f"(AbelianInvariants:{list(self.torsion)}+Z^{self.free_rank})"

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{x}" for x in self.torsion)
        return " + ".join(parts) if parts else "0"

def smith_normal_form(matrix: IntMatrix, transforms: bool=False) -> SnfResult:
    """
    Computes the Smith normal form. The pivot is the entry of minimal nonzero absolute value in
    the remaining submatrix; the row and column of the pivot are cleared by euclidean steps and a
    row is added back whenever the pivot does not divide the rest of the submatrix.
        :param matrix: the input matrix, empty matrices allowed
        :param transforms: whether to track unimodular U and V with U*M*V = D
    """
    a = [row[:] for row in matrix.entries]
    rows, cols = matrix.rows, matrix.cols
    u = IntMatrix.identity(rows).entries if transforms else None
    v = IntMatrix.identity(cols).entries if transforms else None

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            a[i], a[j] = a[j], a[i]
            if u is not None:
                u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            if v is not None:
                for row in v:
                    row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target -= factor * row_source
        a[target] = [x - factor * y for x, y in zip(a[target], a[source])]
        if u is not None:
            u[target] = [x - factor * y for x, y in zip(u[target], u[source])]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in a:
            row[target] -= factor * row[source]
        if v is not None:
            for row in v:
                row[target] -= factor * row[source]

    factors: List[int] = []
    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            pivot = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // pivot)
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // pivot)
                    clean = clean and a[t][j] == 0

            if not clean:
                # Remainders are smaller than the pivot: promote the smallest
                best = (t, t)
                for i in range(t + 1, rows):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t + 1, cols):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
                continue

            offending = None
            for i in range(t + 1, rows):
                if any(a[i][j] % pivot for j in range(t + 1, cols)):
                    offending = i
                    break
            if offending is None:
                break
            add_row(t, offending, -1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        factors.append(a[t][t])

    if transforms:
        return SnfResult(rows, cols, factors, IntMatrix(u, cols=rows), IntMatrix(v, cols=cols))
    return SnfResult(rows, cols, factors)

def abelian_invariants(matrix: IntMatrix, num_generators: int) -> AbelianInvariants:
    """
    Returns the abelian group with num_generators generators and the rows of matrix as relations
        :raises InputError: if the column count differs from num_generators
    """
    if matrix.cols != num_generators:
        raise InputError(f"relation matrix has {matrix.cols} columns for {num_generators} generators")
    result = smith_normal_form(matrix)
    return AbelianInvariants(result.stripped(), num_generators - result.rank)

def s_invariant(invariants: AbelianInvariants) -> int:
    """
    The number of two-torsion summands (even invariant factors) modulo 2. The free part does not count
    """
    return sum(1 for x in invariants.torsion if x % 2 == 0) % 2

def _rank_rational(matrix: IntMatrix) -> int:
    a = [row[:] for row in matrix.entries]
    rank = 0
    previous = 1
    for col in range(matrix.cols):
        pivot = None
        for i in range(rank, matrix.rows):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, matrix.rows):
            for j in range(col + 1, matrix.cols):
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) // previous
            a[i][col] = 0
        previous = a[rank][col]
        rank += 1
    return rank

def _rank_binary(matrix: IntMatrix) -> int:
    leading: Dict[int, int] = {}
    for row in matrix.entries:
        mask = sum((x & 1) << j for j, x in enumerate(row))
        while mask:
            top = mask.bit_length() - 1
            if top not in leading:
                leading[top] = mask
                break
            mask ^= leading[top]
    return len(leading)

def ranks(matrix: IntMatrix) -> Tuple[int, int]:
    """
    Returns (rank over Q, rank over F2). The rational rank uses Bareiss fraction free
    elimination, the binary rank eliminates bit rows of the mod 2 reduction
    """
    return _rank_rational(matrix), _rank_binary(matrix)

def s_from_ranks(matrix: IntMatrix) -> int:
    """
    S of the presented group through the universal coefficient theorem:
    dim H1(;Z2) - dim H1(;Q) = (n - rank_F2) - (n - rank_Q)
    """
    rank_q, rank_f2 = ranks(matrix)
    return (rank_q - rank_f2) % 2
