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
Gassmann tools. Computational group theory for the Chern–Simons (CS) obstruction
to being a closed orientable 3-manifold group.

Provides permutation groups, finitely presented groups, integer Smith normal forms,
almost-conjugate (Gassmann) subgroup detection and the S / csinv invariants.

:class: Format
Enumeration for the implemented report formats

:class: Verdict
Enumeration for the outcome of an obstruction check

:class: InputError
Raised when mathematical input is invalid

:class: ParseError
Raised when text input parsing failes

:class: DataError
Raised when a shipped data file fails its self-check

:class: LimitError
Raised when a configured limit or search budget is exceeded
"""

from enum import Enum

class Format(Enum):
    """
    Enumerations defining the report export formats
    """
    text = 0
    json = 1

    def __repr__(self) -> str:
        return self._name_

class Verdict(Enum):
    """
    Enumerations defining the obstruction verdicts
        Verdict.obstructed: a csinv of 1 was found for an almost-conjugate pair
        Verdict.consistent: no obstruction found within the searched space
        Verdict.satisfied: no obstruction exists, the search was exhaustive
        Verdict.unknown: a limit was hit before a decision could be made
    """
    obstructed = "obstructed"
    consistent = "consistent"
    satisfied = "satisfies CS (exhaustive)"
    unknown = "unknown"

    def __repr__(self) -> str:
        return self._name_

class InputError(Exception):
    """Raised when mathematical input is invalid"""
    pass

class ParseError(InputError):
    """Raised when text input parsing failes"""
    def __init__(self, message: str, line: int=0, column: int=0) -> None:
        self.message: str = message
        self.line: int = line
        self.column: int = column
        if line:
            super().__init__(f"line {line}, column {column}: {message}")
        else:
            super().__init__(message)

class DataError(InputError):
    """Raised when a shipped data file fails its self-check"""
    pass

class LimitError(Exception):
    """Raised when a configured limit or search budget is exceeded"""
    pass
