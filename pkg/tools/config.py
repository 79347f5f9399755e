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
Run configuration. Collects the computational limits every bounded algorithm in the
package obeys, the scan worker count and the report format.

:class: RunConfig
Container of all limits and run options
"""

from __future__ import annotations
from typing import Union, Dict, Any

from . import Format, InputError

import os
import logging

logger = logging.getLogger(__name__)

ENV_MAX_COSETS = "GASSMANN_MAX_COSETS"

class RunConfig:
    """
    Container for the run limits
        max_cosets: coset limit of a single Todd–Coxeter enumeration
        max_enumeration_order: largest group whose elements may be streamed
        max_class_order: largest group whose conjugacy classes are computed explicitly
        max_subgroup_order: largest group whose subgroup lattice is enumerated
        max_coset_degree: largest index realized as an explicit coset table or action
        hom_budget: number of partial assignments hom_search may visit
        workers: process count of the fix-count scans
        output: the report format
    """
    MAX_COSETS: int = 10**6
    MAX_ENUMERATION_ORDER: int = 2 * 10**7
    MAX_CLASS_ORDER: int = 10**5
    MAX_SUBGROUP_ORDER: int = 512
    MAX_COSET_DEGREE: int = 10**5
    HOM_BUDGET: int = 10**6

    def __init__(
        self,
        max_cosets: Union[None, int]=None,
        max_enumeration_order: Union[None, int]=None,
        max_class_order: Union[None, int]=None,
        max_subgroup_order: Union[None, int]=None,
        max_coset_degree: Union[None, int]=None,
        hom_budget: Union[None, int]=None,
        workers: int=1,
        output: Format=Format.text
    ) -> None:
        self.max_cosets: int = self.MAX_COSETS if max_cosets is None else max_cosets
        self.max_enumeration_order: int = self.MAX_ENUMERATION_ORDER if max_enumeration_order is None else max_enumeration_order
        self.max_class_order: int = self.MAX_CLASS_ORDER if max_class_order is None else max_class_order
        self.max_subgroup_order: int = self.MAX_SUBGROUP_ORDER if max_subgroup_order is None else max_subgroup_order
        self.max_coset_degree: int = self.MAX_COSET_DEGREE if max_coset_degree is None else max_coset_degree
        self.hom_budget: int = self.HOM_BUDGET if hom_budget is None else hom_budget
        self.workers: int = workers
        self.output: Format = output

        self.validate()

    def validate(self) -> None:
        """
        Checks that all limits are positive
            :raises InputError: if a limit is not a positive integer
        """
        for key, value in self.export().items():
            if key == "output":
                continue
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InputError(f"{key} must be a positive integer, got '{value}'")

    @classmethod
    def from_env(cls, **kwargs) -> RunConfig:
        """
        Builds a RunConfig, the coset limit can be overridden by the GASSMANN_MAX_COSETS
        environment variable. Explicit keyword arguments take precedence over the environment.
            :raises InputError: if the environment variable is not an integer
        """
        value = os.environ.get(ENV_MAX_COSETS)
        if value is not None and kwargs.get("max_cosets") is None:
            try:
                kwargs["max_cosets"] = int(value)
            except ValueError:
                raise InputError(f"{ENV_MAX_COSETS} must be an integer, got '{value}'") from None
            logger.info(f"coset limit set to {kwargs['max_cosets']} from {ENV_MAX_COSETS}")

        return cls(**kwargs)

    def export(self) -> Dict[str, Any]:
        """
        Returns the configuration as a dictionary
        """
        return {
            "max_cosets": self.max_cosets,
            "max_enumeration_order": self.max_enumeration_order,
            "max_class_order": self.max_class_order,
            "max_subgroup_order": self.max_subgroup_order,
            "max_coset_degree": self.max_coset_degree,
            "hom_budget": self.hom_budget,
            "workers": self.workers,
            "output": self.output.name
        }

    def __repr__(self) -> str:
        return f"(RunConfig:{self.export()})"
