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
The abstract report container

:class: AbstractReport
Base of all result reports. Handles the export to text and json and the saving
of a report to disk
"""

from __future__ import annotations
from typing import Union, Dict, Any

from . import Format, InputError, json

import os

class AbstractReport:
    """
    Abstract container of a computation result. Subclasses implement _export_text
    and _export_json
    """
    def export(self, export_format: Format) -> Union[str, dict]:
        """
        Exports the report as the specified format
            :param export_format: the format to export
            :raises NotImplementedError: when the export format has not yet been implemented
            :returns: a string for Format.text, a dictionary for Format.json
        """
        if export_format == Format.text:
            return self._export_text()
        elif export_format == Format.json:
            return self._export_json()
        else:
            raise NotImplementedError(f"Export of format {export_format} has yet to be implemented")

    def dumps(self, export_format: Format) -> str:
        """
        Serializes the report into a string of the specified format
            :param export_format: the format to serialize to
        """
        if export_format == Format.json:
            return json.dumps_pretty(self._export_json())
        return self._export_text()

    def save(self, directory: str, name: str, export_format: Format=Format.json) -> str:
        """
        Writes the report to the directory. The file is encoded in utf-8
            :param directory: the directory to save the file to
            :param name: the file name without extension
            :param export_format: the file format
            :raises InputError: when directory doesnt exists or when file already exists in the directory
            :returns: the path of the written file
        """
        if not os.path.isdir(directory):
            raise InputError("directory doesnt exist")

        if export_format == Format.text:
            name += ".txt"
        elif export_format == Format.json:
            name += ".json"
        else:
            raise NotImplementedError("Unimplemented export format")

        path = os.path.join(directory, name)
        if os.path.isfile(path):
            raise InputError("file already exists")

        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps(export_format))
            f.write("\n")

        return path

    def _export_text(self) -> str:
        """
        (Pure virtual) Exports the report as human readable text
        """
        raise NotImplementedError

    def _export_json(self) -> Dict[str, Any]:
        """
        (Pure virtual) Exports the report as a json compatible dictionary
        """
        raise NotImplementedError

    def __str__(self) -> str:
        return self._export_text()
