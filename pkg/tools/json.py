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
Extends the python standard library json module with function definition for
pretty printing of reports

:def: dumps_pretty
Serializes a dictionary into a pretty human readable compact json string
"""

from json import *
from json import dumps as _dumps

def dumps_pretty(data: dict) -> str:
    """
    Serializes dictionary into a pretty human readable compact json dump.
    Multilines all dictionaries, lists of scalars are kept on a single line.
    Output is valid json: json.loads(dumps_pretty(data)) == data

    Doesnt escape non-ASCII encoding
        :param data: the dictionary to serialize
        :raises ValueError: if a value is not json serializable
    """

    def indentation(indent_level, indent_size=2):
        return " " * indent_level * indent_size

    def dump_scalar(item) -> str:
        if item is None:
            return "null"
        elif isinstance(item, bool):
            return "true" if item else "false"
        elif isinstance(item, int):
            return str(item)
        elif isinstance(item, str):
            return _dumps(item, ensure_ascii=False)
        raise ValueError(f"unserializable type: {type(item)}")

    def dump_dict(data: dict, indent_level=0) -> str:
        if not data:
            return "{}"
        indent = indentation(indent_level)
        output = "{\n"
        for i, key in enumerate(data):
            output += indent + _dumps(str(key), ensure_ascii=False) + ":"
            if isinstance(data[key], list):
                output += dump_list(data[key], indent_level + 1)
            elif isinstance(data[key], dict):
                output += dump_dict(data[key], indent_level + 1)
            else:
                output += dump_scalar(data[key])

            if i < len(data) - 1:
                output += ",\n"
            else:
                output += "\n"
        output += indentation(indent_level - 1) + "}"

        return output

    def dump_list(data: list, indent_level=0) -> str:
        output = "["
        for i, item in enumerate(data):
            if isinstance(item, list):
                output += dump_list(item, indent_level+1)
            elif isinstance(item, dict):
                output += dump_dict(item, indent_level+1)
            else:
                output += dump_scalar(item)

            if i < len(data) -1:
                output += ","
        output += "]"

        return output

    # Start parsing
    output = dump_dict(data, 1)

    return output
