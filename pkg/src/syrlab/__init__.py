# File: __init__.py
# Description: Package root for syrlab.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

__version__ = '0.1.0'
