# Copyright 2021 The Semistable Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""This module contains type declarations for semistable."""

__all__ = ['Bidegree', 'Entry', 'FileOrStr', 'Rows']

from fractions import Fraction
from numbers import Rational
from typing import IO, Sequence, Tuple, Union

Bidegree = Tuple[int, int]
Entry = Union[int, Fraction, Rational]
FileOrStr = Union[str, IO[str]]
Rows = Sequence[Sequence[Entry]]
