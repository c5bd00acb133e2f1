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

"""Exceptions raised by semistable.

All of them derive from ValueError so callers that only know about ValueError keep working.
"""

__all__ = ['ConfigurationFileError', 'MissingTemplateError', 'PreconditionError', 'StructuralError']

from typing import Iterable


class StructuralError(ValueError):
    """Inconsistent input: a broken complex, dangling references, d∘d ≠ 0 or a disconnected dual complex."""

    def __init__(self, message: str, problems: Iterable[str] = ()):
        self.problems = tuple(problems)
        super().__init__(message, self.problems)


class PreconditionError(ValueError):
    """An operation was called on an input outside of its domain."""


class MissingTemplateError(ValueError):
    """No transfer map is known for an incidence flag (component ⊃ curve)."""

    def __init__(self, component: str, curve: str, detail: str = ''):
        self.component = component
        self.curve = curve
        super().__init__(f'No transfer template for flag {component} ⊃ {curve}. {detail}'.strip(), (component, curve))


class ConfigurationFileError(ValueError):
    """A configuration document could not be parsed into a configuration."""

    def __init__(self, message: str, problems: Iterable[str] = ()):
        self.problems = tuple(problems)
        super().__init__(message, self.problems)
