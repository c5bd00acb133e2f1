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

__all__ = ['duplicates', 'index_map']

import collections
from typing import Dict, Hashable, Iterable, List


def duplicates(items: Iterable[Hashable]) -> List[Hashable]:
    """Returns the items occurring more than once, in order of first repetition."""
    counts = collections.Counter()
    repeated = []
    for item in items:
        counts[item] += 1
        if counts[item] == 2:
            repeated.append(item)
    return repeated


def index_map(items: Iterable[Hashable]) -> Dict[Hashable, int]:
    """Maps each item to its position."""
    return {item: i for i, item in enumerate(items)}
