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


import sys

from . import covers
from . import io
from . import linalg
from . import neron
from . import random
from . import report
from . import sncl
from . import spectral
from . import threefold
from . import topology
from . import typing
from . import util
from . import zoo
from ._version import __version__
from .constants import *
from .errors import *
from .sncl.configuration import *

assert sys.version_info >= (3, 7)
