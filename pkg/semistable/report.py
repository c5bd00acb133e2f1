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


__all__ = ['Check', 'Report', 'ReportWriter', 'plain']

import enum
import json
import sys
from fractions import Fraction
from numbers import Integral
from typing import IO, Any, Iterable, Optional, Union

from semistable.constants import ReportFormat


def plain(x: Any) -> Any:
    """Converts report values to JSON compatible python values."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, enum.IntEnum):
        return str(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, '_asdict'):
        return {k: plain(v) for k, v in x._asdict().items()}
    if isinstance(x, dict):
        return {str(plain(k)): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [plain(v) for v in x]
    return str(x)


class Check:
    """A pass/fail entry with an explanation."""

    def __init__(self, ok: bool, detail: str = ''):
        self.ok = bool(ok)
        self.detail = detail

    def __str__(self):
        return ('PASS' if self.ok else 'FAIL') + (f' ({self.detail})' if self.detail else '')


class Text:
    def __init__(self, text: str):
        self.text = text


class Table:
    def __init__(self, rows: Iterable[Any]):
        self.rows = [plain(x) for x in rows]


class Report(dict):
    """Ordered tag -> entry map rendered as text or canonical JSON."""

    def value(self, tag: str, value: Any):
        """Adds a value to the report."""
        self[tag] = plain(value)

    def text(self, tag: str, text: str):
        """Adds text shown verbatim in text output."""
        self[tag] = Text(text)

    def table(self, tag: str, rows: Iterable[Any]):
        """Adds a list of records, one per line in text output."""
        self[tag] = Table(rows)

    def check(self, tag: str, ok: bool, detail: str = ''):
        """Adds a pass/fail entry."""
        self[tag] = Check(ok, detail)

    @property
    def ok(self) -> bool:
        """Whether every check of the report passed."""
        return all(x.ok for x in self.values() if isinstance(x, Check))

    def to_json(self) -> dict:
        result = {}
        for tag, entry in self.items():
            if isinstance(entry, Check):
                result[tag] = {'ok': entry.ok, 'detail': entry.detail}
            elif isinstance(entry, Text):
                result[tag] = entry.text
            elif isinstance(entry, Table):
                result[tag] = entry.rows
            else:
                result[tag] = entry
        return result

    def __call__(self, fmt: Union[ReportFormat, str] = ReportFormat.TEXT) -> str:
        if ReportFormat(fmt) == ReportFormat.JSON:
            return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'
        lines = []
        for tag, entry in self.items():
            if isinstance(entry, Table):
                lines.append(f'{tag}:')
                lines += [f'  {_line(row)}' for row in entry.rows]
            elif isinstance(entry, Text):
                lines.append(f'{tag}: {entry.text}')
            else:
                lines.append(f'{tag}: {_line(entry)}')
        return '\n'.join(lines) + '\n'


def _line(x: Any) -> str:
    if isinstance(x, dict):
        return ', '.join(f'{k}={_line(v)}' for k, v in x.items())
    if isinstance(x, list):
        return '[' + ', '.join(_line(v) for v in x) + ']'
    return str(x)


class ReportWriter:
    """Writes reports to a stream, stdout by default."""

    def __init__(self, fmt: Union[ReportFormat, str] = ReportFormat.TEXT, stream: Optional[IO[str]] = None):
        self.fmt = ReportFormat(fmt)
        self.stream = stream or sys.stdout

    def write(self, report: Report):
        """Renders and writes one report."""
        self.stream.write(report(self.fmt))

    def close(self):
        """Flushes the stream."""
        self.stream.flush()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
