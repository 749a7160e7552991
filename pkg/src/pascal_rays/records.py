"""Line-delimited JSON records for results and sweep reports.

Big integers are written as decimal strings and rationals as ``"p/q"``
strings, so nothing is lost to 64-bit or float conversion by a reader.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from . import __version__


def enc_int(n: int) -> str:
    return str(n)


def enc_ints(values: Iterable[int]) -> list[str]:
    return [str(v) for v in values]


def enc_frac(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def dec_frac(s: str) -> Fraction:
    return Fraction(s)


def dumps(obj: Any) -> str:
    """Compact, key-sorted, single-line JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass
class ResultRecord:
    command: str
    parameters: dict
    outcome: Any
    timestamp: int = field(default_factory=lambda: int(time.time()))
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "outcome": self.outcome,
            "timestamp": self.timestamp,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        raw = json.loads(line)
        return cls(raw["command"], raw["parameters"], raw["outcome"],
                   raw["timestamp"], raw["tool_version"])

    def append_to(self, path) -> None:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(self.to_json() + "\n")


def read_records(path) -> list[ResultRecord]:
    with open(path, encoding="utf-8") as fh:
        return [ResultRecord.from_json(line) for line in fh if line.strip()]
