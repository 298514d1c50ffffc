"""Pass/fail records for identity checks and their JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .exactnum import format_rational
from .polyring import Poly

__all__ = ["Failure", "IdentityReport", "render_value"]


def render_value(v: Any) -> str:
    if isinstance(v, Poly):
        return str(v)
    if isinstance(v, (Fraction, int)):
        return format_rational(Fraction(v))
    return str(v)


@dataclass(frozen=True)
class Failure:
    indices: tuple
    expected: str
    actual: str


@dataclass
class IdentityReport:
    """Outcome of checking one identity at one parameter point.

    ``passed`` is derived from ``first_failure``, so the two never disagree.
    A report with ``skipped`` set records a pole point that was excluded.
    """

    identity: str
    params: dict
    order_range: tuple[int, int]
    first_failure: Optional[Failure] = None
    skipped: Optional[str] = None
    checks: int = 0

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def record(self, indices, expected, actual) -> bool:
        self.checks += 1
        ok = expected == actual
        if not ok and self.first_failure is None:
            self.first_failure = Failure(tuple(indices), render_value(expected), render_value(actual))
        return ok

    @classmethod
    def from_pair(cls, identity, params, order_range, indices, expected, actual) -> "IdentityReport":
        rep = cls(identity, params, tuple(order_range))
        rep.record(indices, expected, actual)
        return rep

    @classmethod
    def skip(cls, identity, params, order_range, reason: str) -> "IdentityReport":
        return cls(identity, params, tuple(order_range), skipped=reason)

    def to_dict(self) -> dict:
        fail = None
        if self.first_failure is not None:
            fail = {"indices": list(self.first_failure.indices),
                    "expected": self.first_failure.expected,
                    "actual": self.first_failure.actual}
        return {
            "identity": self.identity,
            "params": self.params,
            "range": list(self.order_range),
            "passed": self.passed,
            "failure": fail,
            "skipped": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
