"""Report records shared by the verifiers.

Every check produces preconditions and claims with exact left/right sides.
Rendering keeps integers and rationals as decimal or 'p/q' strings so JSON
output never loses precision.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

__all__ = [
    "Claim",
    "LemmaReport",
    "Precondition",
    "VERDICT_PRECONDITIONS",
    "VERDICT_VERIFIED",
    "VERDICT_VIOLATED",
    "claim",
    "exact_str",
    "vacuous",
]

VERDICT_VERIFIED = "verified"
VERDICT_VIOLATED = "violated"
VERDICT_PRECONDITIONS = "preconditions-not-met"

_RELATIONS = {
    "==": operator.eq,
    "!=": operator.ne,
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
}


def exact_str(value: Any) -> Any:
    """Render exact values losslessly: ints as decimal, rationals as 'p/q'."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [exact_str(v) for v in value]
    if isinstance(value, dict):
        return {k: exact_str(v) for k, v in value.items()}
    return str(value) if not isinstance(value, (str, float)) else value


@dataclass(frozen=True)
class Precondition:
    name: str
    value: Any
    satisfied: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "value": exact_str(self.value), "satisfied": self.satisfied}


@dataclass(frozen=True)
class Claim:
    description: str
    lhs: Any
    relation: str
    rhs: Any
    satisfied: bool
    note: str = ""

    def to_dict(self) -> dict:
        d = {
            "description": self.description,
            "lhs": exact_str(self.lhs),
            "relation": self.relation,
            "rhs": exact_str(self.rhs),
            "satisfied": self.satisfied,
        }
        if self.note:
            d["note"] = self.note
        return d


def claim(description: str, lhs: Any, relation: str, rhs: Any, note: str = "") -> Claim:
    """Evaluate an exact comparison and record it."""
    try:
        op = _RELATIONS[relation]
    except KeyError:
        raise ValueError(f"unknown relation {relation!r}") from None
    return Claim(description, lhs, relation, rhs, bool(op(lhs, rhs)), note)


def vacuous(description: str, note: str) -> Claim:
    """A claim whose hypothesis failed; recorded as satisfied with a note."""
    return Claim(description, None, "==", None, True, note)


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of one verification: parameter echo, claims, verdict."""

    name: str
    preconditions: tuple[Precondition, ...]
    claims: tuple[Claim, ...]
    witness: Any = None
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if any(not p.satisfied for p in self.preconditions):
            return VERDICT_PRECONDITIONS
        if all(c.satisfied for c in self.claims):
            return VERDICT_VERIFIED
        return VERDICT_VIOLATED

    def to_dict(self) -> dict:
        d = {
            "type": "lemma",
            "name": self.name,
            "preconditions": [p.to_dict() for p in self.preconditions],
            "claims": [c.to_dict() for c in self.claims],
            "verdict": self.verdict,
        }
        if self.witness is not None:
            d["witness"] = exact_str(self.witness)
        if self.extra:
            d["extra"] = exact_str(self.extra)
        return d
