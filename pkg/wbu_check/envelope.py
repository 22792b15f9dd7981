"""
JSON envelope printed by the CLI under --json.

    {"command": ..., "inputs": {...}, "result": ..., "status": "ok" | "violation" | "error"}

Rationals are always written as "p/q" strings, baskets as lists of [r, v].
"""

import json
import re
from dataclasses import dataclass, field, fields, is_dataclass
from fractions import Fraction

from .core_arith import format_rational, parse_rational
from .reid_rr import Basket, BasketEntry

STATUSES = ("ok", "violation", "error")

_RATIONAL_PATTERN = re.compile(r"^-?\d+/\d+$")


def encode(value):
    """Plain JSON-ready form of a result value."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Basket):
        return [list(entry.as_pair()) for entry in value]
    if isinstance(value, BasketEntry):
        return list(value.as_pair())
    if is_dataclass(value):
        return {f.name: encode(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [encode(item) for item in value]
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"cannot encode {type(value).__name__} in an envelope")


def decode(value):
    """Inverse of encode for everything except dataclass identity: "p/q" becomes a Fraction."""
    if isinstance(value, str) and _RATIONAL_PATTERN.match(value):
        return parse_rational(value)
    if isinstance(value, dict):
        return {key: decode(item) for key, item in value.items()}
    if isinstance(value, list):
        return [decode(item) for item in value]
    return value


@dataclass
class OutputEnvelope:
    command: str
    inputs: dict = field(default_factory=dict)
    result: object = None
    status: str = "ok"

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": encode(self.inputs),
            "result": encode(self.result),
            "status": self.status,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        return cls(
            command=payload["command"],
            inputs=decode(payload.get("inputs", {})),
            result=decode(payload.get("result")),
            status=payload.get("status", "ok"),
        )
