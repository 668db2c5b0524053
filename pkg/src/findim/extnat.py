"""Extended naturals: finite values, certified infinity and bounded-below unknowns."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExtNat:
    """Element of N u {inf} u {unknown(>= k)}.

    ``kind`` is "finite", "infinite" or "unknown".  For "finite" the value is
    ``value``; for "unknown" the true value is some element (possibly
    infinite) of ``[value, inf]``.
    """

    kind: str
    value: int = 0

    def __post_init__(self):
        if self.kind not in ("finite", "infinite", "unknown"):
            raise ValueError(f"bad ExtNat kind {self.kind!r}")
        if self.kind != "infinite" and self.value < 0:
            raise ValueError("ExtNat values are non-negative")

    # constructors
    @staticmethod
    def finite(n: int) -> "ExtNat":
        return ExtNat("finite", int(n))

    @staticmethod
    def infinite() -> "ExtNat":
        return ExtNat("infinite", 0)

    @staticmethod
    def unknown(at_least: int) -> "ExtNat":
        return ExtNat("unknown", int(at_least))

    @staticmethod
    def coerce(x) -> "ExtNat":
        if isinstance(x, ExtNat):
            return x
        if isinstance(x, int):
            return ExtNat.finite(x)
        raise TypeError(f"cannot interpret {x!r} as ExtNat")

    # predicates
    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    @property
    def lower(self) -> float:
        return float("inf") if self.is_infinite else self.value

    @property
    def upper(self) -> float:
        return self.value if self.is_finite else float("inf")

    # arithmetic
    def __add__(self, other) -> "ExtNat":
        o = ExtNat.coerce(other)
        if self.is_infinite or o.is_infinite:
            return ExtNat.infinite()
        if self.is_unknown or o.is_unknown:
            return ExtNat.unknown(self.value + o.value)
        return ExtNat.finite(self.value + o.value)

    __radd__ = __add__

    def max(self, other) -> "ExtNat":
        o = ExtNat.coerce(other)
        if self.is_infinite or o.is_infinite:
            return ExtNat.infinite()
        if self.is_unknown or o.is_unknown:
            return ExtNat.unknown(max(self.value, o.value))
        return ExtNat.finite(max(self.value, o.value))

    def min(self, other) -> "ExtNat":
        o = ExtNat.coerce(other)
        if self.is_infinite:
            return o
        if o.is_infinite:
            return self
        if self.is_finite and o.is_finite:
            return ExtNat.finite(min(self.value, o.value))
        if self.is_finite and o.is_unknown:
            return self if self.value <= o.value else ExtNat.unknown(o.value)
        if o.is_finite and self.is_unknown:
            return o if o.value <= self.value else ExtNat.unknown(self.value)
        return ExtNat.unknown(min(self.value, o.value))

    def le(self, other) -> bool | None:
        """``self <= other``; None when undetermined."""
        o = ExtNat.coerce(other)
        if self.upper <= o.lower:
            return True
        if self.lower > o.upper:
            return False
        return None

    def lt(self, other) -> bool | None:
        o = ExtNat.coerce(other)
        if self.upper < o.lower:
            return True
        if self.lower >= o.upper:
            return False
        return None

    # display / serialization
    def __str__(self) -> str:
        if self.is_finite:
            return str(self.value)
        if self.is_infinite:
            return "inf"
        return f"unknown(>={self.value})"

    def to_json(self):
        if self.is_finite:
            return self.value
        if self.is_infinite:
            return "inf"
        return {"unknown_at_least": self.value}

    @staticmethod
    def from_json(x) -> "ExtNat":
        if isinstance(x, int):
            return ExtNat.finite(x)
        if x == "inf":
            return ExtNat.infinite()
        return ExtNat.unknown(int(x["unknown_at_least"]))


def emax(*values) -> ExtNat:
    out = ExtNat.coerce(values[0])
    for v in values[1:]:
        out = out.max(v)
    return out
