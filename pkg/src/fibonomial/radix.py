"""Digit expansions in base p and in the entry-point base, plus the
carry-tracking addition that drives fibonomial valuations.

For a prime p whose Fibonacci entry point is z, the entry-point base has
place values (1, z, z*p, z*p**2, ...): the units digit is below z and
every later digit is below p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .valuation import PrimeProfile


@dataclass(frozen=True)
class DigitVector:
    """Little-endian digits of a non-negative integer.

    pstar is None for a uniform base-p expansion; otherwise the digits live
    in the mixed-radix base (1, pstar, pstar*p, pstar*p**2, ...). Canonical
    form carries no trailing zero digit, and zero is the empty vector.
    """

    digits: tuple[int, ...]
    p: int
    pstar: int | None = None

    def bound(self, i: int) -> int:
        """Exclusive upper bound for the digit at position i."""
        if self.pstar is not None and i == 0:
            return self.pstar
        return self.p

    def validate(self) -> None:
        if self.p < 2:
            raise ValueError(f"base must be >= 2, got {self.p}")
        if self.pstar is not None and self.pstar < 2:
            raise ValueError(f"units radix must be >= 2, got {self.pstar}")
        for i, d in enumerate(self.digits):
            if not 0 <= d < self.bound(i):
                raise ValueError(
                    f"digit {d} at position {i} outside [0, {self.bound(i)})")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("non-canonical digit vector: trailing zero")

    def to_json(self) -> dict[str, Any]:
        return {
            "base": "p" if self.pstar is None else "Fp",
            "p": self.p,
            "pstar": self.pstar,
            "digits": list(self.digits),
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "DigitVector":
        if obj.get("base") not in ("p", "Fp"):
            raise ValueError(f"unknown base tag {obj.get('base')!r}")
        pstar = obj.get("pstar")
        if obj["base"] == "p" and pstar is not None:
            raise ValueError("uniform base must not carry a units radix")
        if obj["base"] == "Fp" and pstar is None:
            raise ValueError("entry-point base requires a units radix")
        vec = cls(tuple(obj["digits"]), obj["p"], pstar)
        vec.validate()
        return vec


@dataclass(frozen=True)
class CarryReport:
    """Outcome of adding a/z and b/z positionally in base p.

    carries_left counts the carries among integer-part columns (left of the
    radix point); carry_across is the single possible carry out of the
    fractional part into the units column. digit_sums[i] is the full column
    sum (both digits plus incoming carry) for integer column i, so a caller
    can replay the addition column by column.
    """

    carries_left: int
    carry_across: bool
    digit_sums: tuple[int, ...]


def expand_base_p(n: int, p: int) -> DigitVector:
    """Little-endian base-p digits of n; zero expands to the empty vector."""
    if n < 0:
        raise ValueError(f"cannot expand negative integer {n}")
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitVector(tuple(digits), p)


def expand_base_fp(n: int, profile: "PrimeProfile") -> DigitVector:
    """Digits of n in the entry-point base of profile.

    The units digit is n mod z (z = profile.p_star); the remaining digits
    are the plain base-p expansion of n // z.
    """
    if n < 0:
        raise ValueError(f"cannot expand negative integer {n}")
    q, units = divmod(n, profile.p_star)
    rest = expand_base_p(q, profile.p).digits
    digits = (units, *rest) if (rest or units) else ()
    return DigitVector(digits, profile.p, profile.p_star)


def evaluate(vec: DigitVector) -> int:
    """Inverse of expansion: the integer a digit vector denotes."""
    vec.validate()
    total = 0
    place = 1
    for i, digit in enumerate(vec.digits):
        total += digit * place
        place *= vec.bound(i)
    return total


def add_with_carries(a: int, b: int, profile: "PrimeProfile") -> CarryReport:
    """Add a/z to b/z in base p and report the carries, z = profile.p_star.

    The fractional parts a mod z and b mod z produce a carry into the units
    column exactly when they sum to at least z; the integer parts a//z and
    b//z are then added in plain base p with that carry fed in. The trace
    extends one column past the longer operand so a final carry lands in it.
    """
    if a < 0 or b < 0:
        raise ValueError(f"operands must be >= 0, got ({a}, {b})")
    z, p = profile.p_star, profile.p
    qa, ra = divmod(a, z)
    qb, rb = divmod(b, z)
    across = ra + rb >= z
    da = expand_base_p(qa, p).digits
    db = expand_base_p(qb, p).digits
    width = max(len(da), len(db)) + 1
    carry = 1 if across else 0
    carries = 0
    sums = []
    for i in range(width):
        s = carry
        if i < len(da):
            s += da[i]
        if i < len(db):
            s += db[i]
        sums.append(s)
        if s >= p:
            carry = 1
            carries += 1
        else:
            carry = 0
    return CarryReport(carries, across, tuple(sums))
