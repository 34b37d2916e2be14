"""Divisibility-conjecture machinery for the fibonomial triangle.

The conjecture under test: for a prime p whose entry point z is not below
p, p divides the fibonomial coefficient on (n, k) exactly when p divides
the product of the digitwise fibonomial coefficients of n and k expanded
in the entry-point base. Sweeps check the biconditional row by row; for
primes with z < p the biconditional provably fails and a constructive
witness is produced instead.

Also here: the base-5 digit rule for divisibility by 5, self-similarity
and shift identities of the triangle mod 5, the mod-2 period, and the
classical digit-product residue for ordinary binomials.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import IO

from .core import binomial, fib_mod, fibonomial, iter_fibonomial_rows_mod
from .radix import expand_base_fp, expand_base_p
from .valuation import (
    PrimeProfile,
    Relation,
    carry_valuation,
    entry_point,
    fibotorial_valuations,
    is_prime,
)


@dataclass(frozen=True)
class ConjectureVerdict:
    """Both sides of the biconditional at a single (n, k)."""

    p: int
    n: int
    k: int
    lhs_divisible: bool  # p divides the fibonomial coefficient itself
    rhs_divisible: bool  # p divides the digit product
    agrees: bool

    @classmethod
    def compare(cls, p: int, n: int, k: int, lhs: bool, rhs: bool) -> "ConjectureVerdict":
        return cls(p, n, k, lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class SweepRecord:
    """Result of sweeping rows [0, rows) for one prime."""

    p: int
    rows: int
    method: str  # "carry" | "oracle"
    counterexamples: tuple[ConjectureVerdict, ...]
    seconds: float

    def jsonl_lines(self) -> list[str]:
        """Header, one line per disagreement, then a summary.

        The summary's "seconds" is written as null so identical sweeps
        serialize identically; the measured duration stays on the record.
        """
        lines = [json.dumps({"p": self.p, "rows": self.rows, "method": self.method})]
        for v in self.counterexamples:
            lines.append(json.dumps({
                "p": v.p, "n": v.n, "k": v.k,
                "lhs": v.lhs_divisible, "rhs": v.rhs_divisible,
                "agree": v.agrees,
            }))
        lines.append(json.dumps(
            {"counterexamples": len(self.counterexamples), "seconds": None}))
        return lines

    def write_jsonl(self, fh: IO[str]) -> None:
        for line in self.jsonl_lines():
            fh.write(line + "\n")


@lru_cache(maxsize=None)
def _digit_factor_divisible(a: int, b: int, p: int) -> bool:
    # Digit pairs are small enough to evaluate the coefficient exactly once
    # and cache the divisibility bit; b > a gives the zero coefficient,
    # which every prime divides.
    return fibonomial(a, b) % p == 0


def _pairs_divisible(nd: tuple[int, ...], kd: tuple[int, ...], p: int) -> bool:
    for a, b in zip_longest(nd, kd, fillvalue=0):
        if _digit_factor_divisible(a, b, p):
            return True
    return False


def digit_product_divisible(n: int, k: int, profile: PrimeProfile) -> bool:
    """Whether p divides the product of positionwise fibonomial coefficients
    of the digits of n and k in the entry-point base (k zero-padded)."""
    nd = expand_base_fp(n, profile).digits
    kd = expand_base_fp(k, profile).digits
    return _pairs_divisible(nd, kd, profile.p)


def verify_conjecture(
    profile: PrimeProfile,
    rows: int,
    *,
    method: str | None = None,
    jobs: int = 1,
    oracle_stride: int | None = 37,
) -> SweepRecord:
    """Check the biconditional at every (n, k) with 0 <= k <= n < rows.

    method is "carry" (odd p; the default) or "oracle" (exact big-integer
    valuations; mandatory for p = 2). In carry mode every oracle_stride-th
    pair in row-major order is recomputed with the oracle; a mismatch there
    is an arithmetic bug and raises, never a counterexample. Rows may be
    partitioned across processes with jobs > 1; results are merged in
    deterministic (n, k) order either way.
    """
    if profile.relation is Relation.LESS:
        raise ValueError(
            f"entry point {profile.p_star} of {profile.p} is below the prime, so the "
            "biconditional provably fails; use find_counterexample for the witness")
    if method is None:
        method = "oracle" if profile.p == 2 else "carry"
    if method not in ("carry", "oracle"):
        raise ValueError(f"unknown method {method!r}")
    if method == "carry" and profile.p == 2:
        raise ValueError("carry counting requires an odd prime; use the oracle for 2")
    if rows < 0:
        raise ValueError(f"rows must be >= 0, got {rows}")

    start = time.perf_counter()
    stride = oracle_stride or 0
    if method == "oracle" or stride:
        prefix = fibotorial_valuations(max(rows - 1, 0), profile.p)
    else:
        prefix = ()
    chunks = _row_chunks(rows, jobs)
    if len(chunks) <= 1 or jobs <= 1:
        parts = [_sweep_rows(profile, lo, hi, method, stride, prefix)
                 for lo, hi in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(
                _sweep_rows,
                [profile] * len(chunks),
                [lo for lo, _ in chunks],
                [hi for _, hi in chunks],
                [method] * len(chunks),
                [stride] * len(chunks),
                [prefix] * len(chunks),
            ))
    bad = sorted((v for part in parts for v in part), key=lambda v: (v.n, v.k))
    return SweepRecord(profile.p, rows, method, tuple(bad),
                       time.perf_counter() - start)


def _row_chunks(rows: int, jobs: int) -> list[tuple[int, int]]:
    """Split [0, rows) into contiguous spans of roughly equal pair count."""
    if jobs <= 1 or rows <= 1:
        return [(0, rows)]
    pieces = min(rows, jobs * 4)
    total = rows * (rows + 1) / 2
    bounds = [0]
    acc = 0.0
    for n in range(rows):
        acc += n + 1
        if acc >= total * len(bounds) / pieces and len(bounds) < pieces:
            bounds.append(n + 1)
    bounds.append(rows)
    return [(bounds[i], bounds[i + 1])
            for i in range(len(bounds) - 1) if bounds[i] < bounds[i + 1]]


def _sweep_rows(
    profile: PrimeProfile,
    lo: int,
    hi: int,
    method: str,
    stride: int,
    prefix: tuple[int, ...],
) -> list[ConjectureVerdict]:
    p = profile.p
    bad = []
    for n in range(lo, hi):
        nd = expand_base_fp(n, profile).digits
        row_base = n * (n + 1) // 2
        for k in range(n + 1):
            kd = expand_base_fp(k, profile).digits
            rhs = _pairs_divisible(nd, kd, p)
            if method == "carry":
                e = carry_valuation(k, n - k, profile).exponent
                if stride and (row_base + k) % stride == 0:
                    want = prefix[n] - prefix[k] - prefix[n - k]
                    if want != e:
                        raise ArithmeticError(
                            f"carry valuation {e} disagrees with oracle {want} "
                            f"at (n={n}, k={k}, p={p})")
            else:
                e = prefix[n] - prefix[k] - prefix[n - k]
            lhs = e >= 1
            if lhs != rhs:
                bad.append(ConjectureVerdict.compare(p, n, k, lhs, rhs))
    return bad


def find_counterexample(profile: PrimeProfile) -> tuple[int, int, ConjectureVerdict]:
    """Constructive witness breaking the biconditional when z < p.

    At (z**2, z) the digit product picks up the factor F_z and is divisible
    by p, while the coefficient itself is not; both sides are computed, not
    assumed.
    """
    if profile.relation is not Relation.LESS:
        raise ValueError(
            f"entry point {profile.p_star} of {profile.p} is not below the prime; "
            "no witness is constructed for this class")
    z = profile.p_star
    n, k = z * z, z
    lhs = carry_valuation(k, n - k, profile).exponent >= 1
    rhs = digit_product_divisible(n, k, profile)
    return n, k, ConjectureVerdict.compare(profile.p, n, k, lhs, rhs)


def five_divides_fibonomial(n: int, k: int) -> bool:
    """Decide 5 | fibonomial coefficient (n, k) from base-5 digits alone:
    true exactly when some digit of k exceeds the matching digit of n."""
    if n < 0 or k < 0:
        raise ValueError(f"arguments must be >= 0, got ({n}, {k})")
    nd = expand_base_p(n, 5).digits
    kd = expand_base_p(k, 5).digits
    return any(b > a for a, b in zip_longest(nd, kd, fillvalue=0))


def _divisible_by_5(n: int, k: int) -> bool:
    if k > n:
        return True  # the coefficient is 0
    return carry_valuation(k, n - k, entry_point(5)).exponent >= 1


def check_self_similarity_mod5(m: int, n: int, k: int, i: int, j: int) -> bool:
    """Instance check: shifting (n, k) by (i, j) blocks of 5**m preserves
    divisibility by 5, for 0 <= n, k < 5**m and 0 <= j <= i <= 4."""
    if m < 0:
        raise ValueError(f"block exponent must be >= 0, got {m}")
    s = 5 ** m
    if not (0 <= n < s and 0 <= k < s):
        raise ValueError(f"need 0 <= n, k < {s}, got ({n}, {k})")
    if not 0 <= j <= i <= 4:
        raise ValueError(f"need 0 <= j <= i <= 4, got ({i}, {j})")
    return _divisible_by_5(n + i * s, k + j * s) == _divisible_by_5(n, k)


_rows_mod_cache: dict[int, list[tuple[int, ...]]] = {}


def _row_entry_mod(n: int, k: int, m: int) -> int:
    if k > n:
        return 0
    rows = _rows_mod_cache.get(m)
    if rows is None or len(rows) <= n:
        rows = [r.entries for r in iter_fibonomial_rows_mod(max(n + 1, 64), m)]
        _rows_mod_cache[m] = rows
    return rows[n][k]


def check_period_mod2(m: int, n: int, k: int) -> bool:
    """Instance check: the triangle mod 2 repeats with period 3 * 2**m in
    the row index, for 0 <= n, k < 3 * 2**m."""
    if m < 0:
        raise ValueError(f"period exponent must be >= 0, got {m}")
    period = 3 * 2 ** m
    if not (0 <= n < period and 0 <= k < period):
        raise ValueError(f"need 0 <= n, k < {period}, got ({n}, {k})")
    return _row_entry_mod(n + period, k, 2) == _row_entry_mod(n, k, 2)


def fib_shift_mod5(n: int) -> int:
    """F_{n+5} mod 5, asserting it equals 3 * F_n mod 5 on the way out."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    out = fib_mod(n + 5, 5)
    assert out == 3 * fib_mod(n, 5) % 5
    return out


def _small_k_fibonomial_mod5(n: int, k: int) -> int:
    # Falling product over k Fibonacci factors divided by fibotorial(k),
    # all mod 5; valid because fibotorial(k) is coprime to 5 for k <= 4.
    num = 1
    for i in range(k):
        num = num * fib_mod(n - i, 5) % 5
    den = 1
    for i in range(2, k + 1):
        den = den * fib_mod(i, 5) % 5
    return num * pow(den, -1, 5) % 5


def row_shift_mod5(n: int, k: int) -> tuple[int, int]:
    """The pair (coefficient on (n+5, k) mod 5, 3**k * coefficient on (n, k)
    mod 5) for k at most 4; the two agree for every valid n."""
    if not 0 <= k <= 4:
        raise ValueError(f"k must be between 0 and 4, got {k}")
    if k > n:
        raise ValueError(f"k must not exceed n, got ({n}, {k})")
    lhs = _small_k_fibonomial_mod5(n + 5, k)
    rhs = pow(3, k, 5) * _small_k_fibonomial_mod5(n, k) % 5
    return lhs, rhs


def lucas_binomial_residue(n: int, k: int, p: int) -> int:
    """Ordinary binomial coefficient mod p as the product of digitwise
    binomials in base p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0 or k < 0:
        raise ValueError(f"arguments must be >= 0, got ({n}, {k})")
    nd = expand_base_p(n, p).digits
    kd = expand_base_p(k, p).digits
    out = 1
    for a, b in zip_longest(nd, kd, fillvalue=0):
        out = out * binomial(a, b) % p
    return out


def max_entry_point_primes(bound: int) -> list[int]:
    """Primes up to bound whose entry point takes its maximum value p + 1."""
    return [p for p in range(2, bound + 1)
            if is_prime(p) and entry_point(p).p_star == p + 1]
