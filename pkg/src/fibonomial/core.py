"""Exact and modular Fibonacci, fibotorial, and fibonomial arithmetic.

Everything here is plain integer arithmetic on Python ints. Indexing is
1-based (F_1 = F_2 = 1); index 0 is a domain error and never consumed
internally. These functions are the ground truth that the carry-counting
fast paths elsewhere in the package are validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class TriangleRow:
    """One row of a coefficient triangle, optionally reduced mod `modulus`."""

    n: int
    entries: tuple[int, ...]
    modulus: int | None = None


def fib(n: int) -> int:
    """Return the n-th Fibonacci number (1-indexed, F_1 = F_2 = 1)."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    return _fib_pair(n)[0]


def _fib_pair(n: int) -> tuple[int, int]:
    # Fast doubling on (F_n, F_{n+1}); the recursion anchor F_0 = 0 is an
    # internal identity only and never escapes this function.
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib_mod(n: int, m: int) -> int:
    """Return F_n mod m without materializing the full integer."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return _fib_pair_mod(n, m)[0]


def _fib_pair_mod(n: int, m: int) -> tuple[int, int]:
    if n == 0:
        return 0, 1 % m
    a, b = _fib_pair_mod(n >> 1, m)
    c = a * (2 * b - a) % m
    d = (a * a + b * b) % m
    if n & 1:
        return d, (c + d) % m
    return c, d


def fibotorial(n: int) -> int:
    """Product F_n * F_{n-1} * ... * F_1; the empty product for n = 0."""
    if n < 0:
        raise ValueError(f"fibotorial argument must be >= 0, got {n}")
    out = 1
    a, b = 1, 1
    for _ in range(n):
        out *= a
        a, b = b, a + b
    return out


def fibonomial(n: int, k: int) -> int:
    """Fibonomial coefficient: fibotorial(n) / (fibotorial(k) * fibotorial(n-k)).

    Zero when k > n. The division is always exact; a nonzero remainder
    signals an arithmetic bug, not bad input.
    """
    if n < 0 or k < 0:
        raise ValueError(f"fibonomial arguments must be >= 0, got ({n}, {k})")
    if k > n:
        return 0
    q, r = divmod(fibotorial(n), fibotorial(k) * fibotorial(n - k))
    if r:
        raise ArithmeticError(f"fibonomial({n}, {k}) left remainder {r}")
    return q


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be >= 0, got ({n}, {k})")
    return math.comb(n, k)


def iter_fibonomial_rows_mod(count: int, m: int) -> Iterator[TriangleRow]:
    """Yield triangle rows 0 .. count-1 reduced mod m.

    Entirely in residues: row n is built from row n-1 by the weighted
    recurrence with Fibonacci weights F_{k+1} and F_{n-k-1} taken mod m.
    A weight whose index would be 0 multiplies nothing and is dropped;
    the row edges are pinned to 1.
    """
    if count < 0:
        raise ValueError(f"row count must be >= 0, got {count}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    one = 1 % m
    fibm = [0, one, one]  # fibm[i] = F_i mod m; slot 0 is never read
    row: list[int] = []
    for n in range(count):
        while len(fibm) <= n:
            fibm.append((fibm[-1] + fibm[-2]) % m)
        if n == 0:
            row = [one]
        else:
            new = [one]
            for k in range(1, n):
                t = fibm[k + 1] * row[k]
                if n - k - 1 >= 1:
                    t += fibm[n - k - 1] * row[k - 1]
                new.append(t % m)
            new.append(one)
            row = new
        yield TriangleRow(n, tuple(row), m)


def iter_fibonomial_rows_exact(count: int) -> Iterator[TriangleRow]:
    """Yield exact triangle rows 0 .. count-1 via the weighted recurrence."""
    if count < 0:
        raise ValueError(f"row count must be >= 0, got {count}")
    fibs = [0, 1, 1]
    row: list[int] = []
    for n in range(count):
        while len(fibs) <= n:
            fibs.append(fibs[-1] + fibs[-2])
        if n == 0:
            row = [1]
        else:
            new = [1]
            for k in range(1, n):
                t = fibs[k + 1] * row[k]
                if n - k - 1 >= 1:
                    t += fibs[n - k - 1] * row[k - 1]
                new.append(t)
            new.append(1)
            row = new
        yield TriangleRow(n, tuple(row), None)


def fibonomial_row_mod(n: int, m: int) -> TriangleRow:
    """Row n of the fibonomial triangle mod m, never touching big integers."""
    if n < 0:
        raise ValueError(f"row index must be >= 0, got {n}")
    row = None
    for row in iter_fibonomial_rows_mod(n + 1, m):
        pass
    assert row is not None
    return row


def iter_binomial_rows_mod(count: int, m: int) -> Iterator[TriangleRow]:
    """Yield Pascal triangle rows 0 .. count-1 reduced mod m."""
    if count < 0:
        raise ValueError(f"row count must be >= 0, got {count}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    one = 1 % m
    row: list[int] = []
    for n in range(count):
        if n == 0:
            row = [one]
        else:
            row = [one] + [(row[k] + row[k - 1]) % m for k in range(1, n)] + [one]
        yield TriangleRow(n, tuple(row), m)


def iter_binomial_rows_exact(count: int) -> Iterator[TriangleRow]:
    """Yield exact Pascal triangle rows 0 .. count-1."""
    if count < 0:
        raise ValueError(f"row count must be >= 0, got {count}")
    row: list[int] = []
    for n in range(count):
        if n == 0:
            row = [1]
        else:
            row = [1] + [row[k] + row[k - 1] for k in range(1, n)] + [1]
        yield TriangleRow(n, tuple(row), None)
