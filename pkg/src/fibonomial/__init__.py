"""Fibonomial coefficients: exact and modular triangles, entry-point digit
expansions, p-adic valuations by carry counting, and divisibility sweeps."""

from .conjecture import (
    ConjectureVerdict,
    SweepRecord,
    check_period_mod2,
    check_self_similarity_mod5,
    digit_product_divisible,
    fib_shift_mod5,
    find_counterexample,
    five_divides_fibonomial,
    lucas_binomial_residue,
    max_entry_point_primes,
    row_shift_mod5,
    verify_conjecture,
)
from .core import (
    TriangleRow,
    binomial,
    fib,
    fib_mod,
    fibonomial,
    fibonomial_row_mod,
    fibotorial,
)
from .radix import (
    CarryReport,
    DigitVector,
    add_with_carries,
    evaluate,
    expand_base_fp,
    expand_base_p,
)
from .render import RenderSpec, render
from .valuation import (
    PrimeProfile,
    Relation,
    Valuation,
    carry_valuation,
    entry_point,
    fibotorial_valuations,
    is_prime,
    nu5_matches_binomial,
    nu_p_fib,
    nu_p_fibonomial_oracle,
    nu_p_int,
)

__all__ = [
    "CarryReport",
    "ConjectureVerdict",
    "DigitVector",
    "PrimeProfile",
    "Relation",
    "RenderSpec",
    "SweepRecord",
    "TriangleRow",
    "Valuation",
    "add_with_carries",
    "binomial",
    "carry_valuation",
    "check_period_mod2",
    "check_self_similarity_mod5",
    "digit_product_divisible",
    "entry_point",
    "evaluate",
    "expand_base_fp",
    "expand_base_p",
    "fib",
    "fib_mod",
    "fib_shift_mod5",
    "fibonomial",
    "fibonomial_row_mod",
    "fibotorial",
    "fibotorial_valuations",
    "find_counterexample",
    "five_divides_fibonomial",
    "is_prime",
    "lucas_binomial_residue",
    "max_entry_point_primes",
    "nu5_matches_binomial",
    "nu_p_fib",
    "nu_p_fibonomial_oracle",
    "nu_p_int",
    "render",
    "row_shift_mod5",
    "verify_conjecture",
]
