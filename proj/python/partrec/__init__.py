"""Exact recurrences for colored and regular partition functions.

Thin wrapper over the C++ core. Exact rationals cross the boundary as
"p/q" strings; partition counts and divisor sums arrive as Python ints.
"""

from ._core import (
    alpha,
    bernoulli,
    beta,
    bracket_coefficient,
    classify,
    partition_counts,
    recurrence_counts,
    sigma,
    tau,
    verify_theorem2,
    verify_theorem3,
    weighted_sum,
)

__all__ = [
    "alpha",
    "bernoulli",
    "beta",
    "bracket_coefficient",
    "classify",
    "partition_counts",
    "recurrence_counts",
    "sigma",
    "tau",
    "verify_theorem2",
    "verify_theorem3",
    "weighted_sum",
]
