"""Exact extended binomial coefficients.

The row for parameters (n, q) holds the coefficients of
``(1 + x + ... + x^q)**n`` as Python integers, so everything here is
exact at any size.  Row k counts the ways to write k as an ordered sum
of n integers from {0, ..., q}; dividing by (q+1)**n turns a row into
the point probabilities of a sum of n independent uniforms on
{0, ..., q}.

Multiplying a row by the base polynomial is a running window sum, so a
full row build costs O(n^2 * q) integer additions.  All functions are
pure; ``compute_row`` memoizes through ``functools.lru_cache``, which
is thread-safe and returns immutable rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class BigRow:
    """One exact coefficient row of ``(1 + x + ... + x^q)**n``.

    coeffs[k] is the x**k coefficient; the row has length n*q + 1, sums
    to (q+1)**n and is symmetric about its midpoint.
    """

    n: int
    q: int
    coeffs: tuple[int, ...]

    def coefficient(self, k: int) -> int:
        """Coefficient for any integer k; zero outside 0..n*q."""
        if 0 <= k <= self.n * self.q:
            return self.coeffs[k]
        return 0

    @property
    def support(self) -> range:
        return range(self.n * self.q + 1)


def _check_nq(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")


def _window_step(row: list[int], q: int) -> list[int]:
    # multiply by 1 + x + ... + x^q: out[k] = sum(row[k-q : k+1])
    out = []
    window = 0
    m = len(row)
    for k in range(m + q):
        if k < m:
            window += row[k]
        if k - q - 1 >= 0:
            window -= row[k - q - 1]
        out.append(window)
    return out


@lru_cache(maxsize=64)
def compute_row(n: int, q: int) -> BigRow:
    """Exact coefficient row of ``(1 + x + ... + x^q)**n``."""
    _check_nq(n, q)
    row = [1] * (q + 1)
    for _ in range(n - 1):
        row = _window_step(row, q)
    return BigRow(n=n, q=q, coeffs=tuple(row))


def iter_rows(q: int, n_max: int) -> Iterator[BigRow]:
    """Yield the rows for n = 1..n_max, each built from the previous one.

    One full sweep costs the same as a single ``compute_row(n_max, q)``
    call, so prefer this when every row is needed.
    """
    _check_nq(n_max, q)
    row = [1] * (q + 1)
    yield BigRow(n=1, q=q, coeffs=tuple(row))
    for n in range(2, n_max + 1):
        row = _window_step(row, q)
        yield BigRow(n=n, q=q, coeffs=tuple(row))


def coefficient(n: int, k: int, q: int) -> int:
    """Number of ways to write k as an ordered sum of n integers in
    {0, ..., q}; zero for k outside 0..n*q.

    Reduces to the ordinary binomial coefficient C(n, k) at q = 1.
    """
    _check_nq(n, q)
    return compute_row(n, q).coefficient(k)


def composition_count(k: int, n: int, q: int) -> int:
    """Number of compositions of k into n parts from {1, ..., q}."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_nq(n, q)
    if q == 1:
        # all parts equal 1, so only k = n is reachable
        return 1 if k == n else 0
    # shift each part down by one: n parts in {0, ..., q-1} summing to k - n
    return coefficient(n, k - n, q - 1)


def scaled_probability(n: int, k: int, q: int) -> Fraction:
    """P(S_n = k) for S_n a sum of n independent uniforms on {0, ..., q},
    as an exact rational."""
    _check_nq(n, q)
    return Fraction(coefficient(n, k, q), (q + 1) ** n)
