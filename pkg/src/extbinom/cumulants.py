"""Cumulants of the uniform distribution on {0, ..., q}, exact.

The production path is the closed form: gamma_1 = q/2, every odd
cumulant above the first vanishes, and

    gamma_{2l} = B_{2l} / (2l) * ((q+1)^{2l} - 1)

with B the Bernoulli numbers.  ``cumulants_from_moments`` derives the
same values independently from raw moments and the standard
moment-to-cumulant recursion, and exists purely to cross-validate the
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from extbinom.special import bernoulli


@dataclass(frozen=True)
class CumulantVector:
    """Cumulants gamma_1..gamma_K of a distribution; gammas[i] is the
    cumulant of order i + 1."""

    q: int
    gammas: tuple[Fraction, ...]

    def gamma(self, k: int) -> Fraction:
        """Cumulant of order k (1-based)."""
        if not 1 <= k <= len(self.gammas):
            raise ValueError(
                f"cumulant order {k} outside stored range 1..{len(self.gammas)}"
            )
        return self.gammas[k - 1]

    def __len__(self) -> int:
        return len(self.gammas)


def _check_kq(k: int, q: int) -> None:
    if k < 1:
        raise ValueError(f"cumulant order must be >= 1, got {k}")
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")


def cumulant(k: int, q: int) -> Fraction:
    """Cumulant gamma_k of the uniform distribution on {0, ..., q}."""
    _check_kq(k, q)
    if k == 1:
        return Fraction(q, 2)
    if k % 2 == 1:
        return Fraction(0)
    # k = 2l: gamma_k = B_k / k * ((q+1)^k - 1)
    return bernoulli(k) / k * ((q + 1) ** k - 1)


def cumulants_up_to(order: int, q: int) -> CumulantVector:
    """Cumulants gamma_1..gamma_order of the uniform on {0, ..., q}."""
    _check_kq(order, q)
    return CumulantVector(q=q, gammas=tuple(cumulant(k, q) for k in range(1, order + 1)))


def cumulants_from_moments(order: int, q: int) -> CumulantVector:
    """Same cumulants derived from raw moments, as an independent check.

    Raw moments m_j = (1/(q+1)) * sum_{v=0..q} v**j are exact rationals;
    the conversion is the usual recursion
    gamma_k = m_k - sum_{j=1..k-1} C(k-1, j-1) * gamma_j * m_{k-j}.
    """
    _check_kq(order, q)
    moments = [
        Fraction(sum(v**j for v in range(q + 1)), q + 1) for j in range(1, order + 1)
    ]
    gammas: list[Fraction] = []
    for k in range(1, order + 1):
        g = moments[k - 1]
        for j in range(1, k):
            g -= comb(k - 1, j - 1) * gammas[j - 1] * moments[k - j - 1]
        gammas.append(g)
    return CumulantVector(q=q, gammas=tuple(gammas))
