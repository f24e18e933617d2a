"""Bernoulli, Frobenius and generalized Euler numbers/polynomials of higher order.

Everything here is exact.  Sequences are built by binomial convolution:
appending a part ``d`` to a parameter list convolves the current sequence
with ``d**k * X_k`` where ``X_k`` is the one-part sequence (Bernoulli
numbers for the polynomial part, Frobenius numbers ``H_k(rho**d)`` for the
periodic part).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import DomainError
from .exact import CycloElement, RatPoly, as_rational

__all__ = [
    "BernoulliTable",
    "FrobeniusTable",
    "HigherEulerNumbers",
    "bernoulli_numbers",
    "bernoulli_higher_poly",
    "bernoulli_higher_polys",
    "bernoulli_higher_number",
    "frobenius_numbers",
    "gen_euler_numbers",
    "gen_euler_poly_at",
    "euler_zero_values",
]


@dataclass(frozen=True)
class BernoulliTable:
    """B_0 .. B_N with the convention B_1 = -1/2."""

    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class FrobeniusTable:
    """H_0(rho) .. H_N(rho) from ``(1 - rho)/(e^t - rho) = sum H_n(rho) t^n/n!``."""

    rho: CycloElement
    values: tuple[CycloElement, ...]

    def __getitem__(self, n: int) -> CycloElement:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class HigherEulerNumbers:
    """Generalized Euler numbers H_n^(m)[rho | parts] for n = 0 .. n_max."""

    rho: CycloElement
    parts: tuple[int, ...]
    values: tuple[CycloElement, ...]

    def __getitem__(self, n: int) -> CycloElement:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _bernoulli(N: int) -> tuple[Fraction, ...]:
    B = [Fraction(1)]
    for n in range(1, N + 1):
        # sum_{k=0}^{n} C(n+1, k) B_k = 0
        acc = sum((comb(n + 1, k) * B[k] for k in range(n)), Fraction(0))
        B.append(-acc / (n + 1))
    return tuple(B)


def bernoulli_numbers(N: int) -> BernoulliTable:
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    return BernoulliTable(_bernoulli(N))


@lru_cache(maxsize=4096)
def _bernoulli_seq(n: int, parts: tuple[int, ...]) -> tuple[RatPoly, ...]:
    """B_k^(m)(x | parts) for k = 0..n, built one part at a time."""
    if not parts:
        return tuple(RatPoly.monomial(k) for k in range(n + 1))
    prev = _bernoulli_seq(n, parts[:-1])
    d = parts[-1]
    B = _bernoulli(n)
    scaled = [B[i] * d**i for i in range(n + 1)]
    out = []
    for k in range(n + 1):
        acc = RatPoly()
        for i in range(k + 1):
            if scaled[i]:
                acc = acc + prev[k - i] * (comb(k, i) * scaled[i])
        out.append(acc)
    return tuple(out)


def _check_parts(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(d) for d in parts)
    if any(d == 0 for d in parts):
        raise DomainError("parts must be nonzero integers")
    return parts


def bernoulli_higher_polys(n: int, parts: Sequence[int]) -> tuple[RatPoly, ...]:
    """All of B_0^(m)(x|parts) .. B_n^(m)(x|parts)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return _bernoulli_seq(n, _check_parts(parts))


def bernoulli_higher_poly(n: int, parts: Sequence[int]) -> RatPoly:
    """Noerlund's higher-order Bernoulli polynomial B_n^(m)(x | d_1..d_m).

    Generating function ``e^{xt} prod d_i t / (e^{d_i t} - 1)``.  Negative
    parts are accepted; they realize ``B(x | -d) = B(x + d | d)``.
    """
    return bernoulli_higher_polys(n, parts)[n]


def bernoulli_higher_number(n: int, parts: Sequence[int]) -> Fraction:
    """B_n^(m)[parts] = B_n^(m)(0 | parts)."""
    return bernoulli_higher_poly(n, parts)[0]


@lru_cache(maxsize=4096)
def _frobenius(N: int, rho: CycloElement) -> tuple[CycloElement, ...]:
    if N > 0:
        prev = list(_frobenius(N - 1, rho))
    else:
        return (CycloElement.from_rational(rho.conductor, 1),)
    inv = (rho - 1).inverse()
    acc = CycloElement.from_rational(rho.conductor, 0)
    for k in range(N):
        acc = acc + prev[k] * comb(N, k)
    prev.append(acc * inv)
    return tuple(prev)


def frobenius_numbers(N: int, rho: CycloElement) -> FrobeniusTable:
    """H_0(rho) .. H_N(rho) via (rho - 1) H_n = sum_{k<n} C(n,k) H_k."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    if rho == 1:
        raise DomainError("Frobenius numbers are undefined at rho = 1")
    return FrobeniusTable(rho, _frobenius(N, rho))


@lru_cache(maxsize=4096)
def _gen_euler(n_max: int, rho: CycloElement, parts: tuple[int, ...]) -> tuple[CycloElement, ...]:
    j = rho.conductor
    if not parts:
        zero = CycloElement.from_rational(j, 0)
        return (CycloElement.from_rational(j, 1),) + (zero,) * n_max
    prev = _gen_euler(n_max, rho, parts[:-1])
    d = parts[-1]
    sigma = rho**d
    if sigma == 1:
        raise DomainError(f"rho**{d} == 1; parts divisible by the period must be split off")
    H = _frobenius(n_max, sigma)
    scaled = [H[k] * d**k for k in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        acc = CycloElement.from_rational(j, 0)
        for k in range(n + 1):
            acc = acc + prev[n - k] * scaled[k] * comb(n, k)
        out.append(acc)
    return tuple(out)


def gen_euler_numbers(n_max: int, rho: CycloElement, parts: Sequence[int]) -> HigherEulerNumbers:
    """Carlitz numbers H_n^(m)[rho | parts], the umbral power (sum d_i H(rho^d_i))^n."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    parts = _check_parts(parts)
    return HigherEulerNumbers(rho, parts, _gen_euler(n_max, rho, parts))


def gen_euler_poly_at(n: int, shift, rho: CycloElement, parts: Sequence[int]) -> CycloElement:
    """H_n^(m)(shift, rho | parts) = sum_k C(n,k) shift^(n-k) H_k^(m)[rho | parts]."""
    shift = as_rational(shift)
    H = gen_euler_numbers(n, rho, parts).values
    acc = CycloElement.from_rational(rho.conductor, 0)
    for k in range(n + 1):
        acc = acc + H[k] * (comb(n, k) * shift ** (n - k))
    return acc


def euler_zero_values(N: int) -> tuple[Fraction, ...]:
    """Classical E_n(0) = 2 (1 - 2^(n+1)) B_{n+1} / (n+1), n = 0..N."""
    B = _bernoulli(N + 1)
    return tuple(Fraction(2 * (1 - 2 ** (n + 1))) * B[n + 1] / (n + 1) for n in range(N + 1))
