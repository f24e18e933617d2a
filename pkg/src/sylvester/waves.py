"""Sylvester waves and the restricted partition function as a quasi-polynomial.

``W(s, d)`` counts the solutions of ``d_1 x_1 + ... + d_m x_m = s`` in
non-negative integers.  It splits into waves ``W_j``, one for every ``j``
dividing some part; ``W_j`` is a polynomial of degree ``omega_j - 1`` in ``s``
multiplied by a ``j``-periodic factor built from the primitive ``j``-th roots
of unity.  Each wave is stored as ``j`` exact residue polynomials plus the
complex Fourier amplitudes needed for the trigonometric extension to real
arguments.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial, lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .errors import ConsistencyError, DomainError, ValidationError
from .exact import (
    CycloElement,
    RatPoly,
    cyclo_as_rational,
    cyclo_root_power,
    divisors,
    factorize,
    primitive_residues,
)
from .higher import (
    bernoulli_higher_polys,
    euler_zero_values,
    gen_euler_numbers,
    gen_euler_poly_at,
)

__all__ = [
    "PartSet",
    "WaveComponent",
    "QuasiPoly",
    "make_partset",
    "natural_set",
    "polynomial_wave",
    "wave",
    "second_wave_euler",
    "partition_quasipoly",
    "eval_exact",
    "eval_real",
    "eval_polynomial_part_real",
    "wave_recursion_residual",
    "two_prime_closed_form",
    "ramanujan_sum",
    "quasipoly_to_json",
    "quasipoly_from_json",
    "FORMS",
]

FORMS = ("bernoulli", "shifted", "euler")


@dataclass(frozen=True)
class PartSet:
    """An ordered multiset of positive integers with its derived quantities."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValidationError("a part set needs at least one element")
        for d in self.parts:
            if not isinstance(d, (int, np.integer)) or isinstance(d, bool) or d < 1:
                raise ValidationError(f"parts must be positive integers, got {d!r}")

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def s_m(self) -> int:
        return sum(self.parts)

    @property
    def pi_m(self) -> int:
        return prod(self.parts)

    @cached_property
    def period(self) -> int:
        return lcm(*self.parts)

    @cached_property
    def divisor_set(self) -> tuple[int, ...]:
        out: set[int] = set()
        for d in set(self.parts):
            out.update(divisors(d))
        return tuple(sorted(out))

    def weight(self, j: int) -> int:
        return sum(1 for d in self.parts if d % j == 0)

    @cached_property
    def weights(self) -> dict[int, int]:
        return {j: self.weight(j) for j in self.divisor_set}

    def sorted_for(self, j: int) -> tuple[int, ...]:
        """Stable reordering with the multiples of ``j`` first."""
        return self.split(j)[0] + self.split(j)[1]

    def split(self, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        head = tuple(d for d in self.parts if d % j == 0)
        tail = tuple(d for d in self.parts if d % j)
        return head, tail

    def scaled(self, k: int) -> "PartSet":
        return PartSet(tuple(k * d for d in self.parts))

    def drop_last(self) -> "PartSet":
        return PartSet(self.parts[:-1])

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def make_partset(parts: Iterable[int] | PartSet) -> PartSet:
    if isinstance(parts, PartSet):
        return parts
    try:
        items = list(parts)
    except TypeError:
        raise ValidationError(f"expected a list of positive integers, got {parts!r}") from None
    for d in items:
        if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
            raise ValidationError(f"parts must be positive integers, got {d!r}")
    return PartSet(tuple(int(d) for d in items))


def natural_set(m: int) -> PartSet:
    """The set {1, 2, ..., m}."""
    if m < 1:
        raise ValidationError(f"natural set needs m >= 1, got {m}")
    return PartSet(tuple(range(1, m + 1)))


@dataclass(frozen=True)
class WaveComponent:
    """One Sylvester wave ``W_j`` of a part set.

    ``residue_polys[r]`` is the polynomial in ``s`` that ``W_j`` equals on
    ``s = r (mod j)``.  For real arguments the wave is
    ``sum_n basis[n](x) * Re(sum_a amp[a][n] * exp(-2 pi i a x / j))`` with
    ``fourier`` holding the pairs ``(a, amp[a])``.
    """

    j: int
    omega: int
    residue_polys: tuple[RatPoly, ...]
    basis: tuple[RatPoly, ...] = field(default=(), repr=False, compare=False)
    fourier: tuple[tuple[int, tuple[complex, ...]], ...] = field(default=(), repr=False, compare=False)

    def __call__(self, s: int) -> Fraction:
        return Fraction(self.residue_polys[s % self.j](s))

    value = __call__

    def value_real(self, x: float) -> float:
        if not self.basis:
            raise DomainError("this wave carries no Fourier data")
        # reduce a*x modulo j before scaling so large arguments keep full precision
        rotations = [cmath.exp(-2j * cmath.pi * math.fmod(a * x, self.j) / self.j) for a, _ in self.fourier]
        total = 0.0
        for n, b in enumerate(self.basis):
            phase = 0.0
            for rot, (_, amps) in zip(rotations, self.fourier):
                phase += (amps[n] * rot).real
            if phase:
                total += b.eval_float(x) * phase
        return total


def _wave_prefactor(omega: int, head: Sequence[int]) -> Fraction:
    return Fraction(1, factorial(omega - 1) * prod(head))


@lru_cache(maxsize=1024)
def _periodic_pieces(ps: PartSet, j: int) -> tuple[tuple[int, CycloElement, tuple[CycloElement, ...]], ...]:
    """Per primitive root ``rho = zeta_j^a``: ``(a, 1/prod_tail(1 - rho^d), H[rho|tail])``."""
    head, tail = ps.split(j)
    omega = len(head)
    out = []
    for a in primitive_residues(j):
        rho = cyclo_root_power(j, a)
        denom = CycloElement.from_rational(j, 1)
        for d in tail:
            denom = denom * (1 - cyclo_root_power(j, a * d))
        pref = denom.inverse()
        H = gen_euler_numbers(omega - 1, rho, tail).values
        out.append((a, pref, H))
    return tuple(out)


def _galois_sum(j: int, terms: Iterable[tuple[int, CycloElement]], r: int) -> Fraction:
    """Rational value of ``sum_a zeta_j^(-a r) * c_a`` over primitive roots."""
    acc = CycloElement.from_rational(j, 0)
    for a, c in terms:
        acc = acc + cyclo_root_power(j, -a * r) * c
    try:
        return cyclo_as_rational(acc)
    except ConsistencyError as exc:
        raise ConsistencyError(f"wave j={j}, residue {r}: periodic coefficient is not rational") from exc


def _check_wave_args(ps: PartSet, j: int) -> int:
    if j not in ps.weights:
        raise DomainError(f"j={j} divides no element of {list(ps.parts)}")
    return ps.weights[j]


@lru_cache(maxsize=2048)
def _wave_bernoulli(ps: PartSet, j: int) -> WaveComponent:
    omega = _check_wave_args(ps, j)
    head, _ = ps.split(j)
    norm = _wave_prefactor(omega, head)
    basis = tuple(p.shift(ps.s_m) for p in bernoulli_higher_polys(omega - 1, head))
    pieces = _periodic_pieces(ps, j)
    # c_n(rho) multiplies B_n^(omega)(s + s_m | head)
    coeff = {
        n: [(a, pref * H[omega - 1 - n]) for a, pref, H in pieces] for n in range(omega)
    }
    residues = []
    for r in range(j):
        poly = RatPoly()
        for n in range(omega):
            kappa = _galois_sum(j, coeff[n], r)
            if kappa:
                poly = poly + basis[n] * (norm * comb(omega - 1, n) * kappa)
        residues.append(poly)
    fourier = []
    for idx, (a, _, _) in enumerate(pieces):
        amps = tuple(
            float(norm * comb(omega - 1, n)) * coeff[n][idx][1].to_complex() for n in range(omega)
        )
        fourier.append((a, amps))
    return WaveComponent(j, omega, tuple(residues), basis, tuple(fourier))


@lru_cache(maxsize=256)
def _wave_shifted(ps: PartSet, j: int) -> WaveComponent:
    """B_n(s + s_omega | head) against H_k(s_m - s_omega, rho | tail)."""
    omega = _check_wave_args(ps, j)
    head, tail = ps.split(j)
    norm = _wave_prefactor(omega, head)
    basis = tuple(p.shift(sum(head)) for p in bernoulli_higher_polys(omega - 1, head))
    shift = ps.s_m - sum(head)
    terms = {n: [] for n in range(omega)}
    for a, pref, _ in _periodic_pieces(ps, j):
        rho = cyclo_root_power(j, a)
        for n in range(omega):
            terms[n].append((a, pref * gen_euler_poly_at(omega - 1 - n, shift, rho, tail)))
    residues = []
    for r in range(j):
        poly = RatPoly()
        for n in range(omega):
            kappa = _galois_sum(j, terms[n], r)
            if kappa:
                poly = poly + basis[n] * (norm * comb(omega - 1, n) * kappa)
        residues.append(poly)
    return WaveComponent(j, omega, tuple(residues))


@lru_cache(maxsize=256)
def _wave_euler(ps: PartSet, j: int) -> WaveComponent:
    """Higher Bernoulli numbers of the head against H_k(s + s_m, rho | tail)."""
    omega = _check_wave_args(ps, j)
    head, tail = ps.split(j)
    norm = _wave_prefactor(omega, head)
    bnum = [p[0] for p in bernoulli_higher_polys(omega - 1, head)]
    sm = ps.s_m
    residues = []
    pieces = _periodic_pieces(ps, j)
    for r in range(j):
        poly = RatPoly()
        for n in range(omega):
            if not bnum[n]:
                continue
            k = omega - 1 - n
            # H_k(s + s_m, rho) = sum_i C(k,i) (s + s_m)^(k-i) H_i[rho]
            coeffs = []
            for e in range(k + 1):
                terms = []
                for a, pref, H in pieces:
                    c = CycloElement.from_rational(j, 0)
                    for i in range(k - e + 1):
                        c = c + H[i] * (comb(k, i) * comb(k - i, e) * Fraction(sm) ** (k - i - e))
                    terms.append((a, pref * c))
                coeffs.append(_galois_sum(j, terms, r))
            poly = poly + RatPoly(coeffs) * (norm * comb(omega - 1, n) * bnum[n])
        residues.append(poly)
    return WaveComponent(j, omega, tuple(residues))


def wave(ps: PartSet | Sequence[int], j: int, form: str = "bernoulli") -> WaveComponent:
    """The Sylvester wave ``W_j`` as exact residue polynomials.

    ``form`` selects the algebraic route: ``"bernoulli"`` (higher Bernoulli
    polynomials at ``s + s_m`` with generalized Euler numbers, the default,
    which also carries Fourier data), ``"shifted"`` (Bernoulli polynomials at
    ``s + s_omega`` with Euler polynomials at ``s_m - s_omega``) or ``"euler"``
    (higher Bernoulli numbers with Euler polynomials at ``s + s_m``).  All
    three agree exactly.
    """
    ps = make_partset(ps)
    if form == "bernoulli":
        return _wave_bernoulli(ps, j)
    if form == "shifted":
        return _wave_shifted(ps, j)
    if form == "euler":
        return _wave_euler(ps, j)
    raise ValidationError(f"unknown wave form {form!r}; expected one of {FORMS}")


def polynomial_wave(ps: PartSet | Sequence[int]) -> WaveComponent:
    return wave(ps, 1)


def second_wave_euler(ps: PartSet | Sequence[int]) -> WaveComponent:
    """``W_2`` through classical Euler numbers of higher order.

    Uses ``E_n^(k)(0 | odd parts) = (sum d_i E(0))^n`` with ``E_n(0)`` taken
    from Bernoulli numbers, so no cyclotomic arithmetic is involved.
    """
    ps = make_partset(ps)
    omega = _check_wave_args(ps, 2)
    head, tail = ps.split(2)
    E0 = euler_zero_values(omega)
    seq = [Fraction(1)] + [Fraction(0)] * (omega - 1)
    for d in tail:
        seq = [
            sum((comb(n, k) * seq[n - k] * d**k * E0[k] for k in range(n + 1)), Fraction(0))
            for n in range(omega)
        ]
    norm = Fraction(1, factorial(omega - 1) * 2 ** len(tail) * prod(head))
    basis = [p.shift(ps.s_m) for p in bernoulli_higher_polys(omega - 1, head)]
    even = RatPoly()
    for n in range(omega):
        even = even + basis[n] * (comb(omega - 1, n) * seq[omega - 1 - n])
    even = even * norm
    return WaveComponent(2, omega, (even, -even))


class QuasiPoly:
    """Period-``L`` quasi-polynomial with exact rational residue polynomials.

    Stored as one integer block per summand (a ``j x width`` matrix of
    numerators over a shared denominator, ``j`` dividing ``L``).  The residue
    polynomial for ``s mod L`` is the sum of row ``s mod j`` of every block.
    When ``L`` is small the blocks are folded into one dense ``L``-row table.
    """

    DENSE_LIMIT = 200_000

    def __init__(self, period: int, blocks: Sequence[np.ndarray], denominator: int):
        self.period = period
        self.denominator = denominator
        self._blocks = [(b.shape[0], b) for b in blocks]
        if period <= self.DENSE_LIMIT and len(self._blocks) > 1:
            width = max(b.shape[1] for _, b in self._blocks)
            dense = _zeros((period, width))
            for j, b in self._blocks:
                dense[:, : b.shape[1]] += np.tile(b, (period // j, 1))
            self._blocks = [(period, dense)]

    @classmethod
    def from_polys(cls, polys: Sequence[RatPoly]) -> "QuasiPoly":
        den = _common_denominator(polys)
        return cls(len(polys), [_int_block(polys, den)], den)

    def residue_poly(self, r: int) -> RatPoly:
        r %= self.period
        width = max(b.shape[1] for _, b in self._blocks)
        row = [0] * width
        for j, b in self._blocks:
            for k, c in enumerate(b[r % j]):
                row[k] += c
        return RatPoly(Fraction(int(c), self.denominator) for c in row)

    @property
    def residue_polys(self) -> tuple[RatPoly, ...]:
        if self.period > self.DENSE_LIMIT:
            raise DomainError(f"period {self.period} is too large to list; use residue_poly(r)")
        return tuple(self.residue_poly(r) for r in range(self.period))

    def numerator_at(self, s: int) -> int:
        total = 0
        for j, b in self._blocks:
            acc = 0
            for c in reversed(b[s % j]):
                acc = acc * s + c
            total += acc
        return int(total)

    def __call__(self, s: int) -> Fraction:
        return Fraction(self.numerator_at(s), self.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        return self.period == other.period and self.residue_polys == other.residue_polys


def _zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


def _common_denominator(polys: Iterable[RatPoly]) -> int:
    den = 1
    for p in polys:
        for c in p.coeffs:
            den = lcm(den, c.denominator)
    return den


def _int_block(polys: Sequence[RatPoly], den: int, width: int | None = None) -> np.ndarray:
    width = width or max((len(p) for p in polys), default=0) or 1
    block = _zeros((len(polys), width))
    for r, p in enumerate(polys):
        for k, c in enumerate(p.coeffs):
            block[r, k] = c.numerator * (den // c.denominator)
    return block


@lru_cache(maxsize=64)
def _quasipoly(ps: PartSet) -> QuasiPoly:
    waves = [wave(ps, j) for j in ps.divisor_set]
    den = _common_denominator(p for w in waves for p in w.residue_polys)
    blocks = [_int_block(w.residue_polys, den, ps.m) for w in waves]
    return QuasiPoly(ps.period, blocks, den)


def partition_quasipoly(ps: PartSet | Sequence[int]) -> QuasiPoly:
    """W(s, d) as the sum of all waves lifted to the common period lcm(d)."""
    return _quasipoly(make_partset(ps))


def eval_exact(ps: PartSet | Sequence[int], s: int) -> int:
    """Number of partitions of ``s`` with parts from ``ps``, from the closed form.

    Negative ``s`` returns the quasi-polynomial continuation.
    """
    q = partition_quasipoly(ps)
    num = q.numerator_at(s)
    value, rem = divmod(num, q.denominator)
    if rem:
        raise ConsistencyError(f"W({s}) = {Fraction(num, q.denominator)} is not an integer")
    if s >= 0 and value < 0:
        raise ConsistencyError(f"W({s}) = {value} is negative")
    return value


def eval_real(ps: PartSet | Sequence[int], x: float) -> float:
    """Trigonometric extension of W to real ``x`` (branch zeta_j -> e^(2 pi i/j))."""
    ps = make_partset(ps)
    return sum(wave(ps, j).value_real(x) for j in ps.divisor_set)


def eval_polynomial_part_real(ps: PartSet | Sequence[int], x: float) -> float:
    return wave(ps, 1).value_real(x)


def wave_recursion_residual(ps: PartSet | Sequence[int], j: int, s: int) -> Fraction:
    """``W_j(s, d^m) - W_j(s - d_m, d^m) - W_j(s, d^(m-1))``; identically zero."""
    ps = make_partset(ps)
    if ps.m < 2:
        raise DomainError("the wave recursion needs at least two parts")
    w = wave(ps, j)
    reduced = ps.drop_last()
    lower = wave(reduced, j)(s) if j in reduced.weights else Fraction(0)
    return w(s) - w(s - ps.parts[-1]) - lower


def _is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == {p: 1}


def two_prime_closed_form(p1: int, p2: int, s: int) -> int:
    """W(s, {p1, p2}) for distinct primes from the explicit two-prime formula."""
    if not (_is_prime(p1) and _is_prime(p2)) or p1 == p2:
        raise DomainError(f"need two distinct primes, got {p1}, {p2}")
    total = (Fraction(s) + Fraction(p1 + p2, 2)) / (p1 * p2)
    for p, q in ((p1, p2), (p2, p1)):
        acc = CycloElement.from_rational(p, 0)
        for a in range(1, p):
            acc = acc + cyclo_root_power(p, -a * s) / (1 - cyclo_root_power(p, a * q))
        total += cyclo_as_rational(acc) / p
    if total.denominator != 1:
        raise ConsistencyError(f"two-prime formula gave non-integer {total}")
    return total.numerator


def ramanujan_sum(j: int, s: int) -> Fraction:
    """sum over primitive j-th roots rho of rho^(-s), by direct summation."""
    acc = CycloElement.from_rational(j, 0)
    for a in primitive_residues(j):
        acc = acc + cyclo_root_power(j, -a * s)
    return cyclo_as_rational(acc)


# -- serialization ---------------------------------------------------------------

def quasipoly_to_json(ps: PartSet | Sequence[int]) -> dict:
    ps = make_partset(ps)
    waves = []
    for j in ps.divisor_set:
        w = wave(ps, j)
        waves.append(
            {
                "j": j,
                "omega": w.omega,
                "residues": [
                    {"r": r, "coeffs": p.to_strings()} for r, p in enumerate(w.residue_polys)
                ],
            }
        )
    return {"parts": list(ps.parts), "period": ps.period, "waves": waves}


def quasipoly_from_json(doc: dict | str) -> tuple[PartSet, list[WaveComponent]]:
    """Inverse of :func:`quasipoly_to_json` (waves come back without Fourier data)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        ps = make_partset(doc["parts"])
        waves = []
        for item in doc["waves"]:
            residues = sorted(item["residues"], key=lambda e: e["r"])
            polys = tuple(RatPoly(Fraction(c) for c in e["coeffs"]) for e in residues)
            if len(polys) != item["j"]:
                raise ValidationError(f"wave j={item['j']} has {len(polys)} residue classes")
            waves.append(WaveComponent(int(item["j"]), int(item["omega"]), polys))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed wave document: {exc}") from exc
    if int(doc.get("period", ps.period)) != ps.period:
        raise ValidationError("period does not match lcm of parts")
    return ps, waves


def dumps(ps: PartSet | Sequence[int]) -> str:
    return json.dumps(quasipoly_to_json(ps), indent=2)

