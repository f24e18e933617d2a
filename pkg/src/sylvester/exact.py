"""Exact arithmetic: rationals, rational polynomials and cyclotomic fields.

Rationals are plain :class:`fractions.Fraction` objects (always reduced,
positive denominator).  :class:`RatPoly` is an immutable dense polynomial
over Q and :class:`CycloElement` an element of Q(zeta_j) stored in the power
basis 1, zeta, ..., zeta^(phi(j)-1) modulo the j-th cyclotomic polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import DomainError, NonRationalError

__all__ = [
    "Rational",
    "RatPoly",
    "CycloElement",
    "as_rational",
    "rational_str",
    "parse_rational",
    "factorize",
    "divisors",
    "euler_phi",
    "mobius",
    "cyclotomic_polynomial",
    "cyclo_root_power",
    "cyclo_inverse",
    "cyclo_as_rational",
    "primitive_residues",
]

Rational = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_str(q) -> str:
    """Canonical serialization: ``"p/q"``, or ``"p"`` when q == 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# -- elementary number theory -------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Moebius function: 0 unless n is squarefree, else (-1)**(#primes)."""
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def primitive_residues(j: int) -> list[int]:
    """Exponents n with 0 <= n < j and gcd(n, j) == 1 (n = 0 only for j = 1)."""
    if j == 1:
        return [0]
    return [n for n in range(1, j) if gcd(n, j) == 1]


# -- polynomials over Q -------------------------------------------------------

def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    """Immutable polynomial with exact rational coefficients.

    Coefficients are stored lowest degree first with trailing zeros
    removed, so the zero polynomial has an empty coefficient tuple and
    ``degree`` None.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([as_rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "RatPoly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("RatPoly", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(rational_str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{rational_str(abs(c))}*{mono}"
            else:
                body = rational_str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        if not isinstance(other, RatPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_rational(other)
            return RatPoly([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result, base = RatPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if self.degree is None or self.degree < dq:
            return RatPoly(), self
        quot = [_ZERO] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = c / lead
            quot[i - dq] = c
            for k, b in enumerate(other.coeffs):
                rem[i - dq + k] -= c * b
        return RatPoly(quot), RatPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, float otherwise."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self.coeffs else (x * 0)

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def shift(self, c) -> "RatPoly":
        """Return the polynomial ``x -> self(x + c)``."""
        c = as_rational(c)
        if c == 0 or len(self.coeffs) <= 1:
            return self
        out = list(self.coeffs)
        n = len(out)
        # repeated synthetic division (Taylor shift)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                out[k] += c * out[k + 1]
        return RatPoly(out)

    def derivative(self) -> "RatPoly":
        return RatPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale_arg(self, a) -> "RatPoly":
        """Return ``x -> self(a * x)``."""
        a = as_rational(a)
        out, p = [], _ONE
        for c in self.coeffs:
            out.append(c * p)
            p *= a
        return RatPoly(out)

    def to_strings(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]


# -- cyclotomic fields ---------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(j: int) -> RatPoly:
    """Phi_j as the exact quotient of prod_{d|j} (x^(j/d) - 1)^mu(d)."""
    if j < 1:
        raise DomainError(f"cyclotomic_polynomial needs j >= 1, got {j}")
    num, den = RatPoly([1]), RatPoly([1])
    for d in divisors(j):
        mu = mobius(d)
        if mu == 0:
            continue
        factor = RatPoly.monomial(j // d) - 1
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    q, r = divmod(num, den)
    assert r.is_zero()
    return q


@lru_cache(maxsize=None)
def _power_table(j: int) -> tuple[tuple[Fraction, ...], ...]:
    """x^k mod Phi_j for 0 <= k <= 2*phi(j) - 2, each padded to phi(j) coords."""
    phi = cyclotomic_polynomial(j)
    deg = phi.degree
    rows = []
    for k in range(max(2 * deg - 1, 1)):
        r = RatPoly.monomial(k) % phi
        rows.append(tuple(r[i] for i in range(deg)))
    return tuple(rows)


class CycloElement:
    """Element of the cyclotomic field Q(zeta_j).

    ``coords[k]`` is the coefficient of ``zeta_j**k`` for
    ``0 <= k < phi(j)``.  Elements of different conductors must be lifted
    to a common conductor with :meth:`lift` before they can be combined.
    """

    __slots__ = ("conductor", "coords", "_hash")

    def __init__(self, conductor: int, coords: Sequence):
        if conductor < 1:
            raise DomainError(f"conductor must be >= 1, got {conductor}")
        n = euler_phi(conductor)
        coords = [as_rational(c) for c in coords]
        if len(coords) > n:
            coords = list(_reduce_coeffs(conductor, coords))
        elif len(coords) < n:
            coords = coords + [_ZERO] * (n - len(coords))
        self.conductor = conductor
        self.coords: tuple[Fraction, ...] = tuple(coords)
        self._hash = None

    @classmethod
    def from_rational(cls, conductor: int, q) -> "CycloElement":
        return cls(conductor, [q])

    @classmethod
    def zeta(cls, conductor: int) -> "CycloElement":
        return cyclo_root_power(conductor, 1)

    @property
    def degree(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElement):
            return self.conductor == other.conductor and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coords[0])
            else:
                self._hash = hash((self.conductor, self.coords))
        return self._hash

    def __repr__(self) -> str:
        terms = ", ".join(rational_str(c) for c in self.coords)
        return f"CycloElement({self.conductor}, [{terms}])"

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.conductor != self.conductor:
                raise DomainError(
                    f"conductor mismatch {self.conductor} vs {other.conductor}; lift first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.from_rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.conductor, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.conductor, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.conductor, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.conductor, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coords, other.coords
        n = len(a)
        if n == 1:
            return CycloElement(self.conductor, [a[0] * b[0]])
        prod = [_ZERO] * (2 * n - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for k, y in enumerate(b):
                if y:
                    prod[i + k] += x * y
        return CycloElement(self.conductor, _reduce_coeffs(self.conductor, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        return cyclo_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self * (_ONE / as_rational(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclo_inverse(other)

    def __rtruediv__(self, other):
        return cyclo_inverse(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return cyclo_inverse(self) ** (-n)
        result = CycloElement.from_rational(self.conductor, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def lift(self, conductor: int) -> "CycloElement":
        """Re-express in Q(zeta_N) for a multiple N of the current conductor."""
        if conductor % self.conductor:
            raise DomainError(f"cannot lift conductor {self.conductor} to {conductor}")
        step = conductor // self.conductor
        coeffs = [_ZERO] * ((len(self.coords) - 1) * step + 1)
        for k, c in enumerate(self.coords):
            coeffs[k * step] = c
        return CycloElement(conductor, _reduce_coeffs(conductor, coeffs))

    def to_complex(self) -> complex:
        """Embed via zeta_j -> exp(2*pi*i/j)."""
        import cmath

        w = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * w + float(c)
        return acc


def _reduce_coeffs(j: int, coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Reduce a coefficient list (in powers of zeta_j) modulo Phi_j."""
    n = euler_phi(j)
    if len(coeffs) <= n:
        return list(coeffs) + [_ZERO] * (n - len(coeffs))
    table = _power_table(j)
    if len(coeffs) > len(table):
        # long vectors: reduce exponents mod j first (zeta^j = 1)
        folded = [_ZERO] * j
        for k, c in enumerate(coeffs):
            folded[k % j] += c
        coeffs = folded
        if len(coeffs) > len(table):
            poly = RatPoly(coeffs) % cyclotomic_polynomial(j)
            return [poly[i] for i in range(n)]
    out = list(coeffs[:n])
    for k in range(n, len(coeffs)):
        c = coeffs[k]
        if c:
            row = table[k]
            for i in range(n):
                if row[i]:
                    out[i] += c * row[i]
    return out


def cyclo_root_power(j: int, n: int) -> CycloElement:
    """zeta_j ** n reduced modulo Phi_j."""
    if j < 1:
        raise DomainError(f"conductor must be >= 1, got {j}")
    return _root_power(j, n % j)


@lru_cache(maxsize=None)
def _root_power(j: int, n: int) -> CycloElement:
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    if n < euler_phi(j):
        return CycloElement(j, coeffs)
    poly = RatPoly(coeffs) % cyclotomic_polynomial(j)
    return CycloElement(j, poly.coeffs)


def cyclo_inverse(a: CycloElement) -> CycloElement:
    """Multiplicative inverse by the extended Euclidean algorithm against Phi_j."""
    if a.is_zero():
        raise ZeroDivisionError("cannot invert zero in a cyclotomic field")
    if a.is_rational():
        return CycloElement.from_rational(a.conductor, _ONE / a.coords[0])
    phi = cyclotomic_polynomial(a.conductor)
    # invariant: s_i * a == r_i  (mod phi)
    r0, r1 = phi, RatPoly(a.coords)
    s0, s1 = RatPoly(), RatPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    # r0 is a nonzero constant since phi is irreducible
    assert r0.degree == 0
    inv = (s0 / r0.coeffs[0]) % phi
    return CycloElement(a.conductor, inv.coeffs)


def cyclo_as_rational(a: CycloElement) -> Fraction:
    """Project an element that must be rational; raise otherwise."""
    if not a.is_rational():
        raise NonRationalError(f"element {a!r} is not rational")
    return a.coords[0]
