"""Counting homogeneous invariants of finite groups from rational Molien functions.

A Molien function given as ``N(t) / prod_l (1 - t^d_l)`` with
``N(t) = sum_k Q(k) t^k`` has coefficients

    P(s) = sum_k Q(k) W(s - k, d),

so every count reduces to closed-form restricted partition values.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from math import comb, factorial
from os import PathLike
from typing import Mapping, Sequence

from .errors import ConsistencyError, DomainError, ValidationError
from .waves import eval_exact, make_partset

__all__ = [
    "MolienSpec",
    "CATALOG_NAMES",
    "catalog",
    "parse_group",
    "invariant_count",
    "invariant_series",
    "load_spec",
    "spec_from_dict",
    "spec_to_dict",
]

CATALOG_NAMES = ("alternating", "cyclic_rotation", "dihedral", "sign_flip", "quaternion")


@dataclass(frozen=True)
class MolienSpec:
    name: str
    numerator: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    group_order: int | None = None

    def __post_init__(self):
        if not self.degrees:
            raise ValidationError("Molien spec needs at least one denominator degree")
        if any(not isinstance(d, int) or d < 1 for d in self.degrees):
            raise ValidationError(f"denominator degrees must be positive integers: {self.degrees}")
        if not self.numerator:
            raise ValidationError("Molien spec needs a non-empty numerator")
        if any(k < 0 for k, _ in self.numerator):
            raise ValidationError("numerator degrees must be >= 0")

    @classmethod
    def build(cls, name: str, numerator: Mapping[int, int], degrees: Sequence[int], group_order=None):
        num = {}
        for k, q in numerator.items():
            k = int(k)
            num[k] = num.get(k, 0) + int(q)
        return cls(name, tuple(sorted(num.items())), tuple(int(d) for d in degrees), group_order)

    @property
    def numerator_map(self) -> dict[int, int]:
        return dict(self.numerator)


def catalog(name: str, n: int) -> MolienSpec:
    """Molien data for the built-in families of small groups.

    ``alternating``      A_n in its natural n-dimensional representation (n >= 2)
    ``cyclic_rotation``  Z_n acting by rotations of the plane (n >= 1)
    ``dihedral``         the dihedral group of order 2n on the plane (n >= 1)
    ``sign_flip``        {I, -I} acting on R^n (n >= 1)
    ``quaternion``       the binary dihedral group Q_4n (n >= 2)
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValidationError(f"group parameter must be an integer, got {n!r}")
    if name == "alternating":
        if n < 2:
            raise ValidationError("alternating(n) needs n >= 2")
        return MolienSpec.build(
            f"alternating:{n}", {0: 1, n * (n - 1) // 2: 1}, range(1, n + 1), factorial(n) // 2
        )
    if name == "cyclic_rotation":
        if n < 1:
            raise ValidationError("cyclic_rotation(n) needs n >= 1")
        return MolienSpec.build(f"cyclic_rotation:{n}", {0: 1, n: 1}, (2, n), n)
    if name == "dihedral":
        if n < 1:
            raise ValidationError("dihedral(n) needs n >= 1")
        return MolienSpec.build(f"dihedral:{n}", {0: 1}, (2, n), 2 * n)
    if name == "sign_flip":
        if n < 1:
            raise ValidationError("sign_flip(n) needs n >= 1")
        return MolienSpec.build(
            f"sign_flip:{n}", {2 * k: comb(n, 2 * k) for k in range(n // 2 + 1)}, (2,) * n, 2
        )
    if name == "quaternion":
        if n < 2:
            raise ValidationError("quaternion(n) needs n >= 2")
        return MolienSpec.build(f"quaternion:{n}", {0: 1, 2 * n + 2: 1}, (4, 2 * n), 4 * n)
    raise ValidationError(f"unknown group family {name!r}; expected one of {CATALOG_NAMES}")


def parse_group(text: str) -> MolienSpec:
    """Parse ``"family:n"`` into a catalog spec."""
    name, sep, param = text.partition(":")
    if not sep:
        raise ValidationError(f"group must look like 'family:n', got {text!r}")
    try:
        n = int(param)
    except ValueError:
        raise ValidationError(f"group parameter must be an integer, got {param!r}") from None
    return catalog(name.strip(), n)


def invariant_count(spec: MolienSpec, s: int) -> int:
    """P(s, G), the number of independent homogeneous invariants of degree s."""
    if s < 0:
        raise DomainError(f"degree must be >= 0, got {s}")
    ps = make_partset(spec.degrees)
    total = sum(q * eval_exact(ps, s - k) for k, q in spec.numerator if k <= s)
    if total < 0:
        raise ConsistencyError(f"{spec.name}: P({s}) = {total} is negative")
    return total


def invariant_series(spec: MolienSpec, s_max: int) -> list[int]:
    return [invariant_count(spec, s) for s in range(s_max + 1)]


def spec_from_dict(doc: Mapping) -> MolienSpec:
    try:
        numerator = {int(k): int(v) for k, v in doc["numerator"].items()}
        degrees = [int(d) for d in doc["degrees"]]
    except (KeyError, AttributeError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed Molien spec: {exc}") from exc
    if numerator.get(0, 0) < 1:
        raise ValidationError("Molien spec needs Q(0) >= 1")
    if any(q < 0 for q in numerator.values()):
        warnings.warn(
            f"Molien spec {doc.get('name', '?')!r} has negative numerator coefficients",
            stacklevel=2,
        )
    order = doc.get("group_order")
    return MolienSpec.build(str(doc.get("name", "custom")), numerator, degrees, order)


def spec_to_dict(spec: MolienSpec) -> dict:
    out = {
        "name": spec.name,
        "numerator": {str(k): q for k, q in spec.numerator},
        "degrees": list(spec.degrees),
    }
    if spec.group_order is not None:
        out["group_order"] = spec.group_order
    return out


def load_spec(path: str | PathLike) -> MolienSpec:
    """Read a JSON spec ``{"name": ..., "numerator": {"0": 1, ...}, "degrees": [...]}``."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: expected a JSON object")
    return spec_from_dict(doc)
