"""Brute-force ground truth by dynamic programming over the generating function."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DomainError, ValidationError
from .waves import PartSet, make_partset

__all__ = ["CountTable", "count_partitions", "rational_series"]


@dataclass(frozen=True)
class CountTable:
    parts: PartSet
    counts: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.counts[s]

    def __len__(self) -> int:
        return len(self.counts)


def _counts(parts: Sequence[int], s_max: int) -> list[int]:
    table = [0] * (s_max + 1)
    table[0] = 1
    # W(s, d^k) = W(s - d_k, d^k) + W(s, d^(k-1)), updated in place
    for d in parts:
        for s in range(d, s_max + 1):
            table[s] += table[s - d]
    return table


def count_partitions(ps: PartSet | Sequence[int], s_max: int) -> CountTable:
    """W(s, parts) for s = 0 .. s_max."""
    ps = make_partset(ps)
    if s_max < 0:
        raise DomainError(f"s_max must be >= 0, got {s_max}")
    return CountTable(ps, tuple(_counts(ps.parts, s_max)))


def rational_series(numerator: Mapping[int, int], degrees: Sequence[int], s_max: int) -> list[int]:
    """Taylor coefficients of N(t) / prod(1 - t^d) up to t^s_max."""
    if s_max < 0:
        raise DomainError(f"s_max must be >= 0, got {s_max}")
    if not degrees:
        raise ValidationError("denominator degrees must be non-empty")
    W = count_partitions(degrees, s_max).counts
    out = [0] * (s_max + 1)
    for k, q in numerator.items():
        k = int(k)
        if k < 0:
            raise ValidationError(f"numerator degree must be >= 0, got {k}")
        for s in range(k, s_max + 1):
            out[s] += q * W[s - k]
    return out
