"""A fixed corpus of part sets used by ``check`` and the test-suite."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement

from .waves import PartSet

MAX_PART = 12
MAX_LEN = 5
SEED = 20240611

# hand-picked: repeats, common factors, primes, small natural sets
_CURATED = [
    (1,), (2,), (5,), (12,),
    (1, 1), (1, 2), (2, 2), (2, 3), (2, 4), (3, 5), (5, 7), (3, 11), (4, 6), (6, 9), (12, 12),
    (1, 2, 3), (2, 3, 5), (2, 4, 6), (3, 6, 9), (2, 2, 2), (1, 1, 1), (4, 4, 4), (3, 4, 5), (6, 10, 12),
    (1, 2, 3, 4), (2, 2, 3, 3), (2, 4, 8, 12), (3, 3, 3, 3), (5, 6, 7, 8), (6, 8, 9, 12),
    (1, 2, 3, 4, 5), (2, 2, 2, 2, 2), (1, 1, 2, 2, 3), (2, 4, 6, 8, 10), (3, 6, 9, 12, 12),
    (7, 8, 9, 11, 12), (5, 7, 8, 9, 11), (2, 3, 5, 7, 11), (4, 4, 6, 6, 12), (1, 12, 12, 12, 12),
]


def all_multisets(max_len: int = MAX_LEN, max_part: int = MAX_PART) -> list[tuple[int, ...]]:
    out = []
    for m in range(1, max_len + 1):
        out.extend(combinations_with_replacement(range(1, max_part + 1), m))
    return out


@lru_cache(maxsize=None)
def default_corpus(n_random: int = 80) -> tuple[PartSet, ...]:
    """Curated sets plus a seeded sample of multisets with m <= 5, d_i <= 12."""
    rng = random.Random(SEED)
    pool = [t for t in all_multisets() if t not in _CURATED]
    sample = rng.sample(pool, n_random)
    # shuffle within each set so the order-dependent recursion sees varied layouts
    shuffled = []
    for t in sample:
        t = list(t)
        rng.shuffle(t)
        shuffled.append(tuple(t))
    return tuple(PartSet(t) for t in _CURATED + shuffled)
