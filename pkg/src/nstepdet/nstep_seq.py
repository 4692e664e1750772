"""n-step Fibonacci numbers at any integer index.

Each term is the sum of its n predecessors. Seeds for indices 1..n come
from one of three conventions:

* ``classic``      -- 1, 1, 2, 4, ..., 2^(n-2); equivalently term 1 is 1 and
                      the n-1 terms just below index 1 are all zero.
* ``paper``        -- 1, 2, 4, ..., 2^(n-1); the classic sequence shifted
                      one index down.
* ``custom(...)``  -- caller-supplied seed values.

Inverting the recurrence extends every sequence to zero and negative
indices (term k = term k+n minus the n-1 terms between), which the
determinant identities need for small row offsets.

Two engines produce terms: a sliding-window iterator (exact, O(k)) and a
companion-matrix power engine (exact, O(log k) matrix products). They must
agree everywhere they overlap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .exact_linalg import IntMatrix, RangeError

__all__ = [
    "DomainError",
    "Convention",
    "CLASSIC",
    "PAPER_POWERS",
    "custom",
    "seed_block",
    "term",
    "terms_range",
    "companion_matrix",
    "term_fast",
]


class DomainError(ValueError):
    """Index outside the domain an engine supports."""


@dataclass(frozen=True)
class Convention:
    """Initial-value convention: which values occupy indices 1..n."""

    name: str
    seeds: tuple[int, ...] | None = None


CLASSIC = Convention("classic")
PAPER_POWERS = Convention("paper")


def custom(seeds: Iterable[int]) -> Convention:
    """Convention with caller-supplied values for indices 1..n."""
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise ValueError("custom convention needs at least one seed")
    return Convention("custom", seeds)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"step count n must be >= 2, got {n}")


def seed_block(n: int, conv: Convention) -> tuple[int, ...]:
    """The convention's values at indices 1..n."""
    _check_n(n)
    if conv.name == "classic":
        return (1,) + tuple(2 ** k for k in range(n - 1))
    if conv.name == "paper":
        return tuple(2 ** k for k in range(n))
    if conv.name == "custom":
        assert conv.seeds is not None
        if len(conv.seeds) != n:
            raise ValueError(
                f"custom convention needs exactly {n} seeds, got {len(conv.seeds)}")
        return conv.seeds
    raise ValueError(f"unknown convention {conv.name!r}")


def term(n: int, conv: Convention, k: int) -> int:
    """Term ``k`` (any integer) by walking the recurrence from the seeds."""
    seeds = seed_block(n, conv)
    if 1 <= k <= n:
        return seeds[k - 1]
    if k > n:
        # Running total of the current window avoids n additions per step.
        window = deque(seeds, maxlen=n)
        total = sum(window)
        for _ in range(k - n - 1):
            val = total
            total += val - window[0]
            window.append(val)
        return total
    # k <= 0: invert the recurrence one step at a time.
    window = list(seeds)
    val = 0
    for _ in range(1 - k):
        val = window[-1] - sum(window[:-1])
        window = [val] + window[:-1]
    return val


def terms_range(n: int, conv: Convention, lo: int, hi: int) -> list[int]:
    """Terms ``lo..hi`` inclusive, in one backward and one forward sweep."""
    if lo > hi:
        raise RangeError(f"empty index range {lo}..{hi}")
    seeds = seed_block(n, conv)
    values: list[int] = []

    if lo <= 0:
        backward: list[int] = []
        window = list(seeds)
        for k in range(0, lo - 1, -1):
            val = window[-1] - sum(window[:-1])
            window = [val] + window[:-1]
            if k <= hi:
                backward.append(val)
        backward.reverse()
        values.extend(backward)

    if hi >= 1:
        window = deque(maxlen=n)
        total = 0
        for k in range(1, hi + 1):
            val = seeds[k - 1] if k <= n else total
            if len(window) == n:
                total += val - window[0]
            else:
                total += val
            window.append(val)
            if k >= lo:
                values.append(val)

    return values


def companion_matrix(n: int) -> IntMatrix:
    """Advance matrix of the recurrence: first row ones, subdiagonal ones.

    Applied to the state (term k, term k-1, ..., term k-n+1) it yields the
    state shifted up by one index.
    """
    _check_n(n)
    rows = [[1] * n]
    for i in range(1, n):
        rows.append([1 if j == i - 1 else 0 for j in range(n)])
    return IntMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def _companion_pow2(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Companion matrix raised to 2^i, as immutable row tuples (memoized)."""
    if i == 0:
        mat = companion_matrix(n)
        return tuple(mat.row(j) for j in range(1, n + 1))
    half = _companion_pow2(n, i - 1)
    return _mat_mul(half, half)


def _mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def _mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def term_fast(n: int, conv: Convention, k: int) -> int:
    """Term ``k >= 1`` via binary exponentiation of the companion matrix.

    Exactly equals ``term(n, conv, k)``; cost grows with log k rather
    than k (big-integer arithmetic aside).
    """
    seeds = seed_block(n, conv)
    if k < 1:
        raise DomainError(f"term_fast needs k >= 1, got {k}")
    if k <= n:
        return seeds[k - 1]
    state = tuple(reversed(seeds))
    e = k - n
    i = 0
    while e:
        if e & 1:
            state = _mat_vec(_companion_pow2(n, i), state)
        e >>= 1
        i += 1
    return state[0]
