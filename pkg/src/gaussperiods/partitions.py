"""Partition counts with bounded multiplicity, with no part divisible by d, or
with bounded part size, plus the asymptotic comparators used in reports.

Counts are Python ints, so they are exact at any size.  The two real-valued
evaluators (:func:`hagis_main_term`, :func:`old_bound`) drop the o(1) / O(1)
corrections of the asymptotic bounds they come from.  They are heuristic
comparators, not certified inequalities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import OracleBudgetExceeded

__all__ = [
    "PartitionVector",
    "PartitionStream",
    "brute_count",
    "count_bounded",
    "count_fixed_parts",
    "count_nondiv",
    "enumerate_bounded",
    "glaisher_check",
    "hagis_main_term",
    "old_bound",
    "BRUTE_LIMIT",
]

BRUTE_LIMIT = 40


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicity vector of a partition of ``s``: ``u[j-1]`` copies of part j."""

    s: int
    u: tuple[int, ...]

    def __post_init__(self):
        if len(self.u) != self.s:
            raise ValueError(f"expected {self.s} multiplicities, got {len(self.u)}")
        if any(m < 0 for m in self.u):
            raise ValueError("multiplicities must be nonnegative")
        if sum(j * m for j, m in enumerate(self.u, 1)) != self.s:
            raise ValueError(f"{self.u} is not a partition of {self.s}")

    @classmethod
    def from_parts(cls, s: int, parts) -> PartitionVector:
        u = [0] * s
        for part in parts:
            u[part - 1] += 1
        return cls(s, tuple(u))

    def parts(self) -> list[int]:
        """Parts in nonincreasing order."""
        return [j for j in range(self.s, 0, -1) for _ in range(self.u[j - 1])]

    def max_multiplicity(self) -> int:
        return max(self.u, default=0)

    def key(self) -> bytes:
        """Canonical serialization, used for duplicate detection."""
        return ",".join(map(str, self.u)).encode()


# Tables are built to a size rounded up to a power of two, so repeated calls
# for nearby s share one DP.
def _table_size(s: int) -> int:
    return max(64, 1 << s.bit_length())


@lru_cache(maxsize=64)
def _bounded_table(v: int, size: int) -> tuple[int, ...]:
    # prod_j (1 - x^{j(v+1)}) / (1 - x^j), truncated at degree `size`
    c = [0] * (size + 1)
    c[0] = 1
    for j in range(1, size + 1):
        for i in range(j, size + 1):
            c[i] += c[i - j]
        step = j * (v + 1)
        for i in range(size, step - 1, -1):
            c[i] -= c[i - step]
    return tuple(c)


@lru_cache(maxsize=64)
def _nondiv_table(d: int, size: int) -> tuple[int, ...]:
    c = [0] * (size + 1)
    c[0] = 1
    for j in range(1, size + 1):
        if j % d == 0:
            continue
        for i in range(j, size + 1):
            c[i] += c[i - j]
    return tuple(c)


def count_bounded(s: int, v: int) -> int:
    """P(s, v): partitions of s in which every part appears at most v times."""
    if s < 0 or v < 1:
        raise ValueError("need s >= 0 and v >= 1")
    return _bounded_table(v, _table_size(s))[s]


def count_nondiv(s: int, d: int) -> int:
    """Q(s, d): partitions of s with no part divisible by d."""
    if s < 0 or d < 2:
        raise ValueError("need s >= 0 and d >= 2")
    return _nondiv_table(d, _table_size(s))[s]


def glaisher_check(s: int, v: int) -> bool:
    return count_bounded(s, v) == count_nondiv(s, v + 1)


def brute_count(s: int, v: int) -> int:
    """Count P(s, v) by walking every partition of s; no tables, no sharing.

    Partitions are generated as nonincreasing part sequences and the
    multiplicity bound is checked on each finished one.
    """
    if s > BRUTE_LIMIT:
        raise OracleBudgetExceeded(f"brute_count is limited to s <= {BRUTE_LIMIT}")
    if s < 0 or v < 1:
        raise ValueError("need s >= 0 and v >= 1")

    def walk(rest, largest, parts):
        if rest == 0:
            runs = {}
            for part in parts:
                runs[part] = runs.get(part, 0) + 1
            return int(all(m <= v for m in runs.values()))
        total = 0
        for part in range(min(rest, largest), 0, -1):
            parts.append(part)
            total += walk(rest - part, part, parts)
            parts.pop()
        return total

    return walk(s, s, [])


class PartitionStream:
    """Iterable over partitions of ``s`` with multiplicities at most ``v``.

    Vectors come in decreasing lexicographic order of ``(u_s, ..., u_1)``.
    Iteration stops after ``cap`` vectors; ``truncated`` is then True if at
    least one more vector existed.  The flag is meaningful once iteration ends.
    """

    def __init__(self, s: int, v: int, cap: int | None = None):
        if s < 0 or v < 1:
            raise ValueError("need s >= 0 and v >= 1")
        if cap is not None and cap < 1:
            raise ValueError("cap must be at least 1")
        self.s, self.v, self.cap = s, v, cap
        self.truncated = False
        self.emitted = 0

    def _generate(self) -> Iterator[tuple[int, ...]]:
        s, v = self.s, self.v
        u = [0] * s

        def rec(j, rest):
            # fill u[j-1], ..., u[0] with parts j, ..., 1 summing to `rest`
            if rest == 0:
                yield tuple(u)
                return
            if j == 0 or rest > v * j * (j + 1) // 2:
                return
            for m in range(min(v, rest // j), -1, -1):
                u[j - 1] = m
                yield from rec(j - 1, rest - m * j)
            u[j - 1] = 0

        yield from rec(s, s)

    def __iter__(self) -> Iterator[PartitionVector]:
        self.truncated = False
        self.emitted = 0
        for u in self._generate():
            if self.cap is not None and self.emitted >= self.cap:
                self.truncated = True
                return
            self.emitted += 1
            yield PartitionVector(self.s, u)


def enumerate_bounded(s: int, v: int, cap: int | None = None) -> PartitionStream:
    return PartitionStream(s, v, cap)


@lru_cache(maxsize=64)
def _fixed_parts_table(s: int, size: int) -> tuple[int, ...]:
    c = [0] * (size + 1)
    c[0] = 1
    for j in range(1, s + 1):
        for i in range(j, size + 1):
            c[i] += c[i - j]
    return tuple(c)


def count_fixed_parts(s: int, N: int) -> int:
    """Number of (u_1, ..., u_s) >= 0 with sum of j * u_j equal to N."""
    if s < 1 or N < 0:
        raise ValueError("need s >= 1 and N >= 0")
    return _fixed_parts_table(s, _table_size(N))[N]


def hagis_main_term(s: float, ell: float) -> float:
    """exp(pi * sqrt(2(ell - 1) / (3 ell)) * sqrt(s)), with o(1) dropped.

    ``ell = math.inf`` gives the limiting form exp(pi * sqrt(2/3) * sqrt(s)).
    """
    if s < 0 or ell < 2:
        raise ValueError("need s >= 0 and ell >= 2")
    ratio = 1.0 if math.isinf(ell) else (ell - 1) / ell
    return math.exp(math.pi * math.sqrt(2 * ratio / 3) * math.sqrt(s))


def old_bound(n: float) -> float:
    """2 ** sqrt(2n), the earlier exponential lower bound with O(1) dropped."""
    if n < 0:
        raise ValueError("need n >= 0")
    return 2.0 ** math.sqrt(2 * n)
