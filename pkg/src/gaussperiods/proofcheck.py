"""Computational check of the partition argument behind L_n >= P(n-1, p-1).

Every partition U of n - 1 with multiplicities at most p - 1 is mapped to the
integer exponent ``Q_U = sum_j u_j * q**z_j`` where ``q**z_j = j (mod r)``.
The powers ``alpha**Q_U`` are then shown to be pairwise distinct by inserting
their canonical encodings into a dict.  Distinct powers of a single element
number at most its order, which is the whole lower bound.

Three interchangeable ways of evaluating ``alpha**Q_U`` are offered:

``"conjugates"`` (default)
    ``prod_j (alpha**(q**z_j))**u_j`` with the conjugates precomputed by
    iterating the q-power map; u_j < p keeps each factor cheap.
``"full"``
    square-and-multiply with the full integer ``Q_U``.
``"reduced"``
    square-and-multiply with ``Q_U mod (q**(2n) - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LengthMismatch
from .fftower import CycloCtx, FieldElem, canonical_encoding, gauss_period
from .gaussorder import gauss_context
from .numtheory import dlog_table
from .partitions import PartitionVector, count_bounded, enumerate_bounded

__all__ = [
    "DistinctResult",
    "ExponentRecord",
    "PowerEvaluator",
    "distinct_powers_count",
    "gauss_power_identity",
    "identity_rhs",
    "partition_exponent",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 10**5
METHODS = ("conjugates", "full", "reduced")


def partition_exponent(U: PartitionVector, ztable: list[int], q: int) -> int:
    """Q_U = sum over parts j of u_j * q**z_j, exactly."""
    n = len(ztable) // 2
    if U.s != n - 1:
        raise LengthMismatch(f"partition has {U.s} parts, expected n - 1 = {n - 1}")
    return sum(m * q ** ztable[j - 1] for j, m in enumerate(U.u, 1) if m)


@dataclass(frozen=True)
class ExponentRecord:
    partition: PartitionVector
    Q: int
    encoding: bytes


class PowerEvaluator:
    """Evaluates alpha**Q_U for one case-1 context."""

    def __init__(self, ctx: CycloCtx, method: str = "conjugates"):
        if method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        self.ctx = ctx
        self.method = method
        self.alpha = gauss_period(ctx)
        self.ztable = dlog_table(ctx.q, ctx.r)
        self._conj = None
        if method == "conjugates":
            conj = [self.alpha]
            for _ in range(ctx.r - 2):
                conj.append(conj[-1] ** ctx.q)
            self._conj = conj

    def exponent(self, U: PartitionVector) -> int:
        return partition_exponent(U, self.ztable, self.ctx.q)

    def power(self, U: PartitionVector) -> FieldElem:
        if self.method == "full":
            return self.alpha ** self.exponent(U)
        if self.method == "reduced":
            return self.alpha ** (self.exponent(U) % (self.ctx.order - 1))
        acc = self.ctx.one
        for j, m in enumerate(U.u, 1):
            if m:
                acc = acc * self._conj[self.ztable[j - 1]] ** m
        return acc

    def record(self, U: PartitionVector) -> ExponentRecord:
        return ExponentRecord(U, self.exponent(U), canonical_encoding(self.power(U)))


def identity_rhs(ctx: CycloCtx, U: PartitionVector) -> FieldElem:
    """beta**-(n-1) * prod_j (beta**(2j) + 1)**u_j, evaluated at beta = x."""
    acc = ctx.monomial(-(ctx.n - 1))
    one = ctx.one
    for j, m in enumerate(U.u, 1):
        if m:
            acc = acc * (ctx.monomial(2 * j) + one) ** m
    return acc


def gauss_power_identity(ctx: CycloCtx, U: PartitionVector,
                         evaluator: PowerEvaluator | None = None) -> bool:
    """alpha**Q_U equals the product form on the right, compared byte for byte."""
    if evaluator is None:
        evaluator = PowerEvaluator(ctx, "full")
    lhs = evaluator.power(U)
    return canonical_encoding(lhs) == canonical_encoding(identity_rhs(ctx, U))


@dataclass
class DistinctResult:
    count: int
    truncated: bool
    expected: int
    collisions: list[tuple[PartitionVector, PartitionVector]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.collisions:
            return False
        return self.truncated or self.count == self.expected


def distinct_powers_count(p: int, k: int, n: int, cap: int | None = DEFAULT_CAP,
                          method: str = "conjugates", check_identity: bool = False,
                          ) -> DistinctResult:
    """Number of distinct values alpha**Q_U over the first ``cap`` partitions.

    Untruncated, the count must equal P(n-1, p-1).  A repeated encoding is
    re-derived with the full exponent before it is reported as a collision.
    With ``check_identity`` every partition is also run through
    :func:`gauss_power_identity`; a failure raises AssertionError.
    """
    _, ctx = gauss_context(p, k, n)
    ev = PowerEvaluator(ctx, method)
    seen: dict[bytes, PartitionVector] = {}
    collisions = []
    stream = enumerate_bounded(n - 1, p - 1, cap)
    for U in stream:
        value = ev.power(U)
        if check_identity and canonical_encoding(value) != canonical_encoding(identity_rhs(ctx, U)):
            raise AssertionError(f"product identity fails for {U}")
        key = canonical_encoding(value)
        other = seen.get(key)
        if other is None:
            seen[key] = U
            continue
        a = ev.alpha ** ev.exponent(U)
        b = ev.alpha ** ev.exponent(other)
        if a != b:
            raise AssertionError(f"encoding clash between unequal elements for {other} and {U}")
        collisions.append((other, U))
    return DistinctResult(len(seen), stream.truncated, count_bounded(n - 1, p - 1), collisions)
