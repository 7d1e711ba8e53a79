"""Exact multiplicative order of the Gauss period and per-instance reports."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAUnitOfSubgroup, NotCaseOne, NotInSubfield, OracleBudgetExceeded
from .fftower import (
    CycloCtx,
    FieldElem,
    frobenius,
    gauss_period,
    make_base_field,
    make_cyclo_ctx,
)
from .numtheory import (
    DEFAULT_BUDGET,
    FactoredInteger,
    InstanceClass,
    classify_instance,
    factorize,
)
from .partitions import count_bounded, hagis_main_term, old_bound

__all__ = [
    "OrderReport",
    "brute_order",
    "exact_order",
    "gauss_context",
    "is_normal_generator",
    "rank_over_base",
    "subfield_membership",
    "verify_theorem_instance",
]


def subfield_membership(alpha: FieldElem, ctx: CycloCtx) -> bool:
    """True iff alpha is fixed by the q**n-power map, i.e. lies in F_{q^n}."""
    return frobenius(alpha, ctx.n) == alpha


def rank_over_base(rows: list[list[int]], ctx: CycloCtx) -> int:
    """Rank of a matrix of int-encoded F_q entries, by Gaussian elimination."""
    F = ctx.base
    m = [list(row) for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = F.inv(m[rank][col])
        m[rank] = [F.mul(inv, a) for a in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def is_normal_generator(alpha: FieldElem, ctx: CycloCtx) -> bool:
    """Check that alpha, alpha**q, ..., alpha**(q**(n-1)) are F_q-independent."""
    if not subfield_membership(alpha, ctx):
        raise NotInSubfield("element is not in F_{q^n}")
    conjugates = []
    a = alpha
    for _ in range(ctx.n):
        conjugates.append(list(a.coeffs))
        a = a ** ctx.q
    return rank_over_base(conjugates, ctx) == ctx.n


def exact_order(alpha: FieldElem, group_order: FactoredInteger) -> int:
    """Smallest L >= 1 with alpha**L = 1, given the factored order of a group
    containing alpha (here q**n - 1)."""
    if not alpha or alpha ** group_order.value != alpha.ctx.one:
        raise NotAUnitOfSubgroup(
            f"alpha**{group_order.value} != 1; alpha is not in the expected subgroup")
    one = alpha.ctx.one
    L = group_order.value
    for prime, e in group_order.factors:
        for _ in range(e):
            if alpha ** (L // prime) == one:
                L //= prime
            else:
                break
    return L


def brute_order(alpha: FieldElem, limit: int = 10**6) -> int:
    """Order by repeated multiplication until the product returns to 1."""
    if not alpha:
        raise NotAUnitOfSubgroup("zero has no multiplicative order")
    one = alpha.ctx.one
    acc = alpha
    L = 1
    while acc != one:
        if L >= limit:
            raise OracleBudgetExceeded(f"order exceeds {limit}")
        acc = acc * alpha
        L += 1
    return L


def gauss_context(p: int, k: int, n: int) -> tuple[InstanceClass, CycloCtx]:
    """Classify (q, n) and, in the primitive-root case, build its quotient field."""
    inst = classify_instance(p, k, n)
    if not inst.is_case_one:
        raise NotCaseOne(
            f"q = {inst.q} is not a primitive root modulo r = {inst.r} (case {inst.case})")
    return inst, make_cyclo_ctx(make_base_field(p, k), inst.r)


@dataclass(frozen=True)
class OrderReport:
    instance: InstanceClass
    L_n: int
    bound_P: int
    distinct_count: int | None
    distinct_truncated: bool | None
    old_bound: float
    corollary_main: float
    theorem_pass: bool
    normal_pass: bool

    def as_dict(self) -> dict:
        inst = self.instance
        return {
            "p": inst.p, "k": inst.k, "q": inst.q, "n": inst.n, "r": inst.r, "t": inst.t,
            "case": str(inst.case), "normal": inst.normal,
            "L_n": str(self.L_n),
            "bound_P": str(self.bound_P),
            "distinct_count": None if self.distinct_count is None else str(self.distinct_count),
            "distinct_truncated": self.distinct_truncated,
            "old_bound": self.old_bound,
            "corollary_main": self.corollary_main,
            "theorem_pass": self.theorem_pass,
            "normal_pass": self.normal_pass,
        }


def verify_theorem_instance(p: int, k: int, n: int, with_distinct: bool = False,
                            cap: int = 10**5, seed: int = 0,
                            budget: int = DEFAULT_BUDGET) -> OrderReport:
    inst, ctx = gauss_context(p, k, n)
    alpha = gauss_period(ctx)
    group = factorize(ctx.q ** n - 1, seed=seed, budget=budget)
    L = exact_order(alpha, group)
    bound = count_bounded(n - 1, p - 1)
    distinct = truncated = None
    if with_distinct:
        from .proofcheck import distinct_powers_count

        result = distinct_powers_count(p, k, n, cap)
        distinct, truncated = result.count, result.truncated
    return OrderReport(
        instance=inst,
        L_n=L,
        bound_P=bound,
        distinct_count=distinct,
        distinct_truncated=truncated,
        old_bound=old_bound(n),
        corollary_main=hagis_main_term(n, p),
        theorem_pass=L >= bound,
        normal_pass=is_normal_generator(alpha, ctx),
    )
