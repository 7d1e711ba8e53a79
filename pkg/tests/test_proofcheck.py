import itertools

import pytest

from gaussperiods.errors import LengthMismatch, NotCaseOne
from gaussperiods.fftower import canonical_encoding
from gaussperiods.gaussorder import gauss_context
from gaussperiods.numtheory import dlog_table
from gaussperiods.partitions import PartitionVector, count_bounded, enumerate_bounded
from gaussperiods.proofcheck import (
    PowerEvaluator,
    distinct_powers_count,
    gauss_power_identity,
    identity_rhs,
    partition_exponent,
)


def test_partition_exponent_examples():
    z = dlog_table(2, 11)
    assert partition_exponent(PartitionVector.from_parts(4, [4]), z, 2) == 4
    assert partition_exponent(PartitionVector.from_parts(4, [3, 1]), z, 2) == 257
    assert partition_exponent(PartitionVector(0, ()), dlog_table(2, 3), 2) == 0
    with pytest.raises(LengthMismatch):
        partition_exponent(PartitionVector.from_parts(3, [3]), z, 2)


@pytest.mark.parametrize("p, n, parts", [(2, 5, [4]), (2, 1, []), (3, 2, [1]), (2, 5, [3, 1])])
def test_identity_examples(backend, p, n, parts):
    _, ctx = gauss_context(p, 1, n)
    assert gauss_power_identity(ctx, PartitionVector.from_parts(n - 1, parts))


def test_identity_n1_both_sides_one():
    _, ctx = gauss_context(2, 1, 1)
    U = PartitionVector(0, ())
    assert identity_rhs(ctx, U) == ctx.one
    assert PowerEvaluator(ctx, "full").power(U) == ctx.one


def test_identity_rhs_from_first_principles():
    # alpha**Q_U should also equal prod (x**j + x**-j)**u_j
    _, ctx = gauss_context(3, 1, 8)
    for U in enumerate_bounded(7, 2):
        direct = ctx.one
        for j, m in enumerate(U.u, 1):
            direct = direct * (ctx.monomial(j) + ctx.monomial(-j)) ** m
        assert direct == identity_rhs(ctx, U)


@pytest.mark.parametrize("p, n", [(2, 9), (3, 8), (5, 8), (7, 6), (2, 14)])
def test_methods_and_identity_agree(backend, p, n):
    _, ctx = gauss_context(p, 1, n)
    evs = [PowerEvaluator(ctx, m) for m in ("conjugates", "full", "reduced")]
    for U in enumerate_bounded(n - 1, p - 1, cap=40):
        encs = {canonical_encoding(ev.power(U)) for ev in evs}
        assert len(encs) == 1
        assert gauss_power_identity(ctx, U, evs[0])


@pytest.mark.parametrize("p, n", [(2, 14), (3, 15), (5, 11), (7, 8)])
def test_exponents_are_injective(p, n):
    _, ctx = gauss_context(p, 1, n)
    ev = PowerEvaluator(ctx)
    Qs = [ev.exponent(U) for U in enumerate_bounded(n - 1, p - 1)]
    assert len(set(Qs)) == len(Qs) == count_bounded(n - 1, p - 1)


@pytest.mark.parametrize("p, n, expected", [(2, 2, 1), (2, 5, 2), (2, 14, 18), (3, 9, 13)])
def test_distinct_count_examples(backend, p, n, expected):
    res = distinct_powers_count(p, 1, n)
    assert (res.count, res.expected, res.truncated) == (expected, expected, False)
    assert res.passed and not res.collisions


def test_distinct_count_truncated_prefix():
    res = distinct_powers_count(3, 1, 21, cap=50)
    assert res.truncated and res.count == 50 and res.passed
    assert res.expected == count_bounded(20, 2)


def test_distinct_count_rejects_other_cases():
    with pytest.raises(NotCaseOne):
        distinct_powers_count(2, 1, 3)


def test_distinct_count_catches_forged_collision(monkeypatch):
    # a broken evaluator maps everything to 1; the full-exponent recheck exposes it
    monkeypatch.setattr(PowerEvaluator, "power", lambda self, U: self.ctx.one)
    with pytest.raises(AssertionError, match="encoding clash"):
        distinct_powers_count(2, 1, 9)


def test_exponent_record():
    _, ctx = gauss_context(2, 1, 5)
    ev = PowerEvaluator(ctx)
    U = PartitionVector.from_parts(4, [3, 1])
    rec = ev.record(U)
    assert rec.Q == 257
    assert rec.encoding == canonical_encoding(ev.alpha ** 257)
    # powers for distinct U differ
    other = ev.record(PartitionVector.from_parts(4, [4]))
    assert other.encoding != rec.encoding


def test_all_powers_distinct_pairwise_small():
    _, ctx = gauss_context(3, 1, 9)
    ev = PowerEvaluator(ctx, "full")
    values = [ev.power(U) for U in enumerate_bounded(8, 2)]
    for a, b in itertools.combinations(values, 2):
        assert a != b
