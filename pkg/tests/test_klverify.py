import numpy as np
import pytest

from apcqc.apc import apc_distance
from apcqc.codec import CodeSpec, build_betas, lemma1_distance
from apcqc.cyclotomic import root_power
from apcqc.ffvec import DimensionError, FpVector, dot
from apcqc.klverify import (
    PhaseState,
    apply_error,
    build_state,
    inner,
    kl_check,
    kl_distance,
    kl_distance_witness,
    overlap,
)
from apcqc.logicfn import FpFunction, add_linear, parse_poly

from conftest import PENTAGON, naive_kl_distance, naive_overlap, points, random_function

Z5 = FpVector.zero(2, 5)


@pytest.fixture
def pentagon():
    return parse_poly(PENTAGON, 2, 5)


def test_build_state_examples():
    z = FpFunction.constant(2, 2)
    assert build_state(z, FpVector.zero(2, 2)).exponents.tolist() == [0, 0, 0, 0]
    assert build_state(z, FpVector(2, (1, 0))).exponents.tolist() == [0, 0, 1, 1]
    f = parse_poly("x1*x2+2*x2", 3, 2)
    beta = FpVector(3, (2, 1))
    assert build_state(f, beta) == build_state(add_linear(f, beta), FpVector.zero(3, 2))


def test_apply_error(rng):
    p, n = 3, 3
    f = random_function(rng, p, n)
    s = build_state(f, FpVector.zero(p, n))
    zero = FpVector.zero(p, n)
    assert apply_error(s, zero, zero) == s
    a = FpVector(p, (1, 0, 2))
    b = FpVector(p, (2, 2, 1))
    moved = apply_error(s, a, b)
    for x in points(p, n):
        xv = FpVector(p, x)
        y = xv - a
        assert moved.exponents[int("".join(map(str, x)), 3)] == (f(y) + dot(b, y)) % p
    assert apply_error(apply_error(s, a, zero), -a, zero) == s


def test_error_group_closure(rng):
    p, n = 5, 2
    s = build_state(random_function(rng, p, n), FpVector.zero(p, n))
    for _ in range(10):
        a, b, a2, b2 = (FpVector(p, tuple(rng.integers(0, p, n))) for _ in range(4))
        lhs = apply_error(apply_error(s, a2, b2), a, b)
        rhs = apply_error(s, a + a2, b + b2)
        assert lhs.equal_up_to_phase(rhs)
        # Z(b) X(a2) = zeta^(b.a2) X(a2) Z(b)
        offset = (lhs.exponents - rhs.exponents) % p
        assert int(offset[0]) == dot(b, a2)


def test_inner_examples(rng):
    for p, n in [(2, 3), (3, 2), (5, 2)]:
        f = random_function(rng, p, n)
        s = build_state(f, FpVector.zero(p, n))
        assert inner(s, s) == p**n
        b1, b2 = FpVector.unit(p, n, 1), FpVector.unit(p, n, n) * 2
        s1, s2 = build_state(f, b1), build_state(f, b2)
        assert inner(s1, s2).is_zero()
        assert inner(s1, s2) == inner(s2, s1).conj()
        g = build_state(random_function(rng, p, n), b1)
        assert inner(s, g) == inner(g, s).conj()


def test_overlap_matches_naive(rng):
    for p, n in [(2, 3), (3, 2)]:
        s1 = PhaseState(p, n, rng.integers(0, p, p**n))
        s2 = PhaseState(p, n, rng.integers(0, p, p**n))
        e1 = {x: int(s1.exponents[i]) for i, x in enumerate(points(p, n))}
        e2 = {x: int(s2.exponents[i]) for i, x in enumerate(points(p, n))}
        for _ in range(5):
            a = tuple(int(v) for v in rng.integers(0, p, n))
            b = tuple(int(v) for v in rng.integers(0, p, n))
            got = overlap(s1, s2, FpVector(p, a), FpVector(p, b))
            assert got == naive_overlap(e1, e2, a, b, p, n)
            assert got == inner(s1, apply_error(s2, FpVector(p, a), FpVector(p, b)))


def test_dimension_errors():
    s = PhaseState(2, 2, [0, 0, 0, 0])
    with pytest.raises(DimensionError):
        apply_error(s, FpVector.zero(2, 3), FpVector.zero(2, 3))
    with pytest.raises(DimensionError):
        inner(s, PhaseState(2, 3, [0] * 8))


def test_pentagon_kl(pentagon):
    code = CodeSpec(2, 5, pentagon, (Z5,), 3, 3)
    assert kl_check(code, 0).ok
    assert kl_check(code, 2).ok
    res = kl_check(code, 3)
    assert not res.ok
    assert res.witness.weight == 3
    assert not res.witness.value.is_zero()
    assert kl_distance(code) == 3


def test_constant_function_flagged_distance_one():
    f = FpFunction.constant(3, 2)
    code = CodeSpec(3, 2, f, (FpVector.zero(3, 2),), 1, 1)
    assert code.hypothesis_issues()
    assert kl_distance(code) == 1


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_k1_distance_equals_apc(p, n, rng):
    for _ in range(8):
        f = random_function(rng, p, n)
        beta = FpVector(p, tuple(rng.integers(0, p, n)))
        code = CodeSpec(p, n, f, (beta,), 2, 1)
        assert kl_distance(code) == apc_distance(f).distance


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (3, 2)])
def test_kl_distance_matches_naive_oracle(p, n, rng):
    for _ in range(5):
        f = random_function(rng, p, n)
        rows = sorted({tuple(int(c) for c in rng.integers(0, p, n)) for _ in range(int(rng.integers(1, 4)))})
        betas = tuple(FpVector(p, r) for r in rows)
        code = CodeSpec(p, n, f, betas, 2, 1)
        assert kl_distance(code) == naive_kl_distance(f, rows)


def test_small_codes_satisfy_formula_bound(rng):
    f = parse_poly("x1*x2+x2*x3", 2, 3)
    d_prime = apc_distance(f).distance
    assert d_prime == 2
    betas = (FpVector(2, (0, 0, 0)), FpVector(2, (1, 0, 0)))
    code = CodeSpec(2, 3, f, betas, d_prime, lemma1_distance(betas, d_prime, 2, 3))
    assert kl_distance(code) >= code.d_claimed


def test_shifted_states_are_logical_errors(pentagon):
    # Z(beta_j - beta_i) maps one code state onto another, so the true distance
    # is at most min W_H(beta_i, beta_j) while the formula gives d' - k.
    betas = tuple(build_betas(5, 1, 2)[1])
    formula = lemma1_distance(betas, 3, 2, 5)
    code = CodeSpec(2, 5, pentagon, betas, 3, formula)
    d, w = kl_distance_witness(code)
    assert formula == 2
    assert d == 1
    assert w.kind == "offdiag"
    assert w.a.is_zero() and w.b in (betas[0] - betas[1], betas[1] - betas[0])
    assert w.value == 32


def test_diag_failure_witness():
    # K = 2 on f = 0 with betas 0, e_2: X(e_2) has unequal diagonal entries
    f = FpFunction.constant(3, 2)
    code = CodeSpec(3, 2, f, (FpVector(3, (0, 0)), FpVector(3, (0, 1))), 2, 1)
    res = kl_check(code, 1)
    assert not res.ok
    assert res.witness.weight == 1


def test_worker_invariance(monkeypatch, pentagon):
    import apcqc.shells as shells

    monkeypatch.setattr(shells, "PARALLEL_THRESHOLD", 1)
    betas = tuple(build_betas(5, 1, 2)[1])
    code = CodeSpec(2, 5, pentagon, betas, 3, 2)
    out = {repr(kl_distance_witness(code, workers=w)) for w in (1, 2, 5)}
    assert len(out) == 1
