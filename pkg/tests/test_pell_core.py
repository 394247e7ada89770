import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pellquartic import pell_core
from pellquartic.pell_core import (
    A,
    Mat2,
    PellPair,
    binomial_t,
    closed_form,
    closed_form_matrix,
    eigen_check,
    generate,
    mat_pow,
    seed,
    solution_at,
    step,
)
from pellquartic.quad_field import QuadElem


def naive_power(n):
    """A**n by n plain 2x2 multiplications on tuples."""
    m = ((1, 0), (0, 1))
    a = ((3, 4), (2, 3))
    for _ in range(n):
        m = tuple(
            tuple(sum(m[i][k] * a[k][j] for k in range(2)) for j in range(2)) for i in range(2)
        )
    return m


def binomial_oracle(n, eps):
    even = sum(comb(n, 2 * k) * 3 ** (n - 2 * k) * 8**k for k in range(n // 2 + 1))
    odd = sum(comb(n, 2 * k + 1) * 3 ** (n - 2 * k - 1) * 2 ** (3 * k + 1) for k in range((n - 1) // 2 + 1)) if n else 0
    return eps * even + odd


# seed / step / generate


def test_seed():
    assert seed(1).pair == (1, 1)
    assert seed(-1).pair == (1, -1)
    assert seed(1).satisfies()
    with pytest.raises(ValueError):
        seed(0)


def test_step():
    p = step(seed(1))
    assert p.pair == (7, 5) and p.n == 1
    p = step(p)
    assert p.pair == (41, 29)
    assert step(p).pair == (239, 169)


def test_generate():
    assert [p.pair for p in generate(1, 3)] == [(1, 1), (7, 5), (41, 29), (239, 169)]
    assert [p.pair for p in generate(-1, 1)] == [(1, -1), (-1, -1)]
    assert [p.pair for p in generate(1, 0)] == [(1, 1)]
    assert [p.n for p in generate(-1, 5)] == list(range(6))


def test_pellpair_validation():
    with pytest.raises(ValueError):
        PellPair(1, 1, 0, 2)
    with pytest.raises(ValueError):
        PellPair(1, 1, -1, 1)


# matrix power


def test_mat_pow_examples():
    assert mat_pow(A, 0) == Mat2(1, 0, 0, 1)
    assert mat_pow(A, 1) == Mat2(3, 4, 2, 3)
    assert mat_pow(A, 2) == Mat2(17, 24, 12, 17)


@pytest.mark.parametrize("n", range(33))
def test_mat_pow_against_naive(n):
    assert mat_pow(A, n).rows() == [list(r) for r in naive_power(n)]


@settings(max_examples=40)
@given(st.integers(0, 64), st.integers(0, 64))
def test_mat_pow_semigroup(m, n):
    assert mat_pow(A, m) @ mat_pow(A, n) == mat_pow(A, m + n)


def test_mixed_matrix_rejected():
    with pytest.raises(TypeError):
        Mat2(1, QuadElem(1, 0, 2), 0, 1)
    with pytest.raises(TypeError):
        A @ A.to_field()


def test_solution_at():
    assert solution_at(3, 1).pair == (239, 169)
    assert solution_at(0, -1).pair == (1, -1)
    assert solution_at(5, 1).pair == generate(1, 5)[-1].pair == (8119, 5741)


# closed forms


def test_closed_form_matrix_examples():
    assert closed_form_matrix(0) == Mat2(1, 0, 0, 1)
    assert closed_form_matrix(1) == A
    assert closed_form_matrix(2) == Mat2(17, 24, 12, 17)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 33, 64, 100])
def test_closed_form_matrix_matches_mat_pow(n):
    assert closed_form_matrix(n) == mat_pow(A, n)


def test_closed_form_matrix_uncollapsed_is_field_matrix():
    m = closed_form_matrix(4, collapse=False)
    assert m.kind is QuadElem
    assert m.collapse() == mat_pow(A, 4)


def test_closed_form():
    assert closed_form(0, 1).pair == (1, 1)
    assert closed_form(3, 1).pair == (239, 169)
    assert closed_form(2, -1) == solution_at(2, -1)


# binomial sum


def test_binomial_t_examples():
    assert binomial_t(0, 1) == 1
    assert binomial_t(1, 1) == 5
    assert binomial_t(3, 1) == 169


@pytest.mark.parametrize("n", list(range(40)) + [97, 150])
@pytest.mark.parametrize("eps", [1, -1])
def test_binomial_t_against_comb(n, eps):
    assert binomial_t(n, eps) == binomial_oracle(n, eps)


# invariants


@pytest.mark.parametrize("eps", [1, -1])
def test_four_way_agreement(eps):
    for p in generate(eps, 200):
        assert solution_at(p.n, eps) == p
        assert closed_form(p.n, eps) == p
        assert binomial_t(p.n, eps) == p.t


@pytest.mark.parametrize("eps", [1, -1])
def test_norm_invariant(eps):
    assert seed(eps).satisfies()
    for p in generate(eps, 1000):
        assert p.satisfies()
    rng = random.Random(eps)
    for n in rng.sample(range(1001), 25) + [1000]:
        assert solution_at(n, eps).satisfies()
        assert closed_form(n, eps).satisfies()


def test_positive_branch_strictly_increasing():
    seq = generate(1, 200)
    assert all(p.x > 0 and p.t > 0 for p in seq)
    assert all(b.x > a.x and b.t > a.t for a, b in zip(seq, seq[1:]))


@pytest.mark.parametrize("n", range(1, 51))
def test_negative_branch_is_shifted_positive_branch(n):
    # A @ (1, -1) = -(1, 1), so the eps=-1 sequence lags the eps=+1 one by one index
    neg = solution_at(n, -1)
    pos = solution_at(n - 1, 1)
    assert neg.pair == (-pos.x, -pos.t)


# eigen-decomposition


def test_eigen_check_passes():
    report = eigen_check()
    assert report.passed
    names = [c.name for c in report]
    assert names == [
        "characteristic_root_1",
        "characteristic_root_2",
        "P_invertible",
        "similarity",
        "eigenpair_1",
        "eigenpair_2",
    ]


def test_eigenpair_hand_value():
    s2 = QuadElem(0, 1, 2)
    lam = QuadElem(3, 2, 2)
    v = (QuadElem(2, 0, 2), s2)
    av = A.to_field() @ v
    assert av == (QuadElem(6, 4, 2), QuadElem(4, 3, 2))
    assert av == (lam * v[0], lam * v[1])


def test_eigen_check_detects_wrong_eigenvalue(monkeypatch):
    wrong = QuadElem(3, 1, 2)  # 3 + sqrt(2) is not a root of l^2 - 6l + 1
    monkeypatch.setattr(pell_core, "D", Mat2(wrong, QuadElem(0, 0, 2), QuadElem(0, 0, 2), wrong.conj()))
    report = eigen_check()
    assert not report.passed
    failed = {c.name for c in report if not c.passed}
    assert {"characteristic_root_1", "similarity", "eigenpair_1"} <= failed
