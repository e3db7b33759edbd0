import random
from fractions import Fraction

import pytest

from cyclicthomae.curve import (
    CurveSpec,
    CurveError,
    gamma_exponent,
    q_exponent,
    q_centered,
    reduce_mod,
    validate_curve,
)


def make(N, R, lam=None, base=None):
    m = len(R)
    if lam is None:
        lam = [complex(i, 0.3 * (i % 2)) for i in range(m)]
    if base is None:
        base = complex(-1.1, -0.7)
    return CurveSpec(N=N, R=tuple(R), lam=tuple(lam), base_x=base)


def test_reduce_representatives():
    assert reduce_mod(5, 3) == 2
    assert reduce_mod(0, 3) == 0
    assert reduce_mod(-1, 3) == 2


def test_validate_examples():
    d1 = validate_curve(make(3, (1, 1, 1), lam=(0, 1, 2)))
    assert d1.g == 1 and d1.r == 6

    d2 = validate_curve(make(2, (1, 1, 1, 1), lam=(0, 1, 2, 4)))
    assert d2.g == 1 and d2.r == 4

    d3 = validate_curve(make(3, (1, 1, 2, 2)))
    assert d3.g == 2
    assert d3.d == {1: 1, 2: 1}


def test_validate_rejections():
    with pytest.raises(CurveError):
        validate_curve(make(4, (1, 1, 1, 1)))  # composite N
    with pytest.raises(CurveError):
        validate_curve(make(3, (1, 1, 1, 1)))  # sum R != 0 mod 3
    with pytest.raises(CurveError):
        validate_curve(make(2, (1, 1, 1, 1), lam=(0, 1, 1, 4)))  # duplicate
    with pytest.raises(CurveError):
        validate_curve(make(2, (1, 1, 1, 1), lam=(0, 1, 2, complex("inf"))))
    with pytest.raises(CurveError):
        validate_curve(CurveSpec(N=2, R=(1, 1, 1, 1), lam=(0, 1, 2, 4), base_x=2.0))


def test_gamma_values():
    # term-by-term sums done by hand
    s2 = make(2, (1, 1, 1, 1))
    assert gamma_exponent(s2, 0, 1) == Fraction(1, 4)
    s3 = make(3, (1, 1, 2, 2))
    assert gamma_exponent(s3, 0, 2) == Fraction(4, 9)  # R_i=1, R_j=2
    assert gamma_exponent(s3, 0, 1) == Fraction(5, 9)  # R_i=R_j=1


def test_q_values():
    s2 = make(2, (1, 1, 1, 1))
    assert q_exponent(s2, (0, 1, 0, 1), 0, 1) == Fraction(0)
    assert q_exponent(s2, (0, 0, 1, 1), 0, 1) == Fraction(1, 4)
    s3 = make(3, (1, 1, 2, 2))
    assert q_exponent(s3, (0, 1, 1, 2), 0, 1) == Fraction(2, 9)


def test_exponent_symmetry_and_range():
    rng = random.Random(7)
    for _ in range(40):
        N = rng.choice([2, 3, 5, 7])
        m = rng.randrange(3, 8)
        while True:
            R = [rng.randrange(1, N) for _ in range(m)]
            if sum(R) % N == 0:
                break
        spec = make(N, R)
        beta = [rng.randrange(N) for _ in range(m)]
        i, j = rng.randrange(m), rng.randrange(m)
        g_ij = gamma_exponent(spec, i, j)
        q_ij = q_exponent(spec, beta, i, j)
        assert g_ij == gamma_exponent(spec, j, i)
        assert q_ij == q_exponent(spec, beta, j, i)
        assert 0 <= g_ij < N and 0 <= q_ij < N
        assert (N * N * g_ij).denominator == 1
        assert (N * N * q_ij).denominator == 1


def test_residue_sums_divisible():
    rng = random.Random(11)
    for _ in range(40):
        N = rng.choice([2, 3, 5, 7])
        m = rng.randrange(3, 9)
        while True:
            R = [rng.randrange(1, N) for _ in range(m)]
            if sum(R) % N == 0:
                break
        for l in range(1, N):
            assert sum(reduce_mod(l * r, N) for r in R) % N == 0


def test_genus_differential_count_random():
    # sum_l d(l) = g over random curve data
    rng = random.Random(20260809)
    count = 0
    while count < 100:
        N = rng.choice([2, 3, 5, 7])
        m = rng.randrange(3, 11)
        R = [rng.randrange(1, N) for _ in range(m)]
        if sum(R) % N != 0:
            continue
        data = validate_curve(make(N, R))
        assert sum(data.d.values()) == data.g
        count += 1


def test_q_centered_shift():
    s3 = make(3, (1, 1, 2, 2))
    beta = (0, 1, 1, 2)
    assert q_centered(s3, beta, 0, 1) == q_exponent(s3, beta, 0, 1) - Fraction(4, 12)
