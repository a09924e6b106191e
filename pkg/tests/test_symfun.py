from fractions import Fraction as F

import pytest

from tptoeplitz.errors import InsufficientCoefficients, NotTotallyPositive
from tptoeplitz.symfun import (Partition, RectangleMinors, SchoenbergParams, dual_coefficients,
                               edrei_expand, jacobi_trudi, m_closed, m_table, partitions,
                               power_sum_identity_lhs, rect_minor, rectangle, subpartitions,
                               super_schur)

a, b = F(1, 2), F(1, 3)
P_ab = SchoenbergParams((a,), (b,))


def test_partition_basics():
    lam = Partition((3, 1))
    assert lam.conjugate() == (2, 1, 1)
    assert lam.size == 4
    assert lam.num_syt() == 3
    assert Partition((2, 2)).hooks() == [[3, 2], [2, 1]]
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert len(list(partitions(6))) == 11
    assert len(list(subpartitions((2, 2)))) == 6


def test_edrei_examples():
    assert edrei_expand(SchoenbergParams((1,)), 4) == [1, 1, 1, 1]
    assert edrei_expand(SchoenbergParams(gamma=1), 3) == [1, F(1, 2), F(1, 6)]
    assert edrei_expand(P_ab, 2) == [F(5, 6), F(5, 12)]
    assert edrei_expand(P_ab, 2)[1] == a * (a + b)


def test_params_validation_and_json():
    with pytest.raises(ValueError):
        SchoenbergParams((F(1, 3), F(1, 2)))
    with pytest.raises(ValueError):
        SchoenbergParams((F(-1, 3),))
    with pytest.raises(ValueError):
        SchoenbergParams((F(1, 2),), thoma=True)
    p = SchoenbergParams((F(1, 2), F(1, 4)), (F(1, 8),), F(1, 8), thoma=True)
    assert SchoenbergParams.from_json(p.to_json()) == p
    assert p.to_json() == {"alpha": ["1/2", "1/4"], "beta": ["1/8"], "gamma": "1/8"}


def test_jacobi_trudi_examples():
    c = edrei_expand(P_ab, 6)
    assert jacobi_trudi((4,), c) == c[3]
    assert jacobi_trudi((1, 1), c) == b * (a + b)
    assert jacobi_trudi((1, 1), edrei_expand(SchoenbergParams((a,)), 3)) == 0
    with pytest.raises(InsufficientCoefficients):
        jacobi_trudi((5,), edrei_expand(P_ab, 3))


def test_super_schur_examples():
    p = SchoenbergParams((F(1, 2), F(1, 5)), (F(1, 3), F(1, 7)))
    assert super_schur((1,), p.alpha, p.beta) == sum(p.alpha) + sum(p.beta)
    assert super_schur((2, 2), (a,), (b,)) == jacobi_trudi((2, 2), edrei_expand(P_ab, 4))
    assert super_schur((1, 1, 1), (a,), ()) == 0


def test_tableau_equals_jacobi_trudi(make_params, rng):
    for L in (1, 2, 3):
        p = make_params(rng, L, gamma=False)
        c = edrei_expand(p, 8)
        for n in range(1, 7):
            for lam in partitions(n):
                assert super_schur(lam, p.alpha, p.beta) == jacobi_trudi(lam, c)


def test_duality(make_params, rng):
    p = make_params(rng, 2, gamma=False)
    for n in range(1, 7):
        for lam in partitions(n):
            assert super_schur(lam, p.alpha, p.beta) == super_schur(lam.conjugate(), p.beta, p.alpha)


def test_power_sum_identity(make_params, rng):
    p = make_params(rng, 2)
    for n in range(1, 7):
        assert power_sum_identity_lhs(p, n) == p.total() ** n
    thoma = SchoenbergParams((F(1, 2),), (F(1, 4),), F(1, 4), thoma=True)
    assert power_sum_identity_lhs(thoma, 4) == 1


def test_total_positivity_witness(make_params, rng):
    p = make_params(rng, 5, gamma=False)
    c = edrei_expand(p, 12)
    for r in range(1, 6):
        for lam in subpartitions(rectangle(r, r)):
            if lam:
                assert jacobi_trudi(lam, c) > 0


def test_rect_minor(make_params, rng):
    p = make_params(rng, 3)
    c = edrei_expand(p, 8)
    for k in range(1, 6):
        assert rect_minor(1, k, p) == c[k - 1]
    assert rect_minor(2, 1, P_ab) == b * (a + b)
    for i in range(1, 5):
        for j in range(1, 5):
            v = rect_minor(i, j, p, "jt")
            assert rect_minor(i, j, p, "dual") == v
            assert rect_minor(j, i, p.swap()) == v
    q = SchoenbergParams(p.alpha, p.beta)
    assert rect_minor(3, 2, q, "tableau") == rect_minor(3, 2, q)


def test_dual_coefficients(make_params, rng):
    p = make_params(rng, 3)
    assert dual_coefficients(edrei_expand(p, 7)) == edrei_expand(p.swap(), 7)


def test_condensation_matches_determinants(make_params, rng):
    p = make_params(rng, 3)
    rm = RectangleMinors.from_params(p, 12)
    for i in range(1, 8):
        for j in range(1, 13 - i):
            assert rm(i, j) == rect_minor(i, j, p, "jt")


def test_condensation_zero_pivot_fallback():
    # two alphas, two betas: S_{3x3} = 0, so the row-5 pivot S_{3x3} vanishes
    p = SchoenbergParams((F(1, 2), F(1, 5)), (F(1, 3), F(1, 7)))
    rm = RectangleMinors.from_params(p, 12)
    for j in range(1, 7):
        assert rm(5, j) == rect_minor(5, j, p, "jt")


def test_m_closed_examples():
    p = SchoenbergParams((F(1, 2), F(1, 5)), (F(1, 3),), F(1, 4))
    assert m_closed(1, 1, p) == edrei_expand(p, 1)[0]
    for j in range(1, 5):
        assert m_closed(1, j, SchoenbergParams((a,))) == a
    with pytest.raises(NotTotallyPositive):
        m_closed(2, 1, SchoenbergParams((a,)))
    table = m_table(p, 3)
    assert table[(2, 2)] == m_closed(2, 2, p)
