from fractions import Fraction as F

import pytest

from tptoeplitz.chart import labelling_of, superpotential_summands
from tptoeplitz.peterson import (MultiPoly, Permutation, all_permutations, borel_relations,
                                 classical_e, divided_difference, dual_eval, e_expansion,
                                 frak_S_eval, frak_S_s_k, point_data, quantum_e,
                                 quantum_schubert, schubert_poly)
from tptoeplitz.symfun import SchoenbergParams
from tptoeplitz.toeplitz import ToeplitzMatrix, truncate

x1, x2, x3 = (MultiPoly.x(i) for i in (1, 2, 3))
q1, q2 = MultiPoly.q(1), MultiPoly.q(2)
EXP = SchoenbergParams(gamma=1)


def point(rng, make_params, n):
    return truncate(make_params(rng, n // 2 + 1), n)


def test_permutation_basics():
    w = Permutation((2, 3, 1))
    assert w.length() == 2
    assert Permutation.from_word([1, 2], 3) == w
    assert Permutation.from_word(w.reduced_word(), 3) == w
    assert Permutation.longest(3) == (3, 2, 1)
    assert w.extend(5) == (2, 3, 1, 4, 5)
    assert w.extend(5).reduced() == w
    assert w.w0_conjugate(3) == (3, 1, 2)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_schubert_examples():
    assert schubert_poly((2, 1)) == x1
    assert schubert_poly(Permutation.from_word([3], 4)) == x1 + x2 + x3
    assert schubert_poly((2, 3, 1)) == x1 * x2
    assert schubert_poly((3, 1, 2)) == x1 * x1
    assert schubert_poly((3, 2, 1)) == x1 * x1 * x2
    assert divided_difference(x1 * x1 * x2, 1) == x1 * x2


def test_quantum_e_examples():
    assert quantum_e(2, 1) == x1 + x2
    assert quantum_e(2, 2) == x1 * x2 + q1
    for k in range(1, 5):
        for i in range(k + 1):
            assert quantum_e(k, i).set_q_zero() == classical_e(k, i)


def test_quantum_schubert_examples():
    assert quantum_schubert((2, 3, 1)) == x1 * x2 + q1
    assert quantum_schubert((3, 1, 2)) == x1 * x1 - q1
    assert quantum_schubert((3, 2, 1)) == x1 * x1 * x2 + x1 * q1
    assert quantum_schubert(Permutation.from_word([2], 3)) == x1 + x2
    for w in all_permutations(4):
        assert quantum_schubert(w).set_q_zero() == schubert_poly(w)


def test_e_expansion_reconstructs():
    f = schubert_poly((1, 4, 3, 2))
    exp = e_expansion(f, 4)
    total = MultiPoly()
    for idx, coeff in exp.items():
        term = MultiPoly.const(coeff)
        for j, i in enumerate(idx, start=1):
            term = term * classical_e(j, i)
        total = total + term
    assert total == f


def test_stability():
    for m in range(2, 5):
        for w in all_permutations(m):
            big = w.extend(m + 1)
            assert schubert_poly(w) == schubert_poly(big)
            assert quantum_schubert(w) == quantum_schubert(big)


def test_borel_relations(rng, make_params):
    for n in range(1, 6):
        for _ in range(2):
            assert borel_relations(point(rng, make_params, n)) == [0] * (n + 1)


def test_minor_ratio_matches_chart(rng, make_params):
    assert frak_S_s_k(ToeplitzMatrix((F(4, 3),)), 1) == F(3, 4)
    for n in range(1, 7):
        u = truncate(EXP, n)
        assert [frak_S_s_k(u, k) for k in range(1, n + 1)] == [k * (n + 1 - k) for k in range(1, n + 1)]
        u = point(rng, make_params, n)
        F_k = superpotential_summands(labelling_of(u)).F
        data = point_data(u)
        for k in range(1, n + 1):
            sk = Permutation.from_word([k], n + 1)
            assert frak_S_s_k(u, k) == F_k[k - 1] == frak_S_eval(sk, u, data)


def test_eval_trivial_and_dual(rng, make_params):
    u = point(rng, make_params, 4)
    data = point_data(u)
    assert frak_S_eval((1,), u, data) == 1 == dual_eval((1,), u, data)
    x, q = data
    assert dual_eval((2, 1), u, data) == -x[-1]
    assert dual_eval((2, 1), u, data) == superpotential_summands(labelling_of(u)).F_prime[0]
    for w in all_permutations(4):
        assert dual_eval(w, u, data) == frak_S_eval(w.w0_conjugate(5), u, data)
    with pytest.raises(ValueError):
        frak_S_eval(Permutation.identity(6).times_s(5), u)


def test_positivity(rng, make_params):
    u = point(rng, make_params, 3)
    data = point_data(u)
    assert all(frak_S_eval(w, u, data) > 0 for w in all_permutations(4))


def test_polynomial_text():
    assert str(x1 * x2 + q1) in ("x1*x2 + q1", "q1 + x1*x2")
    assert (x1 * x2 + q1)([F(2), F(3)], [F(5)]) == 11
