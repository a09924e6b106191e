from fractions import Fraction as F

import pytest

from tptoeplitz.chart import (QuiverLabeling, StandardChart, cells, chart_to_matrix,
                              chern_values, diagonal_q, divergence_defects, is_divergence_free,
                              is_toeplitz_matrix, labelling_of, labels_to_chart, matrix_to_chart,
                              multiplication_table, superpotential_summands, to_givental,
                              toeplitz_chart, vertex_labels)
from tptoeplitz.errors import ConfigError, NotTotallyPositive
from tptoeplitz.peterson import frak_S_s_k
from tptoeplitz.symfun import SchoenbergParams
from tptoeplitz.toeplitz import ToeplitzMatrix, q_map, truncate

EXP = SchoenbergParams(gamma=1)


def random_chart(rng, n):
    return StandardChart(n, {ij: F(rng.randint(1, 30), rng.randint(1, 30)) for ij in cells(n)})


def toeplitz_point(rng, make_params, n):
    return truncate(make_params(rng, n // 2 + 1), n)


def test_chart_to_matrix_examples():
    m = {(1, 1): F(2), (1, 2): F(3), (1, 3): F(5), (2, 1): F(7), (2, 2): F(11), (3, 1): F(13)}
    u = chart_to_matrix(StandardChart(3, m))
    assert u[0][1] == m[(1, 1)]
    assert u[1][3] == m[(2, 1)] * m[(2, 2)] + m[(2, 1)] * m[(1, 3)] + m[(1, 2)] * m[(1, 3)]
    assert chart_to_matrix(StandardChart(1, {(1, 1): F(4)})) == [[1, 4], [0, 1]]


def test_exponential_chart():
    for n in range(1, 8):
        ch = toeplitz_chart(truncate(EXP, n))
        assert ch.m == {(i, j): F(1, i + j - 1) for (i, j) in cells(n)}
        u = chart_to_matrix(ch)
        assert all(u[0][k] == truncate(EXP, n).c[k - 1] for k in range(1, n + 1))
    assert vertex_labels(toeplitz_chart(truncate(EXP, 10))) == multiplication_table(10)


def test_roundtrip(rng):
    for n in range(1, 7):
        for _ in range(5):
            ch = random_chart(rng, n)
            assert matrix_to_chart(chart_to_matrix(ch)) == ch


def test_degenerate_matrix():
    with pytest.raises(NotTotallyPositive):
        toeplitz_chart(truncate(SchoenbergParams((F(1, 2),)), 2))


def test_vertex_label_examples(rng):
    ch = random_chart(rng, 4)
    v = vertex_labels(ch)
    assert v(1, 3) == 1 / ch[(1, 3)]
    assert v(2, 2) == 1 / ch[(2, 2)] + 1 / ch[(1, 1)]
    assert labels_to_chart(v) == ch


def test_divergence_examples():
    assert is_divergence_free(multiplication_table(12))
    bad = multiplication_table(4).replace((2, 2), F(5))
    assert not is_divergence_free(bad)
    d = divergence_defects(bad)
    assert d[(1, 1)] == 0 and d[(1, 2)] != 0 and d[(2, 1)] != 0


def test_toeplitz_iff_divergence_free(rng, make_params):
    for n in range(1, 9):
        ch = toeplitz_chart(toeplitz_point(rng, make_params, n))
        assert is_divergence_free(vertex_labels(ch))
        assert is_toeplitz_matrix(chart_to_matrix(ch))
        if n == 1:
            continue
        cell = rng.choice(list(cells(n)))
        bad = ch.replace(cell, ch[cell] * F(rng.randint(2, 5), rng.randint(6, 9)))
        assert not is_divergence_free(vertex_labels(bad))
        assert not is_toeplitz_matrix(chart_to_matrix(bad))


def test_diagonal_q(rng, make_params):
    v = multiplication_table(6)
    assert diagonal_q(v, 4) == [4, 6, 6, 4]
    assert diagonal_q(v, 4) == list(q_map(truncate(EXP, 4)))
    u = toeplitz_point(rng, make_params, 6)
    lab = labelling_of(u)
    for k in range(1, 7):
        assert diagonal_q(lab, k) == list(q_map(u.truncate(k)))
    assert diagonal_q(lab, 1) == [1 / u.c[0] ** 2]


def test_givental():
    pt = to_givental(multiplication_table(5))
    assert all(pt.vertical[(i, j)] == j and pt.horizontal[(i, j)] == i for (i, j) in cells(5))
    assert pt.relations_hold()
    one = to_givental(QuiverLabeling(1, {(1, 1): F(3)}))
    assert one.vertical[(1, 1)] == one.horizontal[(1, 1)] == 3
    with pytest.raises(ValueError):
        to_givental(multiplication_table(4).replace((2, 2), F(5)))


def test_superpotential_summands(rng, make_params):
    s = superpotential_summands(multiplication_table(5))
    assert s.F == [k * (6 - k) for k in range(1, 6)]
    u = ToeplitzMatrix((F(2, 3),))
    s1 = superpotential_summands(labelling_of(u))
    assert s1.F == s1.F_prime == [F(3, 2)] and s1.total == 3
    for n in range(1, 7):
        lab = labelling_of(toeplitz_point(rng, make_params, n))
        s = superpotential_summands(lab)
        assert s.F == lab.diagonal()
        assert all(s.F[k - 1] == s.F_prime[n - k] for k in range(1, n + 1))
        assert s.total == 2 * sum(lab.diagonal()) == to_givental(lab).superpotential()


def test_minor_ratio_identity_fails_off_toeplitz(rng, make_params):
    # F_k = F'_{n-k+1} is the same vertex; the substantive statement is that the
    # minor ratio of the matrix equals the chart value, which needs Toeplitz.
    n = 4
    ch = toeplitz_chart(toeplitz_point(rng, make_params, n))
    u = chart_to_matrix(ch)
    assert all(frak_S_s_k(u, k) == vertex_labels(ch).diagonal()[k - 1] for k in range(1, n + 1))
    bad = ch.replace((1, 1), ch[(1, 1)] * 2)
    ub = chart_to_matrix(bad)
    diag = vertex_labels(bad).diagonal()
    assert any(frak_S_s_k(ub, k) != diag[k - 1] for k in range(1, n + 1))


def test_chern_values(rng, make_params):
    n = 5
    x = chern_values(multiplication_table(n))
    assert x == [n + 2 - 2 * k for k in range(1, n + 2)]
    u = toeplitz_point(rng, make_params, n)
    lab = labelling_of(u)
    x = chern_values(lab)
    assert sum(x) == 0
    assert x[0] == 1 / toeplitz_chart(u).m[(1, n)]
    partial = [sum(x[:k]) for k in range(1, n + 1)]
    assert partial == lab.diagonal()


def test_json():
    ch = toeplitz_chart(truncate(EXP, 2))
    assert ch.to_json() == [["1", "1/2"], ["1/2"]]
    assert StandardChart.from_json(ch.to_json()) == ch
    lab = multiplication_table(3)
    assert QuiverLabeling.from_json(lab.to_json()) == lab
    with pytest.raises(ConfigError):
        StandardChart.from_json([["1", "2"], ["1", "3"]])
