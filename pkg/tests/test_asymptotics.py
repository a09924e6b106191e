import math
from fractions import Fraction as F

import mpmath
import pytest

from tptoeplitz.asymptotics import (CSV_COLUMNS, InfiniteChart, sweep_chern, sweep_d, sweep_q,
                                    sweep_schubert, to_csv)
from tptoeplitz.chart import labelling_of, toeplitz_chart
from tptoeplitz.symfun import SchoenbergParams, m_closed
from tptoeplitz.toeplitz import d_map, q_map, truncate

GEO = SchoenbergParams.geometric(F(1, 2), F(2, 5), F(1, 3), F(1, 4), 8)
EXP = SchoenbergParams(gamma=1)


def by(rows, quantity):
    return {r["n"]: r for r in rows if r["quantity"] == quantity}


def test_infinite_chart_matches_finite():
    ic = InfiniteChart(GEO, 10)
    for n in range(1, 11):
        u = truncate(GEO, n)
        ch = toeplitz_chart(u)
        assert all(ic.m(i, j) == ch.m[(i, j)] for (i, j) in ch.m)
        v = labelling_of(u)
        assert all(ic.v(i, j) == v(i, j) for (i, j) in v.v)
        assert [ic.d(n, i) for i in range(1, n + 2)] == list(d_map(u).d)
        assert [ic.q(n, k) for k in range(1, n + 1)] == list(q_map(u))
    assert ic.m(2, 3) == m_closed(2, 3, GEO)


@mpmath.workprec(256)
def test_delta_is_log_d():
    ic = InfiniteChart(GEO, 8)
    for i in (1, 4, 9):
        assert abs(ic.delta(8, i) - mpmath.log(mpmath.mpf(ic.d(8, i).numerator) / ic.d(8, i).denominator)) < 1e-60


@mpmath.workprec(256)
def test_sweep_d_exponential():
    rows = by(sweep_d(EXP, [5, 10], [1], []), "delta_1/n")
    for n in (5, 10):
        assert abs(rows[n]["value"] + mpmath.log(mpmath.factorial(n)) / n) < 1e-50
        assert rows[n]["target"] == -mpmath.inf


def test_sweep_d_geometric_decreasing():
    rows = sweep_d(GEO, [5, 10, 15], [1], [1])
    a = [r["abs_err"] for r in rows if r["quantity"] == "delta_1/n"]
    b = [r["abs_err"] for r in rows if r["quantity"].startswith("-delta")]
    assert a == sorted(a, reverse=True) and b == sorted(b, reverse=True)


def test_sweep_d_parallel_is_deterministic():
    assert sweep_d(GEO, [4, 6, 8], [1, 2], [1], jobs=2) == sweep_d(GEO, [4, 6, 8], [1, 2], [1])


def test_sweep_d_perturbation_hook():
    bounded = lambda n, i, j: mpmath.mpf(1) / (1 + i + j)
    rows = sweep_d(GEO, [5, 10, 15], [1], [], perturb=bounded)
    plain = sweep_d(GEO, [5, 10, 15], [1], [])
    assert all(r["value"] != s["value"] for r, s in zip(rows, plain))
    assert rows[-1]["abs_err"] < rows[0]["abs_err"]


@mpmath.workprec(256)
def test_sweep_q():
    rows = by(sweep_q(EXP, [4, 8], [1]), "q_1^(1/n)")
    assert abs(rows[8]["value"] - mpmath.root(8, 8)) < 1e-50
    assert rows[8]["target"] == 1
    geo = sweep_q(GEO, [6, 10], [1])
    assert geo[0]["target"] == mpmath.mpf(2) / 5


def test_sweep_chern():
    rows = sweep_chern(GEO, [1, 5, 10], [1])
    f1 = by(rows, "F_1")
    assert f1[1]["value"] == 1 / GEO.total()
    assert f1[10]["abs_err"] < f1[5]["abs_err"]
    ident = by(rows, "max|F_k-F'_(n-k+1)|")
    assert all(r["value"] == 0 for r in ident.values())


def test_sweep_schubert():
    rows = sweep_schubert(GEO, (2, 3, 1), [4, 8, 12])
    s = by(rows, "S^231")
    assert s[12]["target"] == 2 * 5
    assert s[12]["abs_err"] < s[4]["abs_err"]
    q1 = [r["value"] for r in by(rows, "q_1").values()]
    assert q1 == sorted(q1, reverse=True)


def test_csv_columns():
    text = to_csv(sweep_chern(EXP, [2], [1]))
    lines = text.splitlines()
    assert "inf" in lines[1]
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1].startswith("2,F_1,")
