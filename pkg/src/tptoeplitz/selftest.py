"""Fast deterministic exact property checks, run by ``tptoeplitz selftest``."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import chart, characters, peterson, symfun, toeplitz, tropical
from .scalars import LeadingTerm, val


def random_params(rng: random.Random, L: int, gamma: bool = True) -> symfun.SchoenbergParams:
    """Strictly decreasing positive alpha and beta of length ``L``."""
    def seq():
        xs = sorted({Fraction(rng.randint(1, 60), 60) for _ in range(4 * L)}, reverse=True)
        return tuple(xs[:L])
    g = Fraction(rng.randint(0, 4), 4) if gamma else Fraction(0)
    return symfun.SchoenbergParams(seq(), seq(), g)


def _semifield():
    rng = random.Random(1)
    for _ in range(200):
        a = LeadingTerm(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(1, 5)))
        b = LeadingTerm(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(1, 5)))
        assert val(a + b) == min(val(a), val(b))
        assert val(a * b) == val(a) + val(b)


def _schur():
    rng = random.Random(2)
    p = random_params(rng, 3, gamma=False)
    c = symfun.edrei_expand(p, 8)
    for n in range(1, 6):
        for lam in symfun.partitions(n):
            assert symfun.super_schur(lam, p.alpha, p.beta) == symfun.jacobi_trudi(lam, c)
    assert symfun.power_sum_identity_lhs(p, 5) == p.total() ** 5


def _exponential():
    for n in range(1, 10):
        u = toeplitz.truncate(symfun.SchoenbergParams(gamma=1), n)
        d = toeplitz.d_map(u).d
        assert d == tuple(Fraction(math.factorial(i - 1), math.factorial(n + 1 - i)) for i in range(1, n + 2))
    lab = chart.labelling_of(toeplitz.truncate(symfun.SchoenbergParams(gamma=1), 8))
    assert lab == chart.multiplication_table(8)


def _divergence():
    rng = random.Random(3)
    for n in range(2, 7):
        p = random_params(rng, n)
        ch = chart.toeplitz_chart(toeplitz.truncate(p, n))
        assert chart.is_divergence_free(chart.vertex_labels(ch))
        assert chart.is_toeplitz_matrix(chart.chart_to_matrix(ch))
        cell = rng.choice(list(chart.cells(n)))
        bad = ch.replace(cell, ch[cell] * 2)
        assert not chart.is_divergence_free(chart.vertex_labels(bad))
        assert not chart.is_toeplitz_matrix(chart.chart_to_matrix(bad))


def _borel():
    rng = random.Random(4)
    for n in range(1, 5):
        u = toeplitz.truncate(random_params(rng, n), n)
        assert all(x == 0 for x in peterson.borel_relations(u))


def _thoma():
    rng = random.Random(5)
    for _ in range(3):
        p = random_params(rng, 2)
        s = p.total()
        p = symfun.SchoenbergParams(tuple(a / s for a in p.alpha), tuple(b / s for b in p.beta), p.gamma / s)
        for n in range(1, 6):
            avg, cn = characters.thoma_check(p, n)
            assert avg == cn


def _tropical():
    rng = random.Random(6)
    for n in range(1, 6):
        for _ in range(20):
            lam = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(n)]
            lam.append(-sum(lam))
            f = tropical.weight_inverse(lam)
            assert tropical.weight(f) == tuple(lam)
        assert tropical.weight_inverse(tropical.rho2(n)).diagonal == [1] * n


def _detrop():
    tp = tropical.TropParams((0, 1, Fraction(3, 2)), (Fraction(1, 2), 2))
    for i in range(1, 4):
        for j in range(1, 4):
            assert tropical.detrop_check(tp, i, j, 3)


CHECKS = [
    ("leading-term valuation is a homomorphism", _semifield),
    ("tableau and Jacobi-Trudi Schur functions agree", _schur),
    ("exponential fixture: factorial d-list and multiplication table", _exponential),
    ("Toeplitz iff divergence-free", _divergence),
    ("quantum Borel relations vanish on Toeplitz points", _borel),
    ("Thoma average equals c_n", _thoma),
    ("weight inverse recovers weights", _tropical),
    ("leading-term coordinates tropicalize to min(A_i, B_j)", _detrop),
]


def run(report=print) -> bool:
    ok = True
    for name, fn in CHECKS:
        try:
            fn()
            report(f"PASS  {name}")
        except AssertionError as exc:
            ok = False
            report(f"FAIL  {name} {exc}")
    return ok
