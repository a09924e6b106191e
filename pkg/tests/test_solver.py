import math
from fractions import Fraction as F

import mpmath
import pytest

from tptoeplitz.errors import ConvergenceError
from tptoeplitz.solver import log_corner_minors, solve_d, solve_q, solve_q_report
from tptoeplitz.symfun import SchoenbergParams
from tptoeplitz.toeplitz import d_map, q_map, truncate


def rel_err(c, exact):
    return max(abs(x / mpmath.mpf(y.numerator) * y.denominator - 1) for x, y in zip(c, exact))


def test_trivial_and_hand_cases():
    assert abs(solve_q([1]).c[0] - 1) < 1e-12
    u = solve_q([2, 2])
    assert abs(u.c[0] - 1) < 1e-10 and abs(u.c[1] - mpmath.mpf(1) / 2) < 1e-10
    assert abs(solve_d([1, 1]).c[0] - 1) < 1e-12


def test_exponential():
    u = solve_q([k * (7 - k) for k in range(1, 7)], 1e-10)
    assert all(abs(u.c[k - 1] - mpmath.mpf(1) / math.factorial(k)) < 1e-8 for k in range(1, 7))
    d = [F(math.factorial(i - 1), math.factorial(6 - i)) for i in range(1, 7)]
    u = solve_d(d)
    assert all(abs(u.c[k - 1] - mpmath.mpf(1) / math.factorial(k)) < 1e-8 for k in range(1, 6))


def test_roundtrip(rng, make_params):
    for n in range(1, 7):
        u = truncate(make_params(rng, n // 2 + 1), n)
        v = solve_q(q_map(u), 1e-10)
        assert rel_err(v.c, u.c) < 1e-8
        d = d_map(u).d
        w = solve_d(d)
        assert rel_err(w.c, u.c) < 1e-8


def test_seed_independence(rng, make_params):
    u = truncate(make_params(rng, 3), 5)
    q = q_map(u)
    a = solve_q(q, 1e-12, seed="exp")
    b = solve_q(q, 1e-12, seed="geometric")
    assert max(abs(x - y) / x for x, y in zip(a.c, b.c)) < 1e-10


def test_iterates_stay_positive(rng, make_params):
    u = truncate(make_params(rng, 4), 7)
    rep = solve_q_report(q_map(u), 1e-10)
    assert rep.residual <= 1e-10
    assert all(math.isfinite(float(x)) for x in log_corner_minors(rep.matrix.c))
    assert rep.residual_history[-1] == rep.residual


def test_validation():
    with pytest.raises(ValueError):
        solve_q([1, -1])
    with pytest.raises(ValueError):
        solve_q([1], tol=0)
    with pytest.raises(ValueError):
        solve_d([2, 2])


def test_nonconvergence_reported():
    with pytest.raises(ConvergenceError) as info:
        solve_q([3, 1, 4, 1, 5], 1e-10, max_iter=1)
    assert info.value.iterations >= 1
