"""Inverse of the q-map: the totally positive Toeplitz matrix with given
quantum parameters, by damped Newton iteration in ``y = log c``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from . import _linalg
from .errors import ConvergenceError
from .scalars import DEFAULT_BITS, check_bits, to_bigfloat
from .symfun import jacobi_trudi, rectangle
from .toeplitz import ToeplitzMatrix

MAX_ITER = 200
SEEDS = ("exp", "geometric")


@dataclass
class SolveResult:
    matrix: ToeplitzMatrix
    residual: object
    iterations: int
    bits: int
    residual_history: list = field(default_factory=list)


def _to_mpf(x):
    if isinstance(x, (mpmath.mpf, float)):
        return mpmath.mpf(x)
    if isinstance(x, str):
        try:
            return to_bigfloat(Fraction(x))
        except ValueError:
            return mpmath.mpf(x)
    return to_bigfloat(x)


def log_corner_minors(c: Sequence):
    """``log Delta_i`` of the Toeplitz matrix with coefficients ``c``, or
    ``None`` if some corner minor is not positive."""
    n = len(c)
    out = []
    for i in range(1, n + 1):
        delta = jacobi_trudi(rectangle(i, n + 1 - i), list(c))
        if not delta > 0:
            return None
        out.append(mpmath.log(delta))
    return out


def log_q(c: Sequence):
    ld = log_corner_minors(c)
    if ld is None:
        return None
    n = len(c)
    logd = [ld[0]] + [ld[i] - ld[i - 1] for i in range(1, n)] + [-ld[-1]]
    return [logd[k + 1] - logd[k] for k in range(n)]


def _residual(y, target):
    lq = log_q([mpmath.exp(t) for t in y])
    if lq is None:
        return None
    return [a - b for a, b in zip(lq, target)]


def _norm(r):
    return max(abs(x) for x in r)


def _seed_coeffs(kind: str, n: int):
    if kind == "exp":
        return [1 / mpmath.factorial(k) for k in range(1, n + 1)]
    if kind == "geometric":
        # alpha_i = beta_i = (1/2)^i, i <= n: totally positive at every rank
        c = [mpmath.mpf(1)] + [mpmath.mpf(0)] * n
        for i in range(1, n + 1):
            a = mpmath.mpf(2) ** (-i)
            for k in range(1, n + 1):
                c[k] += a * c[k - 1]
            for k in range(n, 0, -1):
                c[k] += a * c[k - 1]
        return c[1:]
    raise ValueError(f"unknown seed {kind!r}; choose from {SEEDS}")


def initial_guess(log_target, kind: str = "exp"):
    """Seed coefficients rescaled ``c_k -> t^k c_k`` so that the geometric
    mean of ``q`` matches the target (``q`` scales as ``t^-2``)."""
    n = len(log_target)
    c = _seed_coeffs(kind, n)
    lq = log_q(c)
    log_t2 = (mpmath.fsum(lq) - mpmath.fsum(log_target)) / n
    return [mpmath.log(x) + k * log_t2 / 2 for k, x in enumerate(c, start=1)]


def _jacobian(y, target, h):
    n = len(y)
    cols = []
    for k in range(n):
        yp, ym = list(y), list(y)
        yp[k] += h
        ym[k] -= h
        rp, rm = _residual(yp, target), _residual(ym, target)
        if rp is None or rm is None:
            return None
        cols.append([(a - b) / (2 * h) for a, b in zip(rp, rm)])
    return [[cols[k][r] for k in range(n)] for r in range(n)]


def _newton(y, target, tol, bits, max_iter, history):
    """Run damped Newton at ``bits``; returns ``(y, residual, iters, ok)``."""
    with mpmath.workprec(bits):
        y = [mpmath.mpf(t) for t in y]
        target = [mpmath.mpf(t) for t in target]
        h = mpmath.mpf(2) ** (-bits // 3)
        r = _residual(y, target)
        if r is None:
            raise ConvergenceError("initial guess is not totally positive")
        res = _norm(r)
        it = 0
        while it < max_iter:
            history.append(res)
            if res <= tol:
                return y, res, it, True
            J = _jacobian(y, target, h)
            if J is None:
                return y, res, it, False
            try:
                step = _linalg.solve(J, [-x for x in r])
            except ZeroDivisionError:
                return y, res, it, False
            t = mpmath.mpf(1)
            accepted = False
            while t > mpmath.mpf(2) ** -60:
                y_new = [a + t * b for a, b in zip(y, step)]
                r_new = _residual(y_new, target)
                if r_new is not None and _norm(r_new) < res:
                    y, r, res = y_new, r_new, _norm(r_new)
                    accepted = True
                    break
                t /= 2
            it += 1
            if not accepted:
                return y, res, it, False
        history.append(res)
        return y, res, it, res <= tol


def solve_q_report(q_target: Sequence, tol=1e-10, *, bits: int = DEFAULT_BITS,
                   seed: str = "exp", max_iter: int = MAX_ITER) -> SolveResult:
    """Newton solve with diagnostics. ``tol`` bounds
    ``max_k |log q_k(u) - log q_k^target|``."""
    bits = check_bits(bits)
    tol = mpmath.mpf(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    with mpmath.workprec(bits):
        q = [_to_mpf(x) for x in q_target]
        if not q:
            raise ValueError("need at least one quantum parameter")
        if any(not x > 0 for x in q):
            raise ValueError("quantum parameters must be positive")
        target = [mpmath.log(x) for x in q]
        y = initial_guess(target, seed)
    history: list = []
    used = bits
    y, res, iters, ok = _newton(y, target, tol, bits, max_iter, history)
    if not ok:
        used = max(2 * bits, 512)
        y, res, more, ok = _newton(y, target, tol, used, max_iter - iters, history)
        iters += more
    if not ok:
        raise ConvergenceError(f"Newton iteration stalled with residual {mpmath.nstr(res, 5)}",
                               residual=res, iterations=iters)
    with mpmath.workprec(used):
        c = tuple(mpmath.exp(t) for t in y)
    return SolveResult(ToeplitzMatrix(c, totally_positive=True), res, iters, used, history)


def solve_q(q_target: Sequence, tol=1e-10, **kwargs) -> ToeplitzMatrix:
    return solve_q_report(q_target, tol, **kwargs).matrix


def solve_d(d_target: Sequence, tol=1e-10, **kwargs) -> ToeplitzMatrix:
    """Solve for prescribed ``d_1 .. d_{n+1}`` (product 1) through the ratios
    ``q_k = d_{k+1}/d_k``."""
    bits = kwargs.get("bits", DEFAULT_BITS)
    with mpmath.workprec(check_bits(bits)):
        d = [_to_mpf(x) for x in d_target]
        if len(d) < 2:
            raise ValueError("need at least two d values")
        if any(not x > 0 for x in d):
            raise ValueError("d values must be positive")
        prod = mpmath.fprod(d)
        if abs(prod - 1) > mpmath.mpf(2) ** (8 - bits // 2):
            raise ValueError(f"d values must multiply to 1, got {mpmath.nstr(prod, 10)}")
        q = [d[k + 1] / d[k] for k in range(len(d) - 1)]
    return solve_q(q, tol, **kwargs)
