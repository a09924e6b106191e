"""Convergence sweeps over the rank ``n`` of truncations ``u^{[n+1]}``.

Standard coordinates of a Toeplitz matrix do not depend on the truncation
rank, so one :class:`InfiniteChart` serves every ``n`` of a sweep. Corner
minors are never formed: ``d_i`` is the product

    d_i = prod_{r <= n-i+1} m_{ir} / prod_{k <= i-1} m_{k,n-i+2},

which only touches row ``i`` and column ``n-i+2`` of the chart. Rows with
small index come from condensation on ``c``, columns with small index from
condensation on the dual series, so every quantity near a corner of the
triangle costs ``O(n)`` exact rectangle minors with few rows.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .errors import NotTotallyPositive
from .peterson import Permutation, quantum_schubert, schubert_poly
from .scalars import as_fraction, rational_str, to_bigfloat
from .symfun import RectangleMinors, SchoenbergParams

CSV_COLUMNS = ("n", "quantity", "value", "target", "abs_err")


class InfiniteChart:
    """Lazily evaluated standard coordinates ``m_ij`` and vertex labels
    ``v_ij`` of the infinite Toeplitz matrix of ``p`` (exact)."""

    def __init__(self, p: SchoenbergParams, n_max: int):
        self.p = p
        self.n_max = n_max
        self.rm = RectangleMinors.from_params(p, n_max + 1)
        self._m: dict = {}
        self._v: dict = {}

    def m(self, i: int, j: int):
        key = (i, j)
        if key not in self._m:
            if i + j > self.n_max + 1:
                raise ValueError(f"m_{i}{j} lies outside rank {self.n_max}")
            x = self.rm.m(i, j)
            if x <= 0:
                raise NotTotallyPositive(f"m_{i}{j} is not positive")
            self._m[key] = x
        return self._m[key]

    def v(self, i: int, j: int):
        if i == 0 or j == 0:
            return 0
        key = (i, j)
        if key not in self._v:
            # v_ij = v_{i-1,j-1} + 1/m_ij, walked up from the boundary
            l = 0
            while l < min(i, j) and (i - l - 1, j - l - 1) not in self._v:
                l += 1
            for t in range(l, -1, -1):
                a, b = i - t, j - t
                if a >= 1 and b >= 1:
                    self._v[(a, b)] = self.v(a - 1, b - 1) + 1 / self.m(a, b)
        return self._v[key]

    # exact finite-rank quantities ------------------------------------------
    def d(self, n: int, i: int) -> Fraction:
        num = 1
        for r in range(1, n - i + 2):
            num *= self.m(i, r)
        den = 1
        for k in range(1, i):
            den *= self.m(k, n - i + 2)
        return as_fraction(num / den)

    def q(self, n: int, k: int) -> Fraction:
        return self.d(n, k + 1) / self.d(n, k)

    def F(self, n: int, k: int) -> Fraction:
        return as_fraction(self.v(k, n - k + 1))

    def F_prime(self, n: int, k: int) -> Fraction:
        return as_fraction(self.v(n - k + 1, k))

    def chern(self, n: int, k: int) -> Fraction:
        """``x_k`` of the rank-``n`` truncation, ``1 <= k <= n+1``."""
        return as_fraction(self.v(k, n - k + 1) - self.v(k - 1, n - k + 2))

    def path_sums(self, n: int):
        """Running sums of arrow labels over the rank-``n`` triangle:
        ``vert[(i, j)]`` sums vertical labels up column ``j`` to ``(i, j)``,
        ``hor[(i, j)]`` sums horizontal labels along row ``i`` to ``(i, j)``."""
        vert, hor = {}, {}
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                vij = self.v(i, j)
                vert[(i, j)] = vert.get((i - 1, j), 0) + (vij - self.v(i - 1, j))
                hor[(i, j)] = hor.get((i, j - 1), 0) + (vij - self.v(i, j - 1))
        return vert, hor

    # logarithms ------------------------------------------------------------
    def log_m(self, i: int, j: int):
        x = self.m(i, j)
        return mpmath.log(mpmath.mpf(int(x.numerator))) - mpmath.log(mpmath.mpf(int(x.denominator)))

    def delta(self, n: int, i: int, perturb: Callable | None = None):
        """``ln d_i`` of the rank-``n`` truncation (optionally with log
        perturbations ``perturb(n, i, j)`` added to every ``ln m_ij``)."""
        eps = (lambda a, b: perturb(n, a, b)) if perturb else (lambda a, b: 0)
        pos = mpmath.fsum(self.log_m(i, r) + eps(i, r) for r in range(1, n - i + 2))
        neg = mpmath.fsum(self.log_m(k, n - i + 2) + eps(k, n - i + 2) for k in range(1, i))
        return pos - neg


def _ln(x):
    if x == 0:
        return -mpmath.inf
    return mpmath.log(to_bigfloat(as_fraction(x)))


def _row(n, quantity, value, target):
    if isinstance(value, Fraction) != isinstance(target, Fraction):
        err = abs(to_bigfloat(value) - to_bigfloat(target))
    else:
        err = abs(value - target)
    if isinstance(err, mpmath.mpf) and mpmath.isnan(err):
        err = mpmath.inf
    return {"n": n, "quantity": quantity, "value": value, "target": target, "abs_err": err}


def _default_chart(p, n_list):
    return InfiniteChart(p, max(n_list))


def _run_rows(fn, n_list, jobs):
    if jobs and jobs > 1 and len(n_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(fn, n_list))
    else:
        parts = [fn(n) for n in n_list]
    return [row for part in parts for row in part]


class _SweepD:
    def __init__(self, p, n_max, i_list, j_list, perturb, bits):
        self.p, self.n_max, self.i_list, self.j_list = p, n_max, i_list, j_list
        self.perturb, self.bits = perturb, bits
        self.chart = None

    def __call__(self, n):
        with mpmath.workprec(self.bits):
            if self.chart is None:
                self.chart = InfiniteChart(self.p, self.n_max)
            ic, rows = self.chart, []
            for i in self.i_list:
                a = self.p.alpha[i - 1] if i <= len(self.p.alpha) else 0
                val = ic.delta(n, i, self.perturb) / n
                rows.append(_row(n, f"delta_{i}/n", val, _ln(a)))
            for j in self.j_list:
                b = self.p.beta[j - 1] if j <= len(self.p.beta) else 0
                val = -ic.delta(n, n + 2 - j, self.perturb) / n
                rows.append(_row(n, f"-delta_{n + 2 - j}/n", val, _ln(b)))
            return rows


def sweep_d(p: SchoenbergParams, n_list: Sequence[int], i_list: Sequence[int] = (1,),
            j_list: Sequence[int] = (1,), perturb: Callable | None = None,
            bits: int = 256, jobs: int = 1) -> list:
    """``delta_i/n`` against ``ln alpha_i`` and ``-delta_{n+2-j}/n`` against
    ``ln beta_j``. A zero parameter has target ``-inf``."""
    n_list = list(n_list)
    job = _SweepD(p, max(n_list), tuple(i_list), tuple(j_list), perturb, bits)
    return _run_rows(job, n_list, jobs)


def sweep_q(p: SchoenbergParams, n_list: Sequence[int], k_list: Sequence[int] = (1,),
            bits: int = 256) -> list:
    """``q_k^{1/n}`` against ``alpha_{k+1}/alpha_k`` and ``q_{n+1-j}^{1/n}``
    against ``beta_{j+1}/beta_j``."""
    rows = []
    with mpmath.workprec(bits):
        n_list = list(n_list)
        use_chart = _has(p.alpha, max(k_list) + 1) and _has(p.beta, max(k_list) + 1)
        ic = _default_chart(p, n_list) if use_chart else None
        for n in n_list:
            if ic is None:
                from .toeplitz import q_map, truncate
                q = q_map(truncate(p, n))
                qk = lambda k: q[k - 1]
            else:
                qk = lambda k: ic.q(n, k)
            for k in k_list:
                if k > n:
                    continue
                a = _ratio(p.alpha, k)
                rows.append(_row(n, f"q_{k}^(1/n)", mpmath.root(to_bigfloat(qk(k)), n), a))
                b = _ratio(p.beta, k)
                rows.append(_row(n, f"q_{n + 1 - k}^(1/n)", mpmath.root(to_bigfloat(qk(n + 1 - k)), n), b))
    return rows


def _has(seq, k):
    return len(seq) >= k and all(x > 0 for x in seq[:k])


def _ratio(seq, k):
    """``seq_{k+1}/seq_k``; 1 when both vanish (the exponential case)."""
    a = seq[k - 1] if k <= len(seq) else 0
    b = seq[k] if k < len(seq) else 0
    if a == 0:
        return to_bigfloat(1) if b == 0 else mpmath.inf
    return to_bigfloat(Fraction(b) / a)


def _inv_sum(seq, k):
    """``1/seq_1 + ... + 1/seq_k``; ``inf`` if a term is missing."""
    return sum(1 / a for a in seq[:k]) if _has(seq, k) else mpmath.inf


def sweep_chern(p: SchoenbergParams, n_list: Sequence[int], k_list: Sequence[int] = (1,)) -> list:
    """``F_k`` and ``F'_k`` against partial sums of ``1/alpha`` and ``1/beta``,
    ``x_k`` against ``1/alpha_k``, plus the exact identity ``F_k = F'_{n-k+1}``
    (vertical path against horizontal path) for every ``k <= n``."""
    n_list = list(n_list)
    ic = _default_chart(p, n_list)
    rows = []
    for n in n_list:
        for k in k_list:
            if k > n:
                continue
            rows.append(_row(n, f"F_{k}", ic.F(n, k), _inv_sum(p.alpha, k)))
            rows.append(_row(n, f"F'_{k}", ic.F_prime(n, k), _inv_sum(p.beta, k)))
            rows.append(_row(n, f"x_{k}", ic.chern(n, k),
                             1 / p.alpha[k - 1] if _has(p.alpha, k) else mpmath.inf))
    # F_k (vertical path into (k, n-k+1)) against F'_{n-k+1} (horizontal
    # path into the same vertex), for every rank up to the largest requested
    vert, hor = ic.path_sums(max(n_list))
    for n in n_list:
        worst = max(abs(vert[(k, n - k + 1)] - hor[(k, n - k + 1)]) for k in range(1, n + 1))
        rows.append(_row(n, "max|F_k-F'_(n-k+1)|", as_fraction(worst), Fraction(0)))
    return rows


def schubert_data(ic: InfiniteChart, n: int, m: int, dual: bool = False):
    """Chern values and quantum parameters needed by polynomials in ``S_m``,
    for the rank-``n`` truncation (reversed and negated if ``dual``)."""
    kx = min(m - 1, n + 1)
    kq = min(max(m - 2, 0), n)
    if not dual:
        x = [ic.chern(n, k) for k in range(1, kx + 1)]
        q = [ic.q(n, k) for k in range(1, kq + 1)]
    else:
        x = [-ic.chern(n, n + 2 - k) for k in range(1, kx + 1)]
        q = [ic.q(n, n + 1 - k) for k in range(1, kq + 1)]
    return x, q


def sweep_schubert(p: SchoenbergParams, w, n_list: Sequence[int]) -> list:
    """Quantum Schubert evaluation against the Schubert polynomial at
    ``1/alpha``; its dual against ``1/beta``; and ``q_1`` (tending to 0)."""
    w = Permutation(w).reduced()
    m = max(len(w), 2)
    n_list = [n for n in n_list if n + 1 >= m]
    ic = _default_chart(p, n_list)
    poly, classical = quantum_schubert(w), schubert_poly(w)
    inv_a = [1 / a for a in p.alpha[: m - 1]]
    inv_b = [1 / b for b in p.beta[: m - 1]]
    target_a = classical(inv_a, [])
    target_b = classical(inv_b, [])
    rows = []
    for n in n_list:
        rows.append(_row(n, f"S^{''.join(map(str, w))}", poly(*schubert_data(ic, n, m)), target_a))
        rows.append(_row(n, f"dual S^{''.join(map(str, w))}", poly(*schubert_data(ic, n, m, True)), target_b))
        rows.append(_row(n, "q_1", ic.q(n, 1), Fraction(0)))
    return rows


# -- output -----------------------------------------------------------------

def _fmt(x, float_mode: bool, digits: int = 20) -> str:
    if isinstance(x, (Fraction, int)) and not float_mode:
        return rational_str(x)
    if isinstance(x, mpmath.mpf):
        if mpmath.isinf(x):
            return "-inf" if x < 0 else "inf"
        return mpmath.nstr(x, digits)
    if isinstance(x, Fraction):
        return mpmath.nstr(to_bigfloat(x), digits)
    return str(x)


def to_csv(rows: list, float_mode: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([r["n"], r["quantity"]] + [_fmt(r[c], float_mode) for c in CSV_COLUMNS[2:]])
    return buf.getvalue()


def as_float(x) -> float:
    if isinstance(x, Fraction):
        return float(to_bigfloat(x))
    return float(x)
