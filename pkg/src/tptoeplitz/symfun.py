"""Partitions, the Edrei generating series and supersymmetric Schur functions.

Toeplitz minors of ``u(c)`` are supersymmetric Schur functions of the
Schoenberg parameters. Two routes are provided and cross-checked:

* :func:`jacobi_trudi` -- a determinant in the coefficients ``c_k`` (uses
  subtraction, works with any ``gamma``);
* :func:`super_schur` -- the tableau sum ``sum_mu s_mu(alpha) s_{(lam/mu)'}(beta)``
  (subtraction-free, so it also runs over the leading-term semifield).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import gmpy2

from . import _linalg
from .errors import ConfigError, InsufficientCoefficients, NotTotallyPositive
from .scalars import (as_fraction, is_zero, parse_rational, rational_str,
                      to_mpq, units_for)


# -- partitions ------------------------------------------------------------

class Partition(tuple):
    """A partition as a weakly decreasing tuple of positive parts."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def part(self, i: int) -> int:
        """0-based part access, zero beyond the length."""
        return self[i] if i < len(self) else 0

    def hooks(self) -> list:
        conj = self.conjugate()
        return [[self[i] - j + conj[j] - i - 1 for j in range(self[i])]
                for i in range(len(self))]

    def num_syt(self) -> int:
        """Number of standard Young tableaux, by the hook length formula."""
        prod = 1
        for row in self.hooks():
            for h in row:
                prod *= h
        return math.factorial(self.size) // prod

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __repr__(self):
        return f"Partition({list(self)})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in ``lam`` (including the empty one)."""
    lam = Partition(lam)

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for p in range(min(lam[i], bound), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def rectangle(i: int, j: int) -> Partition:
    """The ``i x j`` rectangle: ``i`` rows of length ``j``."""
    return Partition([j] * i) if i > 0 and j > 0 else Partition()


# -- Schoenberg parameters -------------------------------------------------

@dataclass(frozen=True)
class SchoenbergParams:
    """Truncated Schoenberg parameters ``(alpha, beta, gamma)``."""

    alpha: tuple = ()
    beta: tuple = ()
    gamma: Fraction = Fraction(0)
    thoma: bool = field(default=False, compare=False)

    def __post_init__(self):
        alpha = tuple(as_fraction(a) for a in self.alpha)
        beta = tuple(as_fraction(b) for b in self.beta)
        gamma = as_fraction(self.gamma)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        if any(a < 0 for a in alpha) or any(b < 0 for b in beta) or gamma < 0:
            raise ValueError("Schoenberg parameters are nonnegative")
        for name, seq in (("alpha", alpha), ("beta", beta)):
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{name} must be weakly decreasing")
        if self.thoma and self.total() != 1:
            raise ValueError("Thoma normalization requires sum(alpha)+sum(beta)+gamma = 1")

    def total(self) -> Fraction:
        return sum(self.alpha, Fraction(0)) + sum(self.beta, Fraction(0)) + self.gamma

    @property
    def is_thoma_normalized(self) -> bool:
        return self.total() == 1

    def swap(self) -> "SchoenbergParams":
        """Exchange the roles of alpha and beta (the omega involution)."""
        return SchoenbergParams(self.beta, self.alpha, self.gamma)

    @classmethod
    def geometric(cls, a1, ra, b1, rb, length: int, gamma=0) -> "SchoenbergParams":
        """``alpha_i = a1 * ra**(i-1)``, ``beta_j = b1 * rb**(j-1)`` truncated
        to ``length`` terms each."""
        a1, ra, b1, rb = map(as_fraction, (a1, ra, b1, rb))
        return cls(tuple(a1 * ra ** i for i in range(length)),
                   tuple(b1 * rb ** i for i in range(length)), gamma)

    def to_json(self) -> dict:
        return {"alpha": [rational_str(a) for a in self.alpha],
                "beta": [rational_str(b) for b in self.beta],
                "gamma": rational_str(self.gamma)}

    @classmethod
    def from_json(cls, obj, path=None) -> "SchoenbergParams":
        if not isinstance(obj, dict):
            raise ConfigError("expected an object", path=path)
        unknown = set(obj) - {"alpha", "beta", "gamma", "schema", "thoma"}
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}", path=path)
        alpha = [parse_rational(a, path=path, field="alpha") for a in obj.get("alpha", [])]
        beta = [parse_rational(b, path=path, field="beta") for b in obj.get("beta", [])]
        gamma = parse_rational(obj.get("gamma", "0"), path=path, field="gamma")
        try:
            return cls(tuple(alpha), tuple(beta), gamma, thoma=bool(obj.get("thoma", False)))
        except ValueError as exc:
            raise ConfigError(str(exc), path=path) from exc


# -- generating series -----------------------------------------------------

def edrei_series(p: SchoenbergParams, N: int) -> list:
    """Coefficients ``c_0 .. c_N`` of ``e^{gamma x} prod (1+beta x)/(1-alpha x)``."""
    c = [Fraction(1)] + [Fraction(0)] * N
    for a in p.alpha:
        for k in range(1, N + 1):
            c[k] += a * c[k - 1]
    for b in p.beta:
        for k in range(N, 0, -1):
            c[k] += b * c[k - 1]
    if p.gamma:
        expo = [Fraction(1)]
        for k in range(1, N + 1):
            expo.append(expo[-1] * p.gamma / k)
        c = [sum(c[i] * expo[k - i] for i in range(k + 1)) for k in range(N + 1)]
    return c


def edrei_expand(p: SchoenbergParams, N: int) -> list:
    """The first ``N`` Toeplitz coefficients ``c_1 .. c_N`` of ``p``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return edrei_series(p, N)[1:]


def dual_coefficients(c: Sequence, N: int | None = None) -> list:
    """Coefficients ``e_1 .. e_N`` of ``E(x) = 1/H(-x)`` where ``H = 1 + sum c_k x^k``.

    For ``c = edrei_expand(p)`` this is ``edrei_expand(p.swap())``.
    """
    if N is None:
        N = len(c)
    h = [c[0] * 0 + 1] + list(c[:N])
    if len(h) < N + 1:
        raise InsufficientCoefficients(f"need {N} coefficients, have {len(c)}")
    e = [h[0]]
    for k in range(1, N + 1):
        # sum_{i=0}^k (-1)^i h_i e_{k-i} = 0
        s = h[0] * 0
        for i in range(1, k + 1):
            term = h[i] * e[k - i]
            s = s + term if i % 2 else s - term
        e.append(s)
    return e[1:]


def coefficient(c: Sequence, k: int, one=None):
    """``c_k`` with ``c_0 = 1`` and ``c_{<0} = 0``; ``c`` holds ``c_1 .. c_N``."""
    if one is None:
        one = units_for(c[0] if c else Fraction(0))[1]
    if k < 0:
        return units_for(one)[0]
    if k == 0:
        return one
    if k > len(c):
        raise InsufficientCoefficients(f"c_{k} requested, only {len(c)} available")
    return c[k - 1]


def jacobi_trudi(lam, c: Sequence):
    """``det(c_{lam_i + j - i})`` over the scalar field of ``c``."""
    lam = Partition(lam)
    r = len(lam)
    if r == 0:
        return units_for(c[0] if c else Fraction(0))[1]
    one = units_for(c[0] if c else Fraction(0))[1]
    mat = [[coefficient(c, lam[i] + j - i, one) for j in range(r)] for i in range(r)]
    return _linalg.det(mat)


# -- tableau (subtraction-free) form ---------------------------------------

def _horizontal_strips_below(lam: tuple, mu: tuple):
    """Partitions nu with mu <= nu <= lam and lam/nu a horizontal strip."""
    ranges = []
    for i in range(len(lam)):
        lo = max(lam[i + 1] if i + 1 < len(lam) else 0, mu[i] if i < len(mu) else 0)
        hi = lam[i]
        if lo > hi:
            return
        ranges.append(range(lo, hi + 1))
    for nu in itertools.product(*ranges):
        yield tuple(p for p in nu if p)


def skew_schur(lam, mu, xs: Sequence, zero=None, one=None):
    """``s_{lam/mu}(x_1..x_m)`` as a sum over semistandard tableaux, built
    letter by letter as chains of horizontal strips."""
    lam, mu = tuple(Partition(lam)), tuple(Partition(mu))
    if zero is None:
        zero, one = units_for(xs[0]) if xs else (Fraction(0), Fraction(1))
    if not Partition(lam).contains(Partition(mu)):
        return zero
    xs = tuple(xs)

    @lru_cache(maxsize=None)
    def rec(shape: tuple, m: int):
        if shape == mu:
            return one
        if m == 0:
            return zero
        x = xs[m - 1]
        total = zero
        size = sum(shape)
        for nu in _horizontal_strips_below(shape, mu):
            sub = rec(nu, m - 1)
            if is_zero(sub):
                continue
            k = size - sum(nu)
            total = total + (sub * x ** k if k else sub)
        return total

    return rec(lam, len(xs))


def schur(lam, xs: Sequence, zero=None, one=None):
    return skew_schur(lam, (), xs, zero, one)


def super_schur(lam, alpha: Sequence, beta: Sequence, zero=None, one=None):
    """Supersymmetric Schur function ``S_lam(alpha || beta)`` (gamma = 0) by the
    tableau formula ``sum_{mu <= lam} s_mu(alpha) s_{lam'/mu'}(beta)``."""
    lam = Partition(lam)
    if zero is None:
        sample = alpha[0] if alpha else (beta[0] if beta else Fraction(0))
        zero, one = units_for(sample)
    lam_c = lam.conjugate()
    total = zero
    for mu in subpartitions(lam):
        a = schur(mu, alpha, zero, one) if mu else one
        if is_zero(a):
            continue
        b = skew_schur(lam_c, mu.conjugate(), beta, zero, one)
        if is_zero(b):
            continue
        total = total + a * b
    return total


# -- rectangle minors and standard coordinates ------------------------------

def rect_minor(i: int, j: int, p: SchoenbergParams, method: str = "auto"):
    """``S_{i x j}``: the Toeplitz minor with rows ``[1, i]`` and columns
    ``[1+j, i+j]``.

    ``method`` is ``"jt"`` (i x i determinant), ``"dual"`` (j x j determinant
    on the swapped series), ``"tableau"`` (gamma = 0 only) or ``"auto"`` which
    picks the smaller determinant.
    """
    if i <= 0 or j <= 0:
        return Fraction(1)
    if method == "auto":
        method = "jt" if i <= j else "dual"
    if method == "jt":
        return jacobi_trudi(rectangle(i, j), edrei_expand(p, i + j - 1))
    if method == "dual":
        return jacobi_trudi(rectangle(j, i), edrei_expand(p.swap(), i + j - 1))
    if method == "tableau":
        if p.gamma:
            raise ValueError("the tableau route requires gamma = 0")
        return super_schur(rectangle(i, j), p.alpha, p.beta)
    raise ValueError(f"unknown method {method!r}")


def m_from_rectangles(S, i: int, j: int):
    """``m_ij = S(i,j) S(i-1,j-1) / (S(i,j-1) S(i-1,j))`` for a callable
    ``S(i, j)`` returning rectangle minors (``S(0, .) = S(., 0) = 1``)."""
    num1, num2 = S(i, j), S(i - 1, j - 1)
    den1, den2 = S(i, j - 1), S(i - 1, j)
    if any(is_zero(x) for x in (num1, num2, den1, den2)):
        raise NotTotallyPositive(f"vanishing rectangle minor in m_{i}{j}")
    return (num1 * num2) / (den1 * den2)


def m_closed(i: int, j: int, p: SchoenbergParams, method: str = "auto"):
    """Standard coordinate ``m_ij`` of the infinite Toeplitz matrix of ``p``."""
    return m_from_rectangles(lambda a, b: rect_minor(a, b, p, method), i, j)


def m_closed_semifield(i: int, j: int, alpha: Sequence, beta: Sequence):
    """``m_ij`` over any positive semifield (e.g. leading terms), using the
    subtraction-free tableau formula for every rectangle."""
    zero, one = units_for(alpha[0] if alpha else beta[0])

    def S(a, b):
        if a <= 0 or b <= 0:
            return one
        return super_schur(rectangle(a, b), alpha, beta, zero, one)

    return m_from_rectangles(S, i, j)


class RectangleMinors:
    """Rectangle minors ``S(i, j)`` of one Toeplitz sequence, via the
    Desnanot-Jacobi (condensation) recurrence

        S(i,j) S(i-2,j) = S(i-1,j)^2 - S(i-1,j+1) S(i-1,j-1),

    evaluated exactly in ``gmpy2.mpq``. Rectangles with more rows than columns
    are read from the dual sequence, so only ``min(i, j)`` rows of condensation
    are ever needed. Zero pivots fall back to a direct determinant.
    """

    def __init__(self, c: Sequence, c_dual: Sequence | None = None):
        self._c = [to_mpq(x) for x in c]
        if c_dual is None:
            c_dual = dual_coefficients([as_fraction(x) for x in c])
        self._cd = [to_mpq(x) for x in c_dual]
        self._rows = {False: [], True: []}

    @classmethod
    def from_params(cls, p: SchoenbergParams, N: int) -> "RectangleMinors":
        return cls(edrei_expand(p, N), edrei_expand(p.swap(), N))

    @property
    def available(self) -> int:
        return min(len(self._c), len(self._cd))

    def _extend(self, dual: bool, i: int):
        rows = self._rows[dual]
        c = self._cd if dual else self._c
        N = len(c)
        if not rows:
            # row index 0 and 1, stored with offset 1 so position 0 is j = -1
            rows.append([gmpy2.mpq(1)] * (N + 2))
            rows.append([gmpy2.mpq(0), gmpy2.mpq(1)] + list(c))
        while len(rows) <= i:
            k = len(rows)
            a, b = rows[k - 1], rows[k - 2]
            new = [gmpy2.mpq(0)]
            for jj in range(1, len(a) - 1):
                piv = b[jj]
                if piv == 0:
                    lam = rectangle(k, jj - 1)
                    new.append(to_mpq(jacobi_trudi(lam, [as_fraction(x) for x in c])))
                else:
                    new.append((a[jj] * a[jj] - a[jj + 1] * a[jj - 1]) / piv)
            rows.append(new)

    def raw(self, i: int, j: int):
        """``S(i, j)`` as ``gmpy2.mpq``."""
        if i <= 0 or j <= 0:
            return gmpy2.mpq(1)
        dual = i > j
        if dual:
            i, j = j, i
        if i + j - 1 > (len(self._cd) if dual else len(self._c)):
            raise InsufficientCoefficients(
                f"S({i},{j}) needs {i + j - 1} coefficients")
        self._extend(dual, i)
        return self._rows[dual][i][j + 1]

    def __call__(self, i: int, j: int) -> Fraction:
        return as_fraction(self.raw(i, j))

    def m(self, i: int, j: int):
        """Standard coordinate ``m_ij`` as ``gmpy2.mpq``."""
        return m_from_rectangles(self.raw, i, j)


def m_table(p: SchoenbergParams, n: int) -> dict:
    """All standard coordinates ``m_ij``, ``i + j <= n + 1``, of ``p``."""
    rm = RectangleMinors.from_params(p, n + 1)
    return {(i, j): as_fraction(rm.m(i, j))
            for i in range(1, n + 1) for j in range(1, n + 2 - i)}


def power_sum_identity_lhs(p: SchoenbergParams, n: int) -> Fraction:
    """``sum_{lam |- n} f^lam S_lam`` -- equals ``p_1^n = (sum alpha + sum beta + gamma)^n``."""
    c = edrei_expand(p, n)
    return sum((lam.num_syt() * jacobi_trudi(lam, c) for lam in partitions(n)), Fraction(0))
