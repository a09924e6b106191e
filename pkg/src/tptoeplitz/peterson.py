"""Schubert and quantum Schubert polynomials, evaluated on Toeplitz points."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import _linalg
from .chart import chern_values, labelling_of
from .errors import NotTotallyPositive
from .toeplitz import ToeplitzMatrix, corner_minors, minor, q_map


# -- permutations -----------------------------------------------------------

class Permutation(tuple):
    """A permutation of ``1..m`` in one-line notation."""

    def __new__(cls, oneline):
        w = tuple(int(x) for x in oneline)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation: {w}")
        return super().__new__(cls, w)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    @classmethod
    def from_word(cls, word: Sequence[int], m: int | None = None) -> "Permutation":
        """Product ``s_{word[0]} s_{word[1]} ...`` acting on positions."""
        if m is None:
            m = max(word, default=0) + 1
        w = list(range(1, m + 1))
        for i in word:
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def longest(cls, m: int) -> "Permutation":
        return cls(range(m, 0, -1))

    @property
    def size(self) -> int:
        return len(self)

    def length(self) -> int:
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def extend(self, m: int) -> "Permutation":
        if m < len(self):
            raise ValueError("cannot shrink a permutation")
        return Permutation(tuple(self) + tuple(range(len(self) + 1, m + 1)))

    def reduced(self) -> "Permutation":
        """Drop trailing fixed points."""
        w = list(self)
        while w and w[-1] == len(w):
            w.pop()
        return Permutation(w)

    def times_s(self, i: int) -> "Permutation":
        """``w s_i``: swap positions ``i`` and ``i+1``."""
        w = list(self.extend(max(len(self), i + 1)))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def reduced_word(self) -> list:
        w, word = list(self), []
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    changed = True
        return word[::-1]

    def w0_conjugate(self, m: int) -> "Permutation":
        """``w0 w w0`` in ``S_m``."""
        w = self.extend(m)
        return Permutation(m + 1 - w[m - i] for i in range(1, m + 1))


# -- polynomials ------------------------------------------------------------

def _key(xs=(), qs=()):
    xs, qs = list(xs), list(qs)
    while xs and xs[-1] == 0:
        xs.pop()
    while qs and qs[-1] == 0:
        qs.pop()
    return (tuple(xs), tuple(qs))


class MultiPoly:
    """Polynomial in ``x_1, x_2, ...`` and ``q_1, q_2, ...`` with rational
    coefficients; terms keyed by ``(x exponents, q exponents)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({_key(): c})

    @classmethod
    def x(cls, i: int) -> "MultiPoly":
        return cls({_key([0] * (i - 1) + [1]): 1})

    @classmethod
    def q(cls, i: int) -> "MultiPoly":
        return cls({_key((), [0] * (i - 1) + [1]): 1})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for (xa, qa), ca in self.terms.items():
            for (xb, qb), cb in other.terms.items():
                xs = [a + b for a, b in itertools.zip_longest(xa, xb, fillvalue=0)]
                qs = [a + b for a, b in itertools.zip_longest(qa, qb, fillvalue=0)]
                k = _key(xs, qs)
                out[k] = out.get(k, 0) + ca * cb
        return MultiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, (MultiPoly, int, Fraction)) and self.terms == _lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(x) + 2 * sum(q) for x, q in self.terms), default=0)

    def set_q_zero(self) -> "MultiPoly":
        return MultiPoly({k: c for k, c in self.terms.items() if not k[1]})

    def nvars(self) -> int:
        return max((len(x) for x, _ in self.terms), default=0)

    def __call__(self, x: Sequence = (), q: Sequence = ()):
        """Evaluate at ``x_i = x[i-1]``, ``q_i = q[i-1]``."""
        total = 0
        for (xe, qe), c in self.terms.items():
            if len(xe) > len(x) or len(qe) > len(q):
                raise ValueError("not enough values to evaluate the polynomial")
            t = c
            for v, e in zip(x, xe):
                if e:
                    t = t * v ** e
            for v, e in zip(q, qe):
                if e:
                    t = t * v ** e
            total = total + t
        return total

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (xe, qe) in sorted(self.terms, reverse=True):
            c = self.terms[(xe, qe)]
            mono = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(xe) if e]
            mono += [f"q{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(qe) if e]
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(p) -> MultiPoly:
    return p if isinstance(p, MultiPoly) else MultiPoly.const(p)


def divided_difference(f: MultiPoly, i: int) -> MultiPoly:
    """``(f - s_i f)/(x_i - x_{i+1})`` for ``f`` free of ``q``."""
    out = {}
    for (xe, qe), c in f.terms.items():
        xs = list(xe) + [0] * max(0, i + 1 - len(xe))
        a, b = xs[i - 1], xs[i]
        if a == b:
            continue
        sign, lo, hi = (1, b, a) if a > b else (-1, a, b)
        for k in range(hi - lo):
            ys = list(xs)
            if a > b:
                ys[i - 1], ys[i] = a - 1 - k, b + k
            else:
                ys[i - 1], ys[i] = a + k, b - 1 - k
            key = _key(ys, qe)
            out[key] = out.get(key, 0) + sign * c
    return MultiPoly(out)


@lru_cache(maxsize=None)
def _schubert(w: Permutation) -> MultiPoly:
    m = len(w)
    for i in range(1, m):
        if w[i - 1] < w[i]:
            return divided_difference(_schubert(w.times_s(i)), i)
    # w is the longest element
    return MultiPoly({_key(range(m - 1, 0, -1)): 1})


def schubert_poly(w) -> MultiPoly:
    """Schubert polynomial by descending divided differences from the
    staircase monomial."""
    w = Permutation(w).reduced()
    if len(w) <= 1:
        return MultiPoly.const(1)
    return _schubert(w)


@lru_cache(maxsize=None)
def quantum_e(k: int, i: int) -> MultiPoly:
    """Quantum elementary polynomial ``E_i^k`` in ``x_1..x_k, q_1..q_{k-1}``."""
    if i < 0 or i > k:
        return MultiPoly()
    if i == 0:
        return MultiPoly.const(1)
    out = quantum_e(k - 1, i) + MultiPoly.x(k) * quantum_e(k - 1, i - 1)
    if k >= 2:
        out = out + MultiPoly.q(k - 1) * quantum_e(k - 2, i - 2)
    return out


def classical_e(k: int, i: int) -> MultiPoly:
    return quantum_e(k, i).set_q_zero()


def _e_vectors(m: int, degree: int):
    """Index vectors ``(i_1..i_{m-1})`` with ``0 <= i_j <= j`` and given sum."""
    def rec(j, left):
        if j == m:
            if left == 0:
                yield ()
            return
        for i in range(min(j, left) + 1):
            for rest in rec(j + 1, left - i):
                yield (i,) + rest
    return list(rec(1, degree))


def e_expansion(f: MultiPoly, m: int) -> dict:
    """Coefficients of ``f`` in the basis ``prod_j e_{i_j}(x_1..x_j)``,
    ``j < m``, solved exactly over the monomial coefficient space."""
    degree = f.degree()
    vecs = _e_vectors(m, degree)
    basis = []
    for vec in vecs:
        prod = MultiPoly.const(1)
        for j, i in enumerate(vec, start=1):
            if i:
                prod = prod * classical_e(j, i)
        basis.append(prod)
    monos = sorted(set(itertools.chain(f.terms, *(b.terms for b in basis))))
    a = [[b.terms.get(mono, 0) for b in basis] for mono in monos]
    rhs = [f.terms.get(mono, 0) for mono in monos]
    sol = _linalg.solve_exact_overdetermined(a, rhs)
    if sol is None:
        raise ArithmeticError("polynomial is not in the span of the elementary basis")
    return {vec: c for vec, c in zip(vecs, sol) if c != 0}


@lru_cache(maxsize=None)
def _quantum_schubert(w: Permutation) -> MultiPoly:
    m = len(w)
    out = MultiPoly()
    for vec, c in e_expansion(schubert_poly(w), m).items():
        prod = MultiPoly.const(c)
        for j, i in enumerate(vec, start=1):
            if i:
                prod = prod * quantum_e(j, i)
        out = out + prod
    return out


def quantum_schubert(w) -> MultiPoly:
    """Quantum Schubert polynomial: quantize the elementary-basis expansion of
    the Schubert polynomial factor by factor."""
    w = Permutation(w).reduced()
    if len(w) <= 1:
        return MultiPoly.const(1)
    return _quantum_schubert(w)


# -- evaluation on Toeplitz points -----------------------------------------

def frak_S_s_k(u, k: int):
    """Minor ratio ``Minor^{[k-1] u {k+1}}_{[n-k+2, n+1]} / Delta_k`` for a
    ToeplitzMatrix or any ``(n+1) x (n+1)`` matrix given as rows."""
    n = u.n if isinstance(u, ToeplitzMatrix) else len(u) - 1
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range 1..{n}")
    cols = range(n - k + 2, n + 2)
    delta = minor(u, range(1, k + 1), cols)
    if delta == 0:
        raise NotTotallyPositive(f"Delta_{k} vanishes")
    return minor(u, list(range(1, k)) + [k + 1], cols) / delta


def point_data(u: ToeplitzMatrix):
    """``(x_1..x_{n+1}, q_1..q_n)`` of a totally positive Toeplitz point."""
    return chern_values(labelling_of(u)), list(q_map(u))


def frak_S_eval(w, u: ToeplitzMatrix, data=None):
    w = Permutation(w).reduced()
    if len(w) > u.n + 1:
        raise ValueError(f"{tuple(w)} does not lie in S_{u.n + 1}")
    x, q = data if data is not None else point_data(u)
    return quantum_schubert(w)(x, q)


def dual_eval(w, u: ToeplitzMatrix, data=None):
    """Evaluate at ``(-x_{n+1}, ..., -x_1; q_n, ..., q_1)``."""
    w = Permutation(w).reduced()
    if len(w) > u.n + 1:
        raise ValueError(f"{tuple(w)} does not lie in S_{u.n + 1}")
    x, q = data if data is not None else point_data(u)
    return quantum_schubert(w)([-t for t in reversed(x)], list(reversed(q)))


def borel_relations(u: ToeplitzMatrix, data=None) -> list:
    """``E_i^{n+1}(x(u), q(u))`` for ``i = 1..n+1`` (all zero on Toeplitz points)."""
    x, q = data if data is not None else point_data(u)
    n = u.n
    return [quantum_e(n + 1, i)(x, q) for i in range(1, n + 2)]


def all_permutations(m: int):
    return [Permutation(p) for p in itertools.permutations(range(1, m + 1))]
