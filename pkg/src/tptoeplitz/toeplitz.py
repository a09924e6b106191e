"""Finite unipotent upper-triangular Toeplitz matrices and the d- and q-maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from . import _linalg
from .errors import ConfigError, NotTotallyPositive
from .scalars import as_fraction, is_zero, parse_rational, rational_str
from .symfun import RectangleMinors, SchoenbergParams, edrei_expand, jacobi_trudi, rectangle


def _is_exact(x) -> bool:
    return not isinstance(x, (float, mpmath.mpf))


@dataclass(frozen=True)
class ToeplitzMatrix:
    """The ``(n+1) x (n+1)`` matrix with ones on the diagonal and ``c_k`` at
    entry ``(i, i+k)``."""

    c: tuple
    totally_positive: bool = field(default=False, compare=False)

    def __post_init__(self):
        c = tuple(as_fraction(x) if _is_exact(x) else x for x in self.c)
        object.__setattr__(self, "c", c)
        if not c:
            raise ValueError("rank must be at least 1")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(x) for x in self.c)

    def coeff(self, k: int):
        if k < 0:
            return 0 * self.c[0]
        if k == 0:
            return 1 + 0 * self.c[0]
        return self.c[k - 1]

    def entry(self, i: int, j: int):
        """1-based entry ``(i, j)``."""
        return self.coeff(j - i)

    def rows(self) -> list:
        size = self.n + 1
        return [[self.entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]

    def truncate(self, k: int) -> "ToeplitzMatrix":
        """The rank-``k`` truncation (upper-left ``(k+1) x (k+1)`` block)."""
        if not 1 <= k <= self.n:
            raise ValueError(f"truncation rank {k} out of range 1..{self.n}")
        return ToeplitzMatrix(self.c[:k])

    def to_json(self) -> dict:
        return {"n": self.n, "c": [rational_str(x) if _is_exact(x) else mpmath.nstr(x, 30)
                                   for x in self.c]}

    @classmethod
    def from_json(cls, obj, path=None) -> "ToeplitzMatrix":
        if not isinstance(obj, dict) or "c" not in obj:
            raise ConfigError("expected an object with key 'c'", path=path)
        c = tuple(parse_rational(x, path=path, field="c") for x in obj["c"])
        if "n" in obj and obj["n"] != len(c):
            raise ConfigError(f"n = {obj['n']} but {len(c)} coefficients given",
                              path=path, field="n")
        try:
            return cls(c)
        except ValueError as exc:
            raise ConfigError(str(exc), path=path) from exc


def truncate(p: SchoenbergParams, n: int) -> ToeplitzMatrix:
    """Rank-``n`` truncation of the infinite Toeplitz matrix of ``p``."""
    return ToeplitzMatrix(tuple(edrei_expand(p, n)))


def minor(u, rows: Sequence[int], cols: Sequence[int]):
    """Minor of ``u`` (a ToeplitzMatrix or a list of rows) with 1-based row
    set ``rows`` and column set ``cols``."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have the same size")
    if isinstance(u, ToeplitzMatrix):
        size = u.n + 1
        get = u.entry
    else:
        size = len(u)
        get = lambda i, j: u[i - 1][j - 1]
    if any(not 1 <= x <= size for x in rows + cols):
        raise ValueError(f"indices must lie in [1, {size}]")
    if not rows:
        return Fraction(1)
    return _linalg.det([[get(i, j) for j in cols] for i in rows])


def rect(u: ToeplitzMatrix, i: int, j: int):
    """``Minor^{[i]}_{[i]+j}(u)``: rows ``1..i``, columns ``1+j..i+j``."""
    return minor(u, range(1, i + 1), range(1 + j, i + j + 1))


def corner_minors(u: ToeplitzMatrix) -> list:
    """``Delta_1 .. Delta_n`` with ``Delta_i`` on rows ``[1, i]`` and columns
    ``[n+2-i, n+1]``."""
    n = u.n
    if u.is_exact:
        rm = RectangleMinors(u.c)
        return [as_fraction(rm.raw(i, n + 1 - i)) for i in range(1, n + 1)]
    return [jacobi_trudi(rectangle(i, n + 1 - i), list(u.c)) for i in range(1, n + 1)]


@dataclass(frozen=True)
class FiniteParams:
    """``d_1 .. d_{n+1}`` with product 1; ``q_k = d_{k+1}/d_k``."""

    d: tuple

    def __post_init__(self):
        d = tuple(as_fraction(x) if _is_exact(x) else x for x in self.d)
        object.__setattr__(self, "d", d)
        if len(d) < 2:
            raise ValueError("need at least two d values")
        if any(x <= 0 for x in d):
            raise ValueError("d values must be positive")

    @property
    def n(self) -> int:
        return len(self.d) - 1

    @property
    def q(self) -> tuple:
        return tuple(self.d[k + 1] / self.d[k] for k in range(self.n))

    def product(self):
        out = 1
        for x in self.d:
            out = out * x
        return out


def d_from_minors(deltas: Sequence) -> tuple:
    if any(is_zero(x) for x in deltas):
        raise NotTotallyPositive("a corner minor vanishes")
    n = len(deltas)
    d = [deltas[0]] + [deltas[i] / deltas[i - 1] for i in range(1, n)] + [1 / deltas[-1]]
    return tuple(d)


def d_map(u: ToeplitzMatrix) -> FiniteParams:
    deltas = corner_minors(u)
    if any(x <= 0 for x in deltas):
        raise NotTotallyPositive("corner minors must be positive")
    return FiniteParams(d_from_minors(deltas))


def q_map(u: ToeplitzMatrix) -> tuple:
    return d_map(u).q
