"""Standard coordinates, the quiver vertex labelling and superpotential summands.

Index conventions: a rank-``n`` chart has cells ``(i, j)`` with ``i, j >= 1``
and ``i + j <= n + 1``. The vertical arrow ``a_ij`` enters vertex ``(i, j)``
from ``(i-1, j)``; the horizontal arrow ``a'_ij`` enters it from ``(i, j-1)``.
Vertices with a zero index are the source and carry label 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _linalg
from .errors import ConfigError, NotTotallyPositive
from .scalars import as_fraction, is_zero, parse_rational, rational_str
from .symfun import RectangleMinors
from .toeplitz import ToeplitzMatrix, minor


def cells(n: int):
    """Cells of the rank-``n`` triangle in row-major order."""
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            yield (i, j)


def _triangle_from_rows(rows, path=None):
    n = len(rows)
    out = {}
    for i, row in enumerate(rows, start=1):
        if len(row) != n + 1 - i:
            raise ConfigError(f"row {i} must have {n + 1 - i} entries", path=path)
        for j, x in enumerate(row, start=1):
            out[(i, j)] = parse_rational(x, path=path, field=f"[{i}][{j}]")
    return n, out


def _triangle_to_rows(n, values):
    return [[rational_str(values[(i, j)]) for j in range(1, n + 2 - i)]
            for i in range(1, n + 1)]


@dataclass(frozen=True)
class StandardChart:
    """Positive coordinates ``m_ij`` of the ordered factorization
    ``u = prod x_{i+j-1}(m_ij)``."""

    n: int
    m: dict

    def __post_init__(self):
        if set(self.m) != set(cells(self.n)):
            raise ValueError(f"chart of rank {self.n} needs exactly the cells i+j <= {self.n + 1}")
        if any(x <= 0 for x in self.m.values()):
            raise NotTotallyPositive("chart coordinates must be positive")

    @classmethod
    def from_rows(cls, rows) -> "StandardChart":
        n, m = _triangle_from_rows(rows)
        return cls(n, m)

    def __getitem__(self, ij):
        return self.m[ij]

    def replace(self, ij, value) -> "StandardChart":
        m = dict(self.m)
        m[ij] = value
        return StandardChart(self.n, m)

    def sub(self, k: int) -> "StandardChart":
        """The rank-``k`` sub-triangle."""
        return StandardChart(k, {ij: self.m[ij] for ij in cells(k)})

    def to_json(self) -> list:
        return _triangle_to_rows(self.n, self.m)

    @classmethod
    def from_json(cls, obj, path=None) -> "StandardChart":
        if isinstance(obj, dict):
            obj = obj.get("m", obj.get("chart"))
        if not isinstance(obj, list):
            raise ConfigError("a chart is a triangular array of rationals", path=path)
        n, m = _triangle_from_rows(obj, path)
        try:
            return cls(n, m)
        except ValueError as exc:
            raise ConfigError(str(exc), path=path) from exc


def factor_order(n: int):
    """Cells in factorization order: rows from ``n`` down to 1, each row left
    to right."""
    for i in range(n, 0, -1):
        for j in range(1, n + 2 - i):
            yield (i, j)


def chart_to_matrix(ch: StandardChart) -> list:
    """The ``(n+1) x (n+1)`` matrix ``prod x_{i+j-1}(m_ij)`` as a list of rows."""
    size = ch.n + 1
    one = Fraction(1)
    zero = Fraction(0)
    u = [[one if r == c else zero for c in range(size)] for r in range(size)]
    for (i, j) in factor_order(ch.n):
        k = i + j - 1  # 1-based: adds t * column k to column k+1
        t = ch.m[(i, j)]
        for r in range(size):
            if u[r][k - 1]:
                u[r][k] += t * u[r][k - 1]
    return u


def is_toeplitz_matrix(u: list) -> bool:
    """Unipotent upper triangular and constant along every diagonal."""
    size = len(u)
    for r in range(size):
        for c in range(size):
            if c < r and u[r][c] != 0:
                return False
            if c == r and u[r][c] != 1:
                return False
            if c > r and u[r][c] != u[0][c - r]:
                return False
    return True


def _m_from(S, n: int) -> dict:
    out = {}
    for (i, j) in cells(n):
        vals = (S(i, j), S(i - 1, j - 1), S(i, j - 1), S(i - 1, j))
        if any(is_zero(x) for x in vals):
            raise NotTotallyPositive(f"vanishing minor in the formula for m_{i}{j}")
        out[(i, j)] = (vals[0] * vals[1]) / (vals[2] * vals[3])
    return out


def matrix_to_chart(u) -> StandardChart:
    """Invert :func:`chart_to_matrix` through ratios of minors on rows ``[i]``
    and column intervals ``[i] + j``. Accepts a ToeplitzMatrix or a list of
    rows (any unipotent upper-triangular matrix)."""
    if isinstance(u, ToeplitzMatrix):
        return toeplitz_chart(u)
    n = len(u) - 1

    def S(i, j):
        if i == 0:
            return Fraction(1)
        return minor(u, range(1, i + 1), range(1 + j, i + j + 1))

    return StandardChart(n, _m_from(S, n))


def toeplitz_chart(u: ToeplitzMatrix) -> StandardChart:
    """Chart of a Toeplitz matrix via condensation of its rectangle minors."""
    rm = RectangleMinors(u.c)
    m = {ij: as_fraction(x) for ij, x in _m_from(rm.raw, u.n).items()}
    return StandardChart(u.n, m)


def certify(u: ToeplitzMatrix) -> ToeplitzMatrix:
    """Return ``u`` flagged totally positive, or raise NotTotallyPositive."""
    toeplitz_chart(u)
    return ToeplitzMatrix(u.c, totally_positive=True)


# -- quiver labellings ------------------------------------------------------

@dataclass(frozen=True)
class QuiverLabeling:
    n: int
    v: dict

    def __post_init__(self):
        if set(self.v) != set(cells(self.n)):
            raise ValueError(f"labelling of rank {self.n} needs exactly the cells i+j <= {self.n + 1}")

    def __call__(self, i: int, j: int):
        if i == 0 or j == 0:
            return Fraction(0)
        return self.v[(i, j)]

    def vertical(self, i: int, j: int):
        """Label of ``a_ij``: ``v_ij - v_{i-1,j}``."""
        return self(i, j) - self(i - 1, j)

    def horizontal(self, i: int, j: int):
        """Label of ``a'_ij``: ``v_ij - v_{i,j-1}``."""
        return self(i, j) - self(i, j - 1)

    def diagonal(self) -> list:
        """``v_{k, n+1-k}`` for ``k = 1..n``."""
        return [self(k, self.n + 1 - k) for k in range(1, self.n + 1)]

    def replace(self, ij, value) -> "QuiverLabeling":
        v = dict(self.v)
        v[ij] = value
        return QuiverLabeling(self.n, v)

    def to_json(self) -> list:
        return _triangle_to_rows(self.n, self.v)

    @classmethod
    def from_json(cls, obj, path=None) -> "QuiverLabeling":
        if isinstance(obj, dict):
            obj = obj.get("v")
        if not isinstance(obj, list):
            raise ConfigError("a labelling is a triangular array of rationals", path=path)
        n, v = _triangle_from_rows(obj, path)
        return cls(n, v)


def vertex_labels(ch: StandardChart) -> QuiverLabeling:
    v = {}
    for (i, j) in cells(ch.n):
        below = v.get((i - 1, j - 1), Fraction(0))
        v[(i, j)] = below + 1 / ch.m[(i, j)]
    return QuiverLabeling(ch.n, v)


def labels_to_chart(q: QuiverLabeling) -> StandardChart:
    """Inverse of :func:`vertex_labels`: ``m_ij = 1/(v_ij - v_{i-1,j-1})``."""
    m = {}
    for (i, j) in cells(q.n):
        diff = q(i, j) - q(i - 1, j - 1)
        if diff <= 0:
            raise NotTotallyPositive(f"labels do not increase along the diagonal at ({i},{j})")
        m[(i, j)] = 1 / diff
    return StandardChart(q.n, m)


def multiplication_table(n: int) -> QuiverLabeling:
    return QuiverLabeling(n, {(i, j): Fraction(i * j) for (i, j) in cells(n)})


def divergence_defects(q: QuiverLabeling) -> dict:
    """``incoming - outgoing`` product at each interior vertex ``i+j <= n``."""
    out = {}
    for (i, j) in cells(q.n):
        if i + j > q.n:
            continue
        incoming = q.vertical(i, j) * q.horizontal(i, j)
        outgoing = q.vertical(i + 1, j) * q.horizontal(i, j + 1)
        out[(i, j)] = incoming - outgoing
    return out


def is_divergence_free(q: QuiverLabeling) -> bool:
    return all(x == 0 for x in divergence_defects(q).values())


def diagonal_q(q: QuiverLabeling, k: int) -> list:
    """Quantum parameters read off the sink diagonal ``i + j = k + 1``."""
    if not 1 <= k <= q.n:
        raise ValueError(f"level {k} out of range 1..{q.n}")
    return [q.vertical(i, k + 1 - i) * q.horizontal(i, k + 1 - i) for i in range(1, k + 1)]


@dataclass(frozen=True)
class GiventalPoint:
    """Arrow coordinates ``l(a_ij)`` (vertical) and ``l(a'_ij)`` (horizontal)."""

    n: int
    vertical: dict
    horizontal: dict

    def relations_hold(self) -> bool:
        for (i, j) in cells(self.n):
            if i + j > self.n:
                continue
            lhs = self.vertical[(i, j)] * self.horizontal[(i, j)]
            rhs = self.vertical[(i + 1, j)] * self.horizontal[(i, j + 1)]
            if lhs != rhs:
                return False
        return True

    def superpotential(self):
        return sum(self.vertical.values(), Fraction(0)) + sum(self.horizontal.values(), Fraction(0))


def to_givental(q: QuiverLabeling) -> GiventalPoint:
    vert = {ij: q.vertical(*ij) for ij in cells(q.n)}
    hor = {ij: q.horizontal(*ij) for ij in cells(q.n)}
    if any(x <= 0 for x in list(vert.values()) + list(hor.values())):
        raise NotTotallyPositive("arrow labels must be positive")
    pt = GiventalPoint(q.n, vert, hor)
    if not pt.relations_hold():
        raise ValueError("labelling is not divergence-free: not a Toeplitz point")
    return pt


class Summands(NamedTuple):
    F: list
    F_prime: list
    total: Fraction


def superpotential_summands(q: QuiverLabeling) -> Summands:
    """``F_k`` (vertical path into ``(k, n-k+1)``), ``F'_k`` (horizontal path
    into ``(n-k+1, k)``) and the sum of all arrow labels."""
    n = q.n
    F = [sum((q.vertical(i, n - k + 1) for i in range(1, k + 1)), Fraction(0))
         for k in range(1, n + 1)]
    Fp = [sum((q.horizontal(n - k + 1, j) for j in range(1, k + 1)), Fraction(0))
          for k in range(1, n + 1)]
    total = sum((q.vertical(*ij) + q.horizontal(*ij) for ij in cells(n)), Fraction(0))
    return Summands(F, Fp, total)


def chern_values(q: QuiverLabeling) -> list:
    """``x_k = v_{k,n-k+1} - v_{k-1,n-k+2}``, ``k = 1..n+1``; partial sums are
    the ``F_k`` and the total is 0."""
    n = q.n
    return [q(k, n - k + 1) - q(k - 1, n - k + 2) if k <= n else -q(n, 1)
            for k in range(1, n + 2)]


def labelling_of(u: ToeplitzMatrix) -> QuiverLabeling:
    return vertex_labels(toeplitz_chart(u))
