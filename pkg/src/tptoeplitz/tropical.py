"""Min-ideal fillings, the Lusztig weight map, the tropical Edrei map and
leading-term detropicalization.

Everything here is exact. Extended values use ``math.inf`` for +infinity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import _linalg
from .chart import cells
from .errors import ConfigError, StabilizationError
from .scalars import LeadingTerm, as_fraction, parse_rational, rational_str, val
from .symfun import m_closed_semifield

CHAMBER_BOUND = 8


def _ext(x):
    if x == math.inf or x == "inf":
        return math.inf
    return as_fraction(x)


def _ext_str(x) -> str:
    return "inf" if x == math.inf else rational_str(x)


# -- min-ideal fillings -----------------------------------------------------

def is_min_ideal(n: int, M: dict) -> bool:
    return all(M[(i, j)] == min(M[(i + 1, j)], M[(i, j + 1)])
               for (i, j) in cells(n) if i + j <= n)


@dataclass(frozen=True)
class MinIdealFilling:
    n: int
    M: dict

    def __post_init__(self):
        if set(self.M) != set(cells(self.n)):
            raise ValueError(f"filling of rank {self.n} needs exactly the cells i+j <= {self.n + 1}")
        if not is_min_ideal(self.n, self.M):
            raise ValueError("not a min-ideal filling")

    def __getitem__(self, ij):
        return self.M[ij]

    @property
    def diagonal(self) -> list:
        return [self.M[(k, self.n + 1 - k)] for k in range(1, self.n + 1)]

    def transpose(self) -> "MinIdealFilling":
        return MinIdealFilling(self.n, {(j, i): x for (i, j), x in self.M.items()})

    def to_json(self) -> list:
        return [[rational_str(self.M[(i, j)]) for j in range(1, self.n + 2 - i)]
                for i in range(1, self.n + 1)]

    @classmethod
    def from_json(cls, rows, path=None) -> "MinIdealFilling":
        n = len(rows)
        M = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != n + 1 - i:
                raise ConfigError(f"row {i} must have {n + 1 - i} entries", path=path)
            for j, x in enumerate(row, start=1):
                M[(i, j)] = parse_rational(x, path=path, field=f"[{i}][{j}]")
        try:
            return cls(n, M)
        except ValueError as exc:
            raise ConfigError(str(exc), path=path) from exc


def from_diagonal(D: Sequence) -> MinIdealFilling:
    """``M_ij = min(D_i, ..., D_{n+1-j})``."""
    D = [as_fraction(x) for x in D]
    n = len(D)
    M = {}
    for i in range(1, n + 1):
        run = None
        for e in range(i, n + 1):  # window [i, e] is cell (i, n+1-e)
            run = D[e - 1] if run is None else min(run, D[e - 1])
            M[(i, n + 1 - e)] = run
    return MinIdealFilling(n, M)


def weight_of(M: Callable[[int, int], Fraction], n: int, i: int) -> Fraction:
    """``lambda_i = sum_{j <= n-i+1} M_ij - sum_{k < i} M_{k, n-i+2}``."""
    pos = sum((M(i, j) for j in range(1, n - i + 2)), Fraction(0))
    neg = sum((M(k, n - i + 2) for k in range(1, i)), Fraction(0))
    return pos - neg


def weight(f: MinIdealFilling) -> tuple:
    """Lusztig weight ``(lambda_1, ..., lambda_{n+1})``; sums to zero."""
    get = lambda i, j: f.M[(i, j)]
    return tuple(weight_of(get, f.n, i) for i in range(1, f.n + 2))


def weight_by_roots(f: MinIdealFilling) -> tuple:
    """Same weight as ``sum M_ij (eps_i - eps_{n+2-j})``."""
    lam = [Fraction(0)] * (f.n + 1)
    for (i, j), x in f.M.items():
        lam[i - 1] += x
        lam[f.n + 1 - j] -= x
    return tuple(lam)


def _check_weight(lam) -> list:
    lam = [as_fraction(x) for x in lam]
    if len(lam) < 2:
        raise ValueError("a weight has at least two entries")
    if sum(lam) != 0:
        raise ValueError("weight entries must sum to zero")
    return lam


def weight_inverse(lam: Sequence) -> MinIdealFilling:
    """The unique min-ideal filling of weight ``lam``.

    Partial sums ``L_k = lam_1 + ... + lam_k`` equal the sum of ``min D[s..e]``
    over windows containing ``k``. On an interval ``[l, r]`` the smallest
    diagonal entry ``m`` is the minimum of ``L_k / ((k-l+1)(r-k+1))``; peel
    its contribution off and recurse on both sides.
    """
    lam = _check_weight(lam)
    n = len(lam) - 1
    L = list(itertools.accumulate(lam))[:n]
    D = [None] * n

    stack = [(0, n - 1)]
    while stack:
        l, r = stack.pop()
        if l > r:
            continue
        p = min(range(l, r + 1), key=lambda k: L[k] / ((k - l + 1) * (r - k + 1)))
        m = L[p] / ((p - l + 1) * (r - p + 1))
        D[p] = m
        for k in range(l, p):
            L[k] -= m * (k - l + 1) * (r - p + 1)
        for k in range(p + 1, r + 1):
            L[k] -= m * (p - l + 1) * (r - k + 1)
        stack.append((l, p - 1))
        stack.append((p + 1, r))
    f = from_diagonal(D)
    if weight(f) != tuple(lam):
        raise AssertionError("weight inverse failed to reproduce the weight")
    return f


def weight_inverse_chambers(lam: Sequence, bound: int = CHAMBER_BOUND) -> MinIdealFilling:
    """Reference inverse by chamber enumeration.

    For each total order of the diagonal the window minima are fixed entries,
    so the weight is linear; solve and keep solutions consistent with the
    (closed, ties allowed) order. Distinct survivors must be unique.
    """
    lam = _check_weight(lam)
    n = len(lam) - 1
    if n > bound:
        raise ValueError(f"chamber enumeration limited to n <= {bound}")
    L = list(itertools.accumulate(lam))[:n]
    found = set()
    for order in itertools.permutations(range(n)):
        rank = {d: r for r, d in enumerate(order)}
        a = [[Fraction(0)] * n for _ in range(n)]
        for s in range(n):
            for e in range(s, n):
                arg = min(range(s, e + 1), key=rank.__getitem__)
                for k in range(s, e + 1):
                    a[k][arg] += 1
        try:
            D = _linalg.solve(a, L)
        except ZeroDivisionError:
            continue
        if all(D[order[t]] <= D[order[t + 1]] for t in range(n - 1)):
            found.add(tuple(D))
    if len(found) != 1:
        raise AssertionError(f"expected exactly one filling, found {len(found)}")
    return from_diagonal(found.pop())


def rho2(n: int) -> tuple:
    """``2 rho = (n, n-2, ..., -n)``."""
    return tuple(Fraction(n - 2 * k) for k in range(n + 1))


# -- tropical Schoenberg parameters ----------------------------------------

@dataclass(frozen=True)
class TropParams:
    """Weakly increasing sequences ``A``, ``B`` given by finite prefixes.

    Beyond its prefix a sequence either stays at its last value (default), or,
    if ``A_sup``/``B_sup`` is set, increases towards that supremum without
    attaining it (such a tail can be reasoned about but not evaluated).
    """

    A: tuple
    B: tuple
    A_sup: object = None
    B_sup: object = None

    def __post_init__(self):
        A = tuple(_ext(x) for x in self.A)
        B = tuple(_ext(x) for x in self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        for name in ("A_sup", "B_sup"):
            x = getattr(self, name)
            if x is not None:
                object.__setattr__(self, name, _ext(x))
        if not A or not B:
            raise ValueError("A and B need at least one term")
        for name, seq, sup in (("A", A, self.A_sup), ("B", B, self.B_sup)):
            if any(seq[k] > seq[k + 1] for k in range(len(seq) - 1)):
                raise ValueError(f"{name} must be weakly increasing")
            if sup is not None and seq[-1] >= sup:
                raise ValueError(f"{name} prefix must stay below its unattained supremum")

    @property
    def stabilized(self) -> bool:
        return self.A_sup is None and self.B_sup is None

    def a(self, i: int):
        if i <= len(self.A):
            return self.A[i - 1]
        if self.A_sup is not None:
            raise StabilizationError(f"A_{i} lies in a non-stabilized tail")
        return self.A[-1]

    def b(self, j: int):
        if j <= len(self.B):
            return self.B[j - 1]
        if self.B_sup is not None:
            raise StabilizationError(f"B_{j} lies in a non-stabilized tail")
        return self.B[-1]

    def sup(self, which: str):
        seq, s = (self.A, self.A_sup) if which == "A" else (self.B, self.B_sup)
        return (s, False) if s is not None else (seq[-1], True)

    def stabilization_index(self) -> int:
        """Smallest ``s`` with ``A_k = A_s`` and ``B_k = B_s`` for all ``k >= s``."""
        if not self.stabilized:
            raise StabilizationError("parameters do not stabilize")

        def first_stable(seq):
            s = len(seq)
            while s > 1 and seq[s - 2] == seq[-1]:
                s -= 1
            return s

        return max(first_stable(self.A), first_stable(self.B))

    def to_json(self) -> dict:
        out = {"A": [_ext_str(x) for x in self.A], "B": [_ext_str(x) for x in self.B]}
        if self.A_sup is not None:
            out["A_sup"] = _ext_str(self.A_sup)
        if self.B_sup is not None:
            out["B_sup"] = _ext_str(self.B_sup)
        return out

    @classmethod
    def from_json(cls, obj, path=None) -> "TropParams":
        if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
            raise ConfigError("expected an object with keys 'A' and 'B'", path=path)
        try:
            return cls(tuple(obj["A"]), tuple(obj["B"]), obj.get("A_sup"), obj.get("B_sup"))
        except (ValueError, TypeError) as exc:
            raise ConfigError(str(exc), path=path) from exc


def _dominated(X: TropParams, first: str) -> bool:
    """Every term of sequence ``first`` is bounded by some term of the other."""
    other = "B" if first == "A" else "A"
    s1, att1 = X.sup(first)
    s2, att2 = X.sup(other)
    if att2:
        return s1 <= s2
    return s1 < s2 or (s1 == s2 and not att1)


def _min_finite(tp: TropParams) -> bool:
    k_max = max(len(tp.A), len(tp.B)) + 1
    for k in range(1, k_max + 1):
        a = tp.A[k - 1] if k <= len(tp.A) else (tp.A[-1] if tp.A_sup is None else -math.inf)
        b = tp.B[k - 1] if k <= len(tp.B) else (tp.B[-1] if tp.B_sup is None else -math.inf)
        if min(a, b) == math.inf:
            return False
    return True


def is_weakly_interlacing(tp: TropParams) -> bool:
    return tp.sup("A")[0] == tp.sup("B")[0] and _min_finite(tp)


def is_interlacing(tp: TropParams) -> bool:
    return _dominated(tp, "A") and _dominated(tp, "B") and _min_finite(tp)


def trop_E(tp: TropParams, i_max: int, j_max: int) -> dict:
    """Window ``M_ij = min(A_i, B_j)``, ``1 <= i <= i_max``, ``1 <= j <= j_max``."""
    return {(i, j): min(tp.a(i), tp.b(j))
            for i in range(1, i_max + 1) for j in range(1, j_max + 1)}


def is_min_ideal_window(M: dict, i_max: int, j_max: int) -> bool:
    return all(M[(i, j)] == min(M[(i + 1, j)], M[(i, j + 1)])
               for i in range(1, i_max) for j in range(1, j_max))


def trop_E_inverse(M: dict, i_max: int, j_max: int, margin: int = 1) -> TropParams:
    """Read ``A_i`` off the stable value of row ``i`` and ``B_j`` off column
    ``j``; the last ``margin + 1`` entries of each row and column must agree."""
    if margin < 1 or margin >= min(i_max, j_max):
        raise ValueError("margin must be at least 1 and smaller than the window")
    for i in range(1, i_max + 1):
        tail = {M[(i, j)] for j in range(j_max - margin, j_max + 1)}
        if len(tail) != 1:
            raise StabilizationError(f"row {i} has not stabilized in the window")
    for j in range(1, j_max + 1):
        tail = {M[(i, j)] for i in range(i_max - margin, i_max + 1)}
        if len(tail) != 1:
            raise StabilizationError(f"column {j} has not stabilized in the window")
    A = tuple(M[(i, j_max)] for i in range(1, i_max + 1))
    B = tuple(M[(i_max, j)] for j in range(1, j_max + 1))
    return TropParams(A, B)


def truncation_filling(tp: TropParams, n: int) -> MinIdealFilling:
    return MinIdealFilling(n, {(i, j): min(tp.a(i), tp.b(j)) for (i, j) in cells(n)})


def trop_asymptotics(tp: TropParams, n: int, i_list: Sequence[int] = (),
                     j_list: Sequence[int] = ()) -> dict:
    """Normalized weights of the rank-``n`` truncation of ``E(A, B)``:
    ``lambda_i / n`` for ``i`` in ``i_list`` and ``-lambda_{n+2-j} / n`` for
    ``j`` in ``j_list``. Only the rows and columns involved are touched."""
    M = lambda i, j: min(tp.a(i), tp.b(j))
    out = {}
    for i in i_list:
        out[("A", i)] = weight_of(M, n, i) / n
    for j in j_list:
        out[("B", j)] = -weight_of(M, n, n + 2 - j) / n
    return out


# -- detropicalization ------------------------------------------------------

def leading_params(tp: TropParams, L: int, coeffs_a=None, coeffs_b=None):
    """``alpha_k = a_k t^{A_k}``, ``beta_k = b_k t^{B_k}`` for ``k <= L``."""
    ca = coeffs_a or ()
    cb = coeffs_b or ()
    alpha = [LeadingTerm(tp.a(k), ca[k - 1] if k <= len(ca) else 1) for k in range(1, L + 1)]
    beta = [LeadingTerm(tp.b(k), cb[k - 1] if k <= len(cb) else 1) for k in range(1, L + 1)]
    return alpha, beta


def detrop_value(tp: TropParams, i: int, j: int, L: int, coeffs_a=None, coeffs_b=None) -> LeadingTerm:
    alpha, beta = leading_params(tp, L, coeffs_a, coeffs_b)
    return m_closed_semifield(i, j, alpha, beta)


def detrop_check(tp: TropParams, i: int, j: int, L: int, coeffs_a=None, coeffs_b=None) -> bool:
    """``val(m_ij) == min(A_i, B_j)`` over the leading-term semifield, with the
    valuation confirmed identical at truncations ``L`` and ``L + 1``.

    Only the valuation is compared across truncations: terms beyond ``L``
    may share the tail valuation and then shift the leading coefficient.
    """
    m_L = detrop_value(tp, i, j, L, coeffs_a, coeffs_b)
    m_L1 = detrop_value(tp, i, j, L + 1, coeffs_a, coeffs_b)
    if val(m_L) != val(m_L1):
        raise StabilizationError(f"val(m_{i}{j}) changes between truncations {L} and {L + 1}")
    return val(m_L) == min(tp.a(i), tp.b(j))
