"""Thoma characters of the infinite symmetric group and finite characters via
Murnaghan-Nakayama, with the Vershik-Kerov limit experiment."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .symfun import Partition, SchoenbergParams, edrei_expand, partitions


class CycleType(Partition):
    """Cycle lengths of a permutation, fixed points included."""

    @classmethod
    def transposition(cls, n: int) -> "CycleType":
        if n < 2:
            raise ValueError("a transposition needs n >= 2")
        return cls((2,) + (1,) * (n - 2))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls((1,) * n)

    def nontrivial(self) -> list:
        return [k for k in self if k > 1]


def class_size(ct: Sequence[int]) -> int:
    """``n! / prod_k k^{m_k} m_k!``."""
    ct = Partition(ct)
    denom = 1
    for k, mk in Counter(ct).items():
        denom *= k ** mk * math.factorial(mk)
    return math.factorial(ct.size) // denom


def cycle_types(n: int):
    return [CycleType(lam) for lam in partitions(n)]


def _power_sum(xs, k: int) -> Fraction:
    return sum((x ** k for x in xs), Fraction(0))


def thoma_value(p: SchoenbergParams, ct: Sequence[int]) -> Fraction:
    """Value of Thoma's extremal character on a permutation of cycle type ``ct``."""
    if not p.is_thoma_normalized:
        raise ValueError("Thoma characters need sum(alpha)+sum(beta)+gamma = 1")
    out = Fraction(1)
    for k in Partition(ct):
        if k > 1:
            out *= _power_sum(p.alpha, k) + (-1) ** (k + 1) * _power_sum(p.beta, k)
    return out


def thoma_average(p: SchoenbergParams, n: int) -> Fraction:
    """Average of the character over ``S_n``; equals ``c_n``."""
    total = sum((class_size(ct) * thoma_value(p, ct) for ct in cycle_types(n)), Fraction(0))
    return total / math.factorial(n)


# -- Murnaghan-Nakayama -----------------------------------------------------

def _beta_set(lam: tuple, length: int) -> tuple:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: tuple) -> tuple:
    b = sorted(beta, reverse=True)
    length = len(b)
    return tuple(p for p in (b[i] - (length - 1 - i) for i in range(length)) if p)


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam, len(lam))
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if t < x < b)
        new = tuple(x for x in beta if x != b) + (t,)
        total += sign * _mn(_from_beta(new), rest)
    return total


def mn_character_raw(lam: Sequence[int], ct: Sequence[int]) -> int:
    """Irreducible character ``chi_lam`` at cycle type ``ct`` (integer)."""
    lam, ct = Partition(lam), Partition(ct)
    if lam.size != ct.size:
        raise ValueError("shape and cycle type must have the same size")
    return _mn(tuple(lam), tuple(ct))


def mn_character(lam: Sequence[int], ct: Sequence[int]) -> Fraction:
    """Normalized character ``chi_lam(ct) / chi_lam(e)``."""
    lam = Partition(lam)
    return Fraction(mn_character_raw(lam, ct), lam.num_syt())


def content_transposition(lam: Sequence[int]) -> Fraction:
    """Normalized character at a transposition by the content formula."""
    lam = Partition(lam)
    n = lam.size
    s = sum(l * (l - 2 * i + 1) for i, l in enumerate(lam, start=1))
    return Fraction(s, n * (n - 1))


# -- Frobenius coordinates and the Vershik-Kerov experiment ---------------

@dataclass(frozen=True)
class FrobeniusCoords:
    a: tuple
    b: tuple

    @classmethod
    def of(cls, lam: Sequence[int]) -> "FrobeniusCoords":
        lam = Partition(lam)
        conj = lam.conjugate()
        d = sum(1 for i, l in enumerate(lam) if l > i)
        half = Fraction(1, 2)
        return cls(tuple(lam[i] - i - half for i in range(d)),
                   tuple(conj[j] - j - half for j in range(d)))

    @property
    def diagonal(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class ShapeRule:
    name: str
    shape: Callable[[int], Partition]
    limit: SchoenbergParams


SHAPE_RULES = {
    "row": ShapeRule("row", lambda n: Partition((n,)), SchoenbergParams((1,))),
    "two-row": ShapeRule("two-row", lambda n: Partition((n - n // 2, n // 2)),
                         SchoenbergParams((Fraction(1, 2), Fraction(1, 2)))),
    "hook": ShapeRule("hook", lambda n: Partition((n - n // 2,) + (1,) * (n // 2)),
                      SchoenbergParams((Fraction(1, 2),), (Fraction(1, 2),))),
}


def vk_experiment(rule: ShapeRule | str, ct_rule, n_list: Sequence[int]) -> list:
    """Normalized characters of ``rule.shape(n)`` at ``ct_rule(n)`` together
    with Frobenius ratios and the Thoma value at the limiting parameters."""
    if isinstance(rule, str):
        rule = SHAPE_RULES[rule]
    rows = []
    for n in n_list:
        lam = rule.shape(n)
        ct = ct_rule(n) if callable(ct_rule) else CycleType(tuple(ct_rule) + (1,) * (n - sum(ct_rule)))
        value = mn_character(lam, ct)
        target = thoma_value(rule.limit, ct)
        fc = FrobeniusCoords.of(lam)
        rows.append({"n": n, "shape": tuple(lam), "value": value, "target": target,
                     "abs_err": abs(value - target),
                     "a_ratios": tuple(x / n for x in fc.a),
                     "b_ratios": tuple(x / n for x in fc.b)})
    return rows


def thoma_check(p: SchoenbergParams, n: int) -> tuple:
    """``(thoma_average(p, n), c_n)``."""
    return thoma_average(p, n), edrei_expand(p, n)[-1]
