"""Scalar backends.

Three kinds of scalars are used throughout the package:

* exact rationals -- :class:`fractions.Fraction` (``gmpy2.mpq`` internally in
  the hot loops), never rounded;
* big floats -- :class:`mpmath.mpf` at a configurable working precision;
* :class:`LeadingTerm` -- the leading term ``coeff * t**val`` of a positive
  function, a semifield with valuation used for tropical computations.

All algebraic routines only need ``+``, ``*`` (and sometimes ``/``), so they
run unchanged over any of the three.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import gmpy2
import mpmath
from mpmath.libmp import from_rational

from .errors import ConfigError

DEFAULT_BITS = 256
MIN_BITS = 64

Rational = Fraction
Extended = Union[Fraction, float]  # float only ever holds math.inf


# -- exact rationals -------------------------------------------------------

def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions, mpq and rational strings ("p/q") to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    if type(x).__name__ == "mpq":
        return Fraction(int(x.numerator), int(x.denominator))
    if type(x).__name__ == "mpz":
        return Fraction(int(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def to_mpq(x) -> "gmpy2.mpq":
    if isinstance(x, Fraction):
        return gmpy2.mpq(x.numerator, x.denominator)
    return gmpy2.mpq(x)


def rational_str(x) -> str:
    """Render an exact rational as "p/q" (or "p" for integers)."""
    return str(as_fraction(x))


def parse_rational(s, *, path=None, field=None) -> Fraction:
    try:
        return as_fraction(s)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc), path=path, field=field) from exc


# -- big floats ------------------------------------------------------------

def check_bits(bits: int) -> int:
    if bits < MIN_BITS:
        raise ValueError(f"precision must be at least {MIN_BITS} bits, got {bits}")
    return int(bits)


@contextlib.contextmanager
def bigfloat(bits: int = DEFAULT_BITS):
    """Context manager setting the mpmath working precision to ``bits``."""
    with mpmath.workprec(check_bits(bits)):
        yield


def to_bigfloat(x) -> mpmath.mpf:
    """Round an exact rational to the current working precision (single
    correctly-rounded step)."""
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, float):
        return mpmath.mpf(x)
    q = as_fraction(x)
    return mpmath.mpf(from_rational(q.numerator, q.denominator, mpmath.mp.prec, "n"))


# -- leading-term semifield ------------------------------------------------

@dataclass(frozen=True)
class LeadingTerm:
    """Leading term ``coeff * t**val`` of a positive function of ``t -> 0``.

    Addition keeps the lower valuation (adding coefficients on ties, so
    nothing ever cancels); multiplication adds valuations.
    """

    val: Extended
    coeff: Fraction

    def __post_init__(self):
        if self.val == math.inf:
            if self.coeff != 0:
                raise ValueError("the zero element must have coefficient 0")
            return
        object.__setattr__(self, "val", as_fraction(self.val))
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if self.coeff <= 0:
            raise ValueError("leading coefficients are strictly positive")

    @property
    def is_zero(self) -> bool:
        return self.val == math.inf

    def __add__(self, other: "LeadingTerm") -> "LeadingTerm":
        if not isinstance(other, LeadingTerm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.val < other.val:
            return self
        if other.val < self.val:
            return other
        return LeadingTerm(self.val, self.coeff + other.coeff)

    def __mul__(self, other: "LeadingTerm") -> "LeadingTerm":
        if not isinstance(other, LeadingTerm):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LT_ZERO
        return LeadingTerm(self.val + other.val, self.coeff * other.coeff)

    def __truediv__(self, other: "LeadingTerm") -> "LeadingTerm":
        if not isinstance(other, LeadingTerm):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero leading term")
        if self.is_zero:
            return LT_ZERO
        return LeadingTerm(self.val - other.val, self.coeff / other.coeff)

    def __pow__(self, k: int) -> "LeadingTerm":
        if k < 0:
            return LT_ONE / (self ** (-k))
        if k == 0:
            return LT_ONE
        if self.is_zero:
            return LT_ZERO
        return LeadingTerm(self.val * k, self.coeff ** k)

    def __repr__(self):
        if self.is_zero:
            return "LeadingTerm.ZERO"
        return f"LeadingTerm({self.val}, {self.coeff})"

    def to_json(self) -> dict:
        if self.is_zero:
            return {"val": "inf", "coeff": "0"}
        return {"val": rational_str(self.val), "coeff": rational_str(self.coeff)}

    @classmethod
    def from_json(cls, obj) -> "LeadingTerm":
        if obj.get("val") == "inf":
            return LT_ZERO
        return cls(as_fraction(obj["val"]), as_fraction(obj["coeff"]))


LT_ZERO = LeadingTerm(math.inf, Fraction(0))
LT_ONE = LeadingTerm(Fraction(0), Fraction(1))


def val(a: LeadingTerm) -> Extended:
    """Valuation: a semiring homomorphism to (R u {inf}, min, +)."""
    return a.val


# -- generic semiring helpers ---------------------------------------------

def units_for(sample) -> tuple:
    """(zero, one) of the semiring that ``sample`` belongs to."""
    if isinstance(sample, LeadingTerm):
        return LT_ZERO, LT_ONE
    if isinstance(sample, mpmath.mpf):
        return mpmath.mpf(0), mpmath.mpf(1)
    if type(sample).__name__ == "mpq":
        return gmpy2.mpq(0), gmpy2.mpq(1)
    return Fraction(0), Fraction(1)


def is_zero(x) -> bool:
    if isinstance(x, LeadingTerm):
        return x.is_zero
    return x == 0


def semiring_sum(xs: Iterable, zero):
    total = zero
    for x in xs:
        total = total + x
    return total


def semiring_prod(xs: Iterable, one):
    total = one
    for x in xs:
        total = total * x
    return total
