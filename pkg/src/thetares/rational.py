"""Exact rationals and dense univariate polynomials over them.

``Rat`` is the stdlib :class:`fractions.Fraction`, which already
guarantees the canonical form everything here relies on: fully reduced,
positive denominator, zero stored as 0/1.  ``str``/``Fraction(str)``
give the wire format ("p/q", the "/q" omitted when q is 1).

A :class:`Poly` keeps its coefficients as integer numerators over one
shared positive denominator with gcd(content, denominator) = 1, so the
hot operations (convolution, synthetic division, root tests) run on
plain ints through :mod:`thetares.backend`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

from . import backend

Rat = Fraction


class NonDivisibleError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


def _as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _normalize(nums: list, den: int):
    """Canonical cleared form: trailing zeros stripped, den > 0,
    gcd(content, den) = 1; the zero polynomial is ((), 1)."""
    if den == 0:
        raise ZeroDivisionError("polynomial denominator is zero")
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den < 0:
        den = -den
        nums = [-c for c in nums]
    g = backend.content_gcd(nums, den)
    if g > 1:
        den //= g
        nums = [c // g for c in nums]
    return tuple(nums), den


class Poly:
    """Dense univariate polynomial over Rat; index = exponent.

    Immutable.  The stored coefficient list never has a trailing zero;
    the zero polynomial stores an empty list and reports degree -inf.
    """

    __slots__ = ("_nums", "_den")

    def __init__(self, coeffs: Iterable = ()):
        fracs = [_as_rat(c) for c in coeffs]
        if fracs:
            den = lcm(*(c.denominator for c in fracs))
            nums = [c.numerator * (den // c.denominator) for c in fracs]
        else:
            den, nums = 1, []
        self._nums, self._den = _normalize(nums, den)

    @classmethod
    def _make(cls, nums: tuple, den: int) -> "Poly":
        # caller promises canonical form
        p = object.__new__(cls)
        p._nums = nums
        p._den = den
        return p

    @classmethod
    def from_cleared(cls, nums, den: int) -> "Poly":
        """Build from integer numerators over a shared denominator."""
        p = object.__new__(cls)
        p._nums, p._den = _normalize(list(nums), den)
        return p

    @classmethod
    def from_strings(cls, strings) -> "Poly":
        return cls(Fraction(s) for s in strings)

    # -- inspection ------------------------------------------------------

    @property
    def int_coeffs(self) -> tuple:
        """Integer numerators over :attr:`int_den`."""
        return self._nums

    @property
    def int_den(self) -> int:
        return self._den

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(c, self._den) for c in self._nums)

    @property
    def degree(self):
        """Degree; -inf for the zero polynomial."""
        return len(self._nums) - 1 if self._nums else float("-inf")

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._nums):
            return Fraction(self._nums[i], self._den)
        return Fraction(0)

    def to_strings(self) -> list:
        return [str(c) for c in self.coeffs]

    def __bool__(self) -> bool:
        return bool(self._nums)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._nums == other._nums and self._den == other._den
        return NotImplemented

    def __hash__(self):
        return hash((self._nums, self._den))

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if not other._nums:
            return self
        if not self._nums:
            return other
        den = lcm(self._den, other._den)
        fa = den // self._den
        fb = den // other._den
        out = [c * fa for c in self._nums]
        bn = other._nums
        if len(bn) > len(out):
            out.extend([0] * (len(bn) - len(out)))
        for i in range(len(bn)):
            out[i] += bn[i] * fb
        return Poly.from_cleared(out, den)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly._make(tuple(-c for c in self._nums), self._den)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly.from_cleared(
                backend.conv(list(self._nums), list(other._nums)),
                self._den * other._den,
            )
        c = _as_rat(other)
        if not c or not self._nums:
            return Poly()
        return Poly.from_cleared(
            [n * c.numerator for n in self._nums], self._den * c.denominator
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        c = _as_rat(other)
        return self.__mul__(Fraction(c.denominator, c.numerator))

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    # -- calculus and evaluation ------------------------------------------

    def diff(self) -> "Poly":
        """Formal derivative."""
        return Poly.from_cleared(
            [i * c for i, c in enumerate(self._nums)][1:], self._den
        )

    def __call__(self, point) -> Fraction:
        """Exact evaluation (Horner on the cleared form)."""
        if not self._nums:
            return Fraction(0)
        r = _as_rat(point)
        rn, rd = r.numerator, r.denominator
        acc = 0
        rp = 1
        for c in reversed(self._nums):
            acc = acc * rn + c * rp
            rp *= rd
        return Fraction(acc, self._den * (rp // rd))

    def divexact_linear(self, j: int) -> "Poly":
        """Exact quotient by (1 - j*v); requires p(1/j) = 0."""
        if not isinstance(j, int) or j < 1:
            raise ValueError("factor index must be a positive integer")
        if not self._nums:
            return self
        q = backend.divexact_linear(list(self._nums), j)
        if q is None:
            raise NonDivisibleError(f"(1 - {j}v) does not divide the polynomial")
        return Poly.from_cleared(q, self._den)

    def shift(self, k: int) -> "Poly":
        """Multiply by v**k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0 or not self._nums:
            return self
        return Poly._make((0,) * k + self._nums, self._den)

    # -- printing ----------------------------------------------------------

    def to_str(self, var: str = "v") -> str:
        if not self._nums:
            return "0"
        parts = []
        for i in range(len(self._nums) - 1, -1, -1):
            c = self.coeff(i)
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}"
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly('{self.to_str()}')"
