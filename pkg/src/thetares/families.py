"""Recurrence families.

A family fixes one modular form and with it every constant appearing in
the recurrences: either a monomial in the three theta fourth-powers,
F = y^a * (-x)^b * (y-x)^c with a, 4b, 4c nonnegative integers (the
"multiplicative" kind, weight w = 2(a+b+c)), or a homogeneous
polynomial P(x, y) of degree k (the "polynomial" kind, weight 2k).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .rational import Poly, Rat


class FamilyError(ValueError):
    """Family parameters outside the admissible shape."""


@dataclass(frozen=True)
class Family:
    kind: str  # "mult" or "poly"
    a: int = 0
    b4: int = 0  # 4*b
    c4: int = 0  # 4*c
    monomials: tuple = ()  # ((i, j, coeff), ...) with i + j = k
    k: int = 0
    label: str = field(default="", compare=False)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def multiplicative(a, b, c, label: str = "") -> "Family":
        if not isinstance(a, int) or a < 0:
            raise FamilyError("exponent a must be a nonnegative integer")
        b = Fraction(b)
        c = Fraction(c)
        if b < 0 or (4 * b).denominator != 1:
            raise FamilyError("4*b must be a nonnegative integer")
        if c < 0 or (4 * c).denominator != 1:
            raise FamilyError("4*c must be a nonnegative integer")
        if a == 0 and b == 0 and c == 0:
            raise FamilyError("a = b = c = 0 gives weight zero")
        return Family("mult", a=a, b4=int(4 * b), c4=int(4 * c), label=label)

    @staticmethod
    def polynomial(monomials, label: str = "") -> "Family":
        combined: dict = {}
        for i, j, coeff in monomials:
            if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
                raise FamilyError("monomial exponents must be nonnegative integers")
            combined[(i, j)] = combined.get((i, j), Fraction(0)) + Fraction(coeff)
        combined = {ij: c for ij, c in combined.items() if c}
        if not combined:
            raise FamilyError("polynomial has no nonzero monomial")
        degrees = {i + j for i, j in combined}
        if len(degrees) != 1:
            raise FamilyError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
        k = degrees.pop()
        if k < 1:
            raise FamilyError("polynomial degree must be at least 1")
        mons = tuple(sorted((i, j, c) for (i, j), c in combined.items()))
        return Family("poly", monomials=mons, k=k, label=label)

    # -- derived data ----------------------------------------------------------

    @property
    def b(self) -> Rat:
        return Fraction(self.b4, 4)

    @property
    def c(self) -> Rat:
        return Fraction(self.c4, 4)

    @property
    def w(self) -> Rat:
        """Weight: 2(a + b + c) for the multiplicative kind, 2k otherwise."""
        if self.kind == "mult":
            return Fraction(4 * self.a + self.b4 + self.c4, 2)
        return Fraction(2 * self.k)

    @property
    def beta(self) -> Rat:
        """The constant appearing in the (m - 1 - beta) term of the relation."""
        return self.b if self.kind == "mult" else Fraction(self.k)

    @property
    def alpha(self) -> int:
        """Constant term of the u-side multiplier (a for multiplicative)."""
        return self.a if self.kind == "mult" else 0

    def edge(self, m: int) -> int:
        """Pole parameter of the m-th entry: the factor divided out at step m
        is (1 - edge(m)*v)."""
        return m + self.alpha

    def p1u(self) -> Poly:
        """P(1, u) for the polynomial kind."""
        if self.kind != "poly":
            raise FamilyError("P(1, u) only exists for polynomial families")
        coeffs = [Fraction(0)] * (self.k + 1)
        for _i, j, c in self.monomials:
            coeffs[j] += c
        return Poly(coeffs)

    def phi0(self) -> Poly:
        """Initial u-side polynomial."""
        return Poly([1]) if self.kind == "mult" else self.p1u()

    def rhs(self, m: int) -> Rat:
        """Right-hand side of the m-th relation (after clearing the 1/v)."""
        if self.kind == "mult":
            return Fraction(1 if m == 0 else 0)
        return self.p1u().coeff(m)

    def weight_product(self, n: int) -> Rat:
        """prod_{t<n} (t+1)(t+w): the factorial weight of the n-th u-side term."""
        out = Fraction(1)
        for t in range(n):
            out *= (t + 1) * (t + self.w)
        return out

    def recovered_from_residue(self, m: int, residue: Rat) -> Rat:
        """Invert the residue identity: the q-expansion coefficient of the
        family's form at the pole parameter, from the residue of entry m."""
        p = self.edge(m)
        exp = (m + self.a + 1) if self.kind == "mult" else (m + self.k + 1)
        sign = -1 if exp % 2 else 1
        return sign * p * Fraction(16) ** p * residue

    # -- canonical string --------------------------------------------------------

    def canonical(self) -> str:
        if self.kind == "mult":
            return f"mult:{self.a},{self.b4},{self.c4}"
        inner = ",".join(f"({i},{j},{c})" for i, j, c in self.monomials)
        return f"poly:{self.k}:[{inner}]"

    def __str__(self) -> str:
        return self.label or self.canonical()


_POLY_RE = re.compile(r"^poly:(\d+):\[(.*)\]$")
_MONO_RE = re.compile(r"\((\d+),(\d+),(-?\d+(?:/\d+)?)\)")


def parse_family(text: str) -> Family:
    """Parse the canonical family string ("mult:a,4b,4c" or
    "poly:k:[(i,j,coeff),...]")."""
    text = text.strip()
    if text.startswith("mult:"):
        parts = text[5:].split(",")
        if len(parts) != 3:
            raise FamilyError(f"malformed multiplicative family {text!r}")
        try:
            a, b4, c4 = (int(p) for p in parts)
        except ValueError:
            raise FamilyError(f"malformed multiplicative family {text!r}") from None
        if b4 < 0 or c4 < 0:
            raise FamilyError("4*b and 4*c must be nonnegative integers")
        return Family.multiplicative(a, Fraction(b4, 4), Fraction(c4, 4))
    match = _POLY_RE.match(text)
    if match:
        k = int(match.group(1))
        mons = [
            (int(i), int(j), Fraction(c)) for i, j, c in _MONO_RE.findall(match.group(2))
        ]
        if not mons:
            raise FamilyError(f"malformed polynomial family {text!r}")
        family = Family.polynomial(mons)
        if family.k != k:
            raise FamilyError(f"declared degree {k} but monomials have degree {family.k}")
        return family
    raise FamilyError(f"unrecognized family string {text!r}")


# The four families behind the number-theoretic scans.
THETA2 = Family.multiplicative(0, 0, Fraction(1, 2), label="theta^2")
THETA = Family.multiplicative(0, 0, Fraction(1, 4), label="theta")
THETA4 = Family.multiplicative(0, 0, 1, label="theta^4")
DELTA256 = Family.multiplicative(2, 2, 2, label="256*Delta")
