"""The recurrences.

Two coupled computations per family:

* the v-side: rational functions e_0, e_1, ... where each step solves

      e_m (1 - (m+a)v) = rhs_m - v * G_m(e_{m-1}),
      G_m(e) = (m-1-beta) e - v e' + (w-1)/4 v (v e)' + 1/4 v (v (v e)')',

  so only a derivative, multiplications by v, and one exact division by
  the edge factor ever touch the denominator;

* the u-side: polynomials phi_0, phi_1, ... from a three-term relation,
  whose factorially weighted coefficients resum to the same numbers.

The pole of e_m at v = 1/(m+a) is at most simple, and its residue
recovers the q-expansion coefficient c(m+a) of the family's form up to
the sign (-1)^(m+a+1) and the factor (m+a) 16^(m+a).  The scans at the
bottom turn that into membership tests (sums of two squares, perfect
numbers, squares, vanishing of Ramanujan's tau).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .families import DELTA256, THETA, THETA2, THETA4, Family
from .rational import Poly, Rat
from .ratfunc import RatFunc

_V = Poly([0, 1])
_U2U = Poly([0, -1, 1])  # u^2 - u
_QUARTER = Fraction(1, 4)


class TheoryViolationError(ArithmeticError):
    """A computed entry has a pole that should be at most simple."""

    def __init__(self, family: Family, m: int, order: int):
        self.family = family
        self.m = m
        self.order = order
        super().__init__(
            f"entry {m} of family {family} has a pole of order {order} "
            f"at v = 1/{family.edge(m)}; at most a simple pole is possible"
        )


def _g_operator(family: Family, m: int, e: RatFunc) -> RatFunc:
    """(m-1-beta) e - v e' + (w-1)/4 v (v e)' + 1/4 v (v (v e)')'."""
    ve_d = (e * _V).diff()
    vve_d = (ve_d * _V).diff()
    out = e * (m - 1 - family.beta)
    out = out - e.diff() * _V
    w1 = (family.w - 1) / 4
    if w1:
        out = out + ve_d * _V * w1
    return out + vve_d * _V * _QUARTER


def rec_step(family: Family, m: int, prev: RatFunc | None = None) -> RatFunc:
    """The m-th entry of the family's v-side sequence.

    ``prev`` must be the (m-1)-th entry for m > 0 and absent for m = 0.
    """
    if m < 0:
        raise ValueError("sequence index must be nonnegative")
    if m == 0:
        if prev is not None:
            raise ValueError("the initial entry takes no previous entry")
        s = family.edge(0)
        return RatFunc(Poly([family.rhs(0)]), [(s, 1)] if s else [])
    if prev is None:
        raise ValueError(f"entry {m} needs entry {m - 1}")
    t = RatFunc.const(family.rhs(m)) - _g_operator(family, m, prev) * _V
    entry = t.divide_edge(family.edge(m))
    order = entry.pole_order(family.edge(m))
    if order > 1:
        raise TheoryViolationError(family, m, order)
    return entry


def relation_defect(family: Family, m: int, entry: RatFunc, prev: RatFunc | None) -> RatFunc:
    """v times the m-th relation, evaluated on a candidate pair; exactly
    zero iff the pair satisfies the recurrence.  Uses multiplication by
    the edge factor, the reverse of the division `rec_step` performs."""
    s = family.edge(m)
    lhs = entry * Poly([1, -s]) if s else entry
    if m > 0:
        lhs = lhs + _g_operator(family, m, prev) * _V
    return lhs - RatFunc.const(family.rhs(m))


@dataclass
class SeqState:
    """A computed prefix of one family's v-side sequence."""

    family: Family
    entries: list = field(default_factory=list)

    def extend_to(self, m_max: int) -> "SeqState":
        while len(self.entries) <= m_max:
            m = len(self.entries)
            prev = self.entries[-1] if m else None
            self.entries.append(rec_step(self.family, m, prev))
        return self


def rec_sequence(family: Family, m_max: int) -> SeqState:
    """Entries 0..m_max, computed in order."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    return SeqState(family).extend_to(m_max)


# -- the u-side -----------------------------------------------------------


def upoly_step(family: Family, n: int, phi_n: Poly, phi_prev: Poly) -> Poly:
    """phi_{n+1} from (n+1)(n+w) phi_{n+1} + (u^2-u) phi_n'
    - (alpha + (n+beta) u) phi_n + u phi_{n-1} / 4 = 0."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    num = phi_n * Poly([family.alpha, n + family.beta])
    num = num - phi_n.diff() * _U2U
    num = num - phi_prev.shift(1) * _QUARTER
    return num / ((n + 1) * (n + family.w))


def upoly_sequence(family: Family, n_max: int) -> list:
    """phi_0 .. phi_{n_max}."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    phis = [family.phi0()]
    prev = Poly()
    for n in range(n_max):
        phis.append(upoly_step(family, n, phis[-1], prev))
        prev = phis[-2]
    return phis


def resum_matrix(family: Family, m_max: int, n_max: int) -> list:
    """Coefficient of u^m v^i of the weighted double series
    sum_n weight(n) phi_n(u) v^n, as rows m <= m_max, columns i <= n_max.

    Column i only sees phi_i, since the v-power is attached to the
    weight; row m of the matrix must match the Taylor expansion of the
    m-th v-side entry.
    """
    phis = upoly_sequence(family, n_max)
    rows = [[Fraction(0)] * (n_max + 1) for _ in range(m_max + 1)]
    weight = Fraction(1)
    for i, phi in enumerate(phis):
        if i:
            weight *= i * (i - 1 + family.w)
        for m in range(m_max + 1):
            c = phi.coeff(m)
            if c:
                rows[m][i] = weight * c
    return rows


# -- residues and scans -------------------------------------------------------


@dataclass(frozen=True)
class ResidueReport:
    m: int
    pole: int  # pole parameter m + a
    pole_order: int
    residue: Rat
    recovered: Rat  # predicted q-expansion coefficient at the pole parameter


def residue_report(seq: SeqState, m: int) -> ResidueReport:
    """Pole data of entry m and the q-expansion coefficient it encodes."""
    if m < 1:
        raise ValueError("the residue identity applies for m >= 1")
    seq.extend_to(m)
    family = seq.family
    entry = seq.entries[m]
    pole = family.edge(m)
    order = entry.pole_order(pole)
    if order > 1:
        raise TheoryViolationError(family, m, order)
    res = entry.residue(pole)
    return ResidueReport(m, pole, order, res, family.recovered_from_residue(m, res))


def _seq_for(family: Family, m_max: int, seq: SeqState | None) -> SeqState:
    if seq is None:
        return rec_sequence(family, m_max)
    if seq.family != family:
        raise ValueError(f"scan needs the {family} family, got {seq.family}")
    return seq.extend_to(m_max)


def scan_two_squares(m_max: int, seq: SeqState | None = None) -> set:
    """n <= m_max whose theta^2 entry has a (simple) pole at v = 1/n;
    these are exactly the sums of two squares."""
    seq = _seq_for(THETA2, m_max, seq)
    return {n for n in range(1, m_max + 1) if seq.entries[n].pole_order(n) == 1}


def scan_squares(m_max: int, seq: SeqState | None = None) -> set:
    """m <= m_max whose theta entry has a pole at v = 1/m: the squares."""
    seq = _seq_for(THETA, m_max, seq)
    return {m for m in range(1, m_max + 1) if seq.entries[m].pole_order(m) == 1}


def scan_lehmer(m_max: int, seq: SeqState | None = None) -> list:
    """m <= m_max where the 256*Delta entry 2m has NO pole at v = 1/(2m+2).

    Each such m would be a counterexample witness tau(m+1) = 0; the list
    is expected to be empty.
    """
    seq = _seq_for(DELTA256, 2 * m_max, seq)
    return [m for m in range(m_max + 1) if seq.entries[2 * m].pole_order(2 * m + 2) == 0]


def check_perfect_odd(m_max: int, seq: SeqState | None = None) -> list:
    """(m, residue, is_perfect) for odd m <= m_max: the theta^4 entry's
    residue at v = 1/m equals 16^(1-m) exactly when m is a perfect number."""
    seq = _seq_for(THETA4, m_max, seq)
    out = []
    for m in range(1, m_max + 1, 2):
        res = seq.entries[m].residue(m)
        out.append((m, res, res == Fraction(1, 16 ** (m - 1))))
    return out
