"""Verification suites behind ``thetares verify``.

Four suites: golden values (the two worked sequence entries with their
published numerator/denominator and residues), q-series identities,
resummation equivalence between the u-side and v-side computations, and
residue-vs-coefficient tables.  Each check is exact; a suite passes only
if every check does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import DELTA256, THETA, THETA2, THETA4, Family
from .qseries import (
    QSeries,
    cf_coeff,
    cf_series,
    delta_series,
    dstar,
    eval_poly,
    r2_count,
    ramanujan_tau,
    t_series,
    theta_series,
    u_series,
    xy_series,
)
from .rational import Poly
from .ratfunc import RatFunc, edge_factor
from .recurrence import (
    SeqState,
    rec_sequence,
    residue_report,
    resum_matrix,
    upoly_sequence,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


# Entry 4 of the 256*Delta family, as published: numerator
# 27072v^14 - 61968v^13 - 58736v^12 + 354148v^11 - 509744v^10 + 367158v^9
# - 152445v^8 + 38136v^7 - 5680v^6 + 464v^5 - 16v^4 over the expanded
# denominator below.  The printed pair is consistent with the residue
# data; note the expanded denominator equals MINUS the factored product
# (1-2v)^9 (1-4v)^5 (1-6v), whose constant term is +1, so in canonical
# factored form the numerator flips sign.
R4_NUM = Poly(
    [0, 0, 0, 0, -16, 464, -5680, 38136, -152445, 367158, -509744, 354148,
     -58736, -61968, 27072]
)
R4_DEN_EXPANDED = Poly(
    [-1, 44, -892, 11056, -93728, 575872, -2649984, 9303552, -25134336,
     52272128, -83037184, 98988032, -85753856, 50987008, -18612224, 3145728]
)
R4_FACTORS = ((2, 9), (4, 5), (6, 1))
Q11_FACTORS = ((1, 21), (4, 15), (9, 5))


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail if not passed else "")


def golden_suite(delta_seq: SeqState | None = None,
                 theta_seq: SeqState | None = None) -> list:
    delta_seq = delta_seq or rec_sequence(DELTA256, 4)
    delta_seq.extend_to(4)
    entry = delta_seq.entries[4]
    out = []

    product = edge_factor(2, 9) * edge_factor(4, 5) * edge_factor(6, 1)
    out.append(_result(
        "R4 published denominator equals -(1-2v)^9(1-4v)^5(1-6v)",
        R4_DEN_EXPANDED == -product,
    ))
    out.append(_result(
        "R4 equals its published numerator/denominator pair",
        entry.num * R4_DEN_EXPANDED == R4_NUM * product,
        f"entry 4 is {entry}",
    ))
    out.append(_result(
        "R4 factored denominator",
        entry.factors == R4_FACTORS,
        f"got {entry.factors}",
    ))
    out.append(_result(
        "R4 canonical numerator is the sign-flipped published one",
        entry.num == -R4_NUM,
    ))

    res = entry.residue(6)
    out.append(_result(
        "R4 residue at v=1/6 is -21/32768",
        res == Fraction(-21, 32768),
        f"got {res}",
    ))
    report = residue_report(delta_seq, 4)
    out.append(_result(
        "R4 recovered coefficient / 256 = 252 = tau(3)",
        report.recovered / 256 == 252 == ramanujan_tau(3),
        f"got {report.recovered / 256}",
    ))
    # principal part res/(v - 1/6) = -6*res/(1 - 6v); what remains is
    # regular at v = 1/6 and its value there is the Laurent constant
    laurent = entry - RatFunc(Poly([-6 * res]), [(6, 1)])
    out.append(_result(
        "R4 Laurent constant at v=1/6 is -2241/16384",
        laurent(Fraction(1, 6)) == Fraction(-2241, 16384),
        f"got {laurent(Fraction(1, 6))}",
    ))

    theta_seq = theta_seq or rec_sequence(THETA, 11)
    theta_seq.extend_to(11)
    out.append(_result(
        "Q11 denominator is (1-v)^21 (1-4v)^15 (1-9v)^5",
        theta_seq.entries[11].factors == Q11_FACTORS,
        f"got {theta_seq.entries[11].factors}",
    ))
    return out


def identities_suite(jacobi_trunc: int = 128, identity_trunc: int = 64,
                     three_term_trunc: int = 40, three_term_max: int = 6) -> list:
    out = []
    x, y = xy_series(jacobi_trunc)
    out.append(_result(
        f"Jacobi identity theta^4 = y - x (trunc {jacobi_trunc})",
        theta_series(3, jacobi_trunc) ** 4 == y - x,
    ))

    x, y = xy_series(identity_trunc)
    minus_half_xy = x * y * Fraction(-1, 2)
    out.append(_result(
        f"D*x = -xy/2 (trunc {identity_trunc})", dstar(x, 2) == minus_half_xy
    ))
    out.append(_result(
        f"D*y = -xy/2 (trunc {identity_trunc})", dstar(y, 2) == minus_half_xy
    ))
    t = t_series(identity_trunc)
    out.append(_result(
        f"t' identity: (1/2 pi i) t' = 2t^2 - xy/32 (trunc {identity_trunc})",
        t.halfdeg() == t * t * 2 - x * y * Fraction(1, 32),
    ))
    out.append(_result(
        f"discriminant = x^2 y^2 (y-x)^2 / 256 (trunc {identity_trunc})",
        delta_series(identity_trunc) == (x * y * (y - x)) ** 2 * Fraction(1, 256),
    ))

    for family, tag in ((Family.polynomial([(0, 1, 1)], label="P=y"), "P=y"),
                        (THETA2, "theta^2")):
        defect = max_three_term_defect(family, three_term_max, three_term_trunc)
        out.append(_result(
            f"three-term relation for {tag}, n <= {three_term_max} "
            f"(trunc {three_term_trunc})",
            not defect,
            f"nonzero defect {defect}",
        ))
    return out


def max_three_term_defect(family: Family, n_max: int, trunc: int) -> QSeries | None:
    """First nonzero defect of (n+1)(n+w) g_{n+1} + 2 D* g_n + xy g_{n-1}/4,
    where g_n is the weight-(w+2n) form attached to the n-th u-side
    polynomial; None when the relation holds for all n <= n_max."""
    phis = upoly_sequence(family, n_max + 1)
    x, y = xy_series(trunc)
    u = u_series(trunc)
    w = family.w

    if family.kind == "mult":
        base = cf_series(family, trunc)
        head = 0
    else:
        base = QSeries.const(1, trunc)
        head = family.k

    def g(n: int) -> QSeries:
        if n < 0:
            return QSeries.zero(trunc)
        return base * (x ** (n + head)) * eval_poly(phis[n], u)

    xy4 = x * y * Fraction(1, 4)
    for n in range(n_max + 1):
        defect = (
            g(n + 1) * ((n + 1) * (n + w))
            + dstar(g(n), w + 2 * n) * 2
            + xy4 * g(n - 1)
        )
        if defect:
            return defect
    return None


def resum_suite(families=(THETA2, DELTA256), m_max: int = 6, n_max: int = 12,
                seqs: dict | None = None) -> list:
    out = []
    for family in families:
        seq = (seqs or {}).get(family) or rec_sequence(family, m_max)
        seq.extend_to(m_max)
        matrix = resum_matrix(family, m_max, n_max)
        bad = []
        for m in range(m_max + 1):
            taylor = seq.entries[m].taylor(n_max)
            for i in range(n_max + 1):
                if matrix[m][i] != taylor[i]:
                    bad.append((m, i, matrix[m][i], taylor[i]))
        out.append(_result(
            f"resummation equivalence for {family} (m <= {m_max}, i <= {n_max})",
            not bad,
            f"first mismatch {bad[0]}" if bad else "",
        ))
    return out


def residues_suite(theta2_max: int = 30, other_max: int = 15,
                   seqs: dict | None = None) -> list:
    out = []
    seq = (seqs or {}).get(THETA2) or rec_sequence(THETA2, theta2_max)
    seq.extend_to(theta2_max)
    bad = []
    for m in range(1, theta2_max + 1):
        report = residue_report(seq, m)
        if report.pole_order > 1 or report.recovered != r2_count(m):
            bad.append((m, report.recovered, r2_count(m)))
    out.append(_result(
        f"theta^2 residues recover r2(m) for m <= {theta2_max}",
        not bad,
        f"first mismatch {bad[0]}" if bad else "",
    ))

    for family in (THETA4, THETA, DELTA256):
        seq = (seqs or {}).get(family) or rec_sequence(family, other_max)
        seq.extend_to(other_max)
        bad = []
        for m in range(1, other_max + 1):
            report = residue_report(seq, m)
            oracle = cf_coeff(family, report.pole)
            if report.recovered != oracle:
                bad.append((m, report.recovered, oracle))
        out.append(_result(
            f"{family} residues recover q-coefficients for m <= {other_max}",
            not bad,
            f"first mismatch {bad[0]}" if bad else "",
        ))
    return out


SUITES = {
    "golden": golden_suite,
    "identities": identities_suite,
    "resum": resum_suite,
    "residues": residues_suite,
}


def run_suite(name: str, **kwargs) -> list:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite(**kwargs)
