"""Matrix coefficients of SU(1,1): exact Laurent-polynomial closed forms
for the (limits of) discrete series, numeric evaluation for the continuous
series, a contour-integral oracle, ladder/multiplication identities, Lie
algebra actions and regular-spinor builders.

Index convention: t^l with row index n and column index m (written
t^l_{n, m} here); both live in Z + l.  Holomorphic discrete cone:
m, n >= -l with l in {-1/2, -1, -3/2, ...}; antiholomorphic: m, n <= l.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _core
from .algebra import Biquaternion
from .errors import BranchAmbiguity, Nonconvergent, OutsideDomain, WrongSeries
from .halfint import HalfInt
from .laurent import LaurentPoly, QQi
from .specfun import frakP, gamma_ratio2, gamma_ratio_int

__all__ = [
    "SeriesLabel",
    "CoeffIndex",
    "coeff_poly",
    "coeff_poly_or_zero",
    "coeff_eval",
    "coeff_contour_oracle",
    "ladder_apply",
    "lie_action",
    "regular_builder",
    "degree_recursion_solve",
    "verify_relations",
    "nabla_plus_left",
    "nabla_plus_right",
]


# ----------------------------------------------------------------------
# index bookkeeping
# ----------------------------------------------------------------------

HOLO = "HoloDiscrete"
ANTI = "AntiHoloDiscrete"
LIMIT_HOLO = "LimitHolo"
LIMIT_ANTI = "LimitAntiHolo"
CONTINUOUS = "Continuous"
GENERIC = "Generic"


@dataclass(frozen=True)
class SeriesLabel:
    tag: str
    lam: float = 0.0  # spectral parameter for the continuous series
    parity: str = ""  # "integer" or "half-integer" for the continuous series

    @property
    def is_discrete_family(self) -> bool:
        return self.tag in (HOLO, ANTI, LIMIT_HOLO, LIMIT_ANTI)


@dataclass(frozen=True)
class CoeffIndex:
    """Index (l, n, m) of a matrix coefficient plus its series label.

    l is stored as a complex number; for the discrete families it is an
    exact half-integer (validated), for the continuous series it equals
    -1/2 + i*lambda.
    """

    l: complex
    n: HalfInt
    m: HalfInt
    series: SeriesLabel

    @staticmethod
    def make(l, n, m) -> "CoeffIndex":
        """Classify (l, n, m); l may be a half-integer or -1/2 + i lambda."""
        n = HalfInt.of(n)
        m = HalfInt.of(m)
        if not n.same_parity(m):
            raise WrongSeries(f"n = {n} and m = {m} differ in parity")
        lc = complex(l)
        if abs(lc.imag) > 1e-14:
            if abs(lc.real + 0.5) > 1e-12:
                return CoeffIndex(lc, n, m, SeriesLabel(GENERIC))
            parity = "integer" if n.is_integer else "half-integer"
            return CoeffIndex(lc, n, m, SeriesLabel(CONTINUOUS, lc.imag, parity))
        try:
            lh = HalfInt.of(lc.real)
        except ValueError:
            return CoeffIndex(lc, n, m, SeriesLabel(GENERIC))
        if lh.doubled > -1 or not lh.same_parity(m):
            return CoeffIndex(complex(lh), n, m, SeriesLabel(GENERIC))
        if m >= -lh and n >= -lh:
            tag = LIMIT_HOLO if lh.doubled == -1 else HOLO
            return CoeffIndex(complex(lh), n, m, SeriesLabel(tag))
        if m <= lh and n <= lh:
            tag = LIMIT_ANTI if lh.doubled == -1 else ANTI
            return CoeffIndex(complex(lh), n, m, SeriesLabel(tag))
        return CoeffIndex(complex(lh), n, m, SeriesLabel(GENERIC))

    @property
    def l_half(self) -> HalfInt:
        return HalfInt.of(Fraction(self.l.real))

    def __repr__(self):
        return f"t[l={self.l:g}, n={self.n}, m={self.m}; {self.series.tag}]"


def _gen_binom(top: int, k: int) -> int:
    """Generalized binomial C(top, k) for integer top (possibly negative)."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= top - j
    return num // math.factorial(k)  # falling factorial is divisible by k!


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def coeff_poly(idx: CoeffIndex) -> LaurentPoly:
    """Exact Laurent polynomial of a (limit-of-)discrete series coefficient."""
    if not idx.series.is_discrete_family:
        raise WrongSeries(f"{idx} has no polynomial closed form")
    l = idx.l_half
    if idx.series.tag in (HOLO, LIMIT_HOLO):
        return _holo_poly(l, idx.n, idx.m)
    return _anti_poly(l, idx.n, idx.m)


def coeff_poly_or_zero(l, n, m) -> LaurentPoly:
    """Polynomial form, extended by the vanishing rule outside the cones.

    For half-integer l <= -1/2 the coefficient vanishes identically when
    (m >= -l and n < -l) or (m <= l and n > l); indices in the open strip
    for both slots have no polynomial form and raise WrongSeries.
    """
    idx = CoeffIndex.make(l, n, m)
    if idx.series.is_discrete_family:
        return coeff_poly(idx)
    lh = HalfInt.of(l)
    n, m = HalfInt.of(n), HalfInt.of(m)
    if (m >= -lh and n < -lh) or (m <= lh and n > lh):
        return LaurentPoly.zero()
    raise WrongSeries(f"t[l={lh}, n={n}, m={m}] is not polynomial")


def _holo_poly(l: HalfInt, n: HalfInt, m: HalfInt) -> LaurentPoly:
    lm = (l - m).as_int()  # l - m <= -1
    lpm = (l + m).as_int()  # l + m >= 0
    ln = (l + n).as_int()  # l + n >= 0
    mn = (m - n).as_int()
    terms = {}
    for r in range(max(0, -mn), ln + 1):
        c = _gen_binom(lpm, r + mn) * _gen_binom(lm, r)
        if c == 0:
            continue
        expo = (lm - r, r + mn, r, ln - r)
        terms[expo] = QQi(c)
    return LaurentPoly(terms)


def _anti_poly(l: HalfInt, n: HalfInt, m: HalfInt) -> LaurentPoly:
    lm = (l - m).as_int()  # l - m >= 0
    lpm = (l + m).as_int()  # l + m <= -1
    ln = (l - n).as_int()  # l - n >= 0
    mn = (m + n).as_int()
    terms = {}
    for r in range(0, min(lm, ln) + 1):
        c = _gen_binom(lm, r) * _gen_binom(lpm, ln - r)
        if c == 0:
            continue
        expo = (r, ln - r, lm - r, mn + r)
        terms[expo] = QQi(c)
    return LaurentPoly(terms)


def coeff_eval(idx: CoeffIndex, Z: Biquaternion, tol: float = 1e-12) -> complex:
    """Evaluate t^l_{n, m} at Z.

    Discrete families: rational-function evaluation anywhere the Laurent
    polynomial is finite.  Continuous/generic l: Z must lie in the open
    cone of split quaternions with N(Z) > 0, where the coefficient extends
    from SU(1,1) with homogeneity degree 2l.
    """
    if idx.series.is_discrete_family:
        try:
            return coeff_poly(idx).evaluate(Z)
        except ZeroDivisionError as exc:
            raise OutsideDomain("pole of the Laurent polynomial") from exc
    nz = Z.quad_norm()
    if not Z.in_split_form(1e-9 * (1 + Z.hnorm())):
        raise OutsideDomain("continuous-series evaluation needs Z in the split form")
    if abs(nz.imag) > tol * (1 + abs(nz)) or nz.real <= 0:
        raise OutsideDomain("continuous-series evaluation needs N(Z) > 0")
    scale = math.sqrt(nz.real)
    x11 = Z.z11 / scale
    x12 = Z.z12 / scale
    nf, mf = float(idx.n), float(idx.m)
    cosh_half = abs(x11)
    alpha = cmath.phase(x11)
    beta = cmath.phase(x12) if abs(x12) > 1e-300 else 0.0
    cosh_tau = max(1.0, 2 * cosh_half * cosh_half - 1)
    phase = cmath.exp(-1j * ((nf + mf) * alpha + (nf - mf) * beta))
    return cmath.exp(idx.l * math.log(nz.real)) * phase * frakP(
        idx.l, idx.n, idx.m, cosh_tau
    )


def coeff_contour_oracle(idx: CoeffIndex, Z: Biquaternion, tol: float = 1e-11) -> complex:
    """Independent contour-integral evaluation on SU(1,1), trapezoid rule
    with node doubling until the Cauchy difference drops below tol."""
    if not Z.in_su11(1e-9):
        raise OutsideDomain("contour oracle requires Z in SU(1,1)")
    nodes = 64
    prev = None
    while nodes <= 1 << 22:
        try:
            val = _core.contour_t(
                idx.l, float(idx.m), float(idx.n), Z.z11, Z.z12, Z.z21, Z.z22, nodes
            )
        except ArithmeticError as exc:
            raise BranchAmbiguity(str(exc)) from exc
        if prev is not None and abs(val - prev) < tol * max(1.0, abs(val)):
            return val
        prev = val
        nodes *= 2
    raise Nonconvergent("contour oracle did not converge")


# ----------------------------------------------------------------------
# ladder (derivative) relations
# ----------------------------------------------------------------------

_LADDER = {
    "d11": (("l-m"), (1, 1)),
    "d12": (("l+m"), (1, -1)),
    "d21": (("l-m"), (-1, 1)),
    "d22": (("l+m"), (-1, -1)),
}


def ladder_apply(idx: CoeffIndex, which: str):
    """d/dz_ij t^l_{n, m} = factor * t^{l-1/2}_{n', m'}.

    Returns (factor, new_index); new_index is None when the factor is 0.
    """
    kind, (dn, dm) = _LADDER[which]
    lf = idx.l
    factor = lf - float(idx.m) if kind == "l-m" else lf + float(idx.m)
    new_n = idx.n + HalfInt(dn)
    new_m = idx.m + HalfInt(dm)
    if factor == 0:
        return 0j, None
    return factor, CoeffIndex.make(lf - 0.5, new_n, new_m)


# ----------------------------------------------------------------------
# Lie algebra actions on Laurent polynomials
# ----------------------------------------------------------------------

def _var_matrix():
    v = LaurentPoly.variable
    return [[v("z11"), v("z12")], [v("z21"), v("z22")]]


def _mat_mul(A, B):
    out = [[LaurentPoly.zero(), LaurentPoly.zero()], [LaurentPoly.zero(), LaurentPoly.zero()]]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out[i][j] = out[i][j] + A[i][k] * B[k][j]
    return out


def _mat_tr(A):
    return A[0][0] + A[1][1]


def _const_mat(E):
    return [[LaurentPoly.constant(E[i][j]) for j in range(2)] for i in range(2)]


def lie_action(slot: str, unit: tuple[int, int], action: str, p: LaurentPoly) -> LaurentPoly:
    """Exact action of a block basis element of gl(2, H_C) on a polynomial.

    `slot` in {"A", "B", "C", "D"} selects the 2x2 block, `unit` = (i, j)
    the elementary matrix inside the block, `action` one of "pi_l0",
    "pi_r0", "rho1".
    """
    E = [[0, 0], [0, 0]]
    E[unit[0]][unit[1]] = 1
    Ep = _const_mat(E)
    X = _var_matrix()
    trE = LaurentPoly.constant(E[0][0] + E[1][1])

    if slot == "B":
        return -p.dphi(Ep)
    if slot == "A":
        out = -p.dphi(_mat_mul(Ep, X))
        if action in ("pi_r0", "rho1"):
            out = out - trE * p
        return out
    if slot == "C":
        xcx = _mat_mul(X, _mat_mul(Ep, X))
        trcx = _mat_tr(_mat_mul(Ep, X))
        out = p.dphi(xcx) + trcx * p
        if action == "rho1":
            out = out + trcx * p
        return out
    if slot == "D":
        out = p.dphi(_mat_mul(X, Ep))
        if action in ("pi_l0", "rho1"):
            out = out + trE * p
        return out
    raise ValueError(f"unknown block slot {slot!r}")


def mobius_monomial_pullback(c, d, p: LaurentPoly) -> LaurentPoly:
    """pi_l^0(h) p for group elements whose N(cZ + d) is a single monomial.

    c, d are the biquaternion blocks of h^{-1}; p must be a constant here
    (enough for the Cayley-type generators used in the tests).
    """
    if list(p.terms) != [(0, 0, 0, 0)]:
        raise ValueError("only constant inputs are supported")
    const = p.terms[(0, 0, 0, 0)]
    cz_d = [
        [
            LaurentPoly.variable("z11").scale(c.z11)
            + LaurentPoly.variable("z21").scale(c.z12)
            + LaurentPoly.constant(d.z11),
            LaurentPoly.variable("z12").scale(c.z11)
            + LaurentPoly.variable("z22").scale(c.z12)
            + LaurentPoly.constant(d.z12),
        ],
        [
            LaurentPoly.variable("z11").scale(c.z21)
            + LaurentPoly.variable("z21").scale(c.z22)
            + LaurentPoly.constant(d.z21),
            LaurentPoly.variable("z12").scale(c.z21)
            + LaurentPoly.variable("z22").scale(c.z22)
            + LaurentPoly.constant(d.z22),
        ],
    ]
    n_poly = cz_d[0][0] * cz_d[1][1] - cz_d[0][1] * cz_d[1][0]
    if len(n_poly.terms) != 1:
        raise ValueError("N(cZ+d) is not a monomial; symbolic pullback unsupported")
    (expo, coeff), = n_poly.terms.items()
    inv_expo = tuple(-e for e in expo)
    if inv_expo[1] < 0 or inv_expo[2] < 0:
        raise ValueError("monomial inverse leaves the Laurent ring")
    return LaurentPoly.monomial(inv_expo, const / coeff)


# ----------------------------------------------------------------------
# regular spinors and the Dirac operator
# ----------------------------------------------------------------------

def nabla_plus_left(f1: LaurentPoly, f2: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """nabla^+ applied to a column (f1; f2), up to the overall factor 2."""
    return (
        f1.partial("z22") - f2.partial("z21"),
        -f1.partial("z12") + f2.partial("z11"),
    )


def nabla_plus_right(g1: LaurentPoly, g2: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """(g1, g2) nabla^+ for a row, up to the overall factor 2."""
    return (
        g1.partial("z22") - g2.partial("z12"),
        -g1.partial("z21") + g2.partial("z11"),
    )


def ninv_t_at_inverse_poly(l, a, b) -> LaurentPoly:
    """Exact polynomial of N(Z)^{-1} t^l_{a, b}(Z^{-1}) for half-integer l.

    Uses Z^{-1} = Z^+/N and homogeneity 2l: the result is
    N^{-2l-1} * [t^l_{a, b} after the Z -> Z^+ substitution], which stays in
    the Laurent ring because -2l-1 >= 0.
    """
    lh = HalfInt.of(l)
    power = int(round(-2 * float(lh) - 1))
    if power < 0:
        raise WrongSeries("N^{-1} t(Z^{-1}) leaves the Laurent ring for l > -1/2")
    base = substitute_z_plus(coeff_poly_or_zero(lh, a, b))
    npow = LaurentPoly.constant(1)
    det = LaurentPoly.det()
    for _ in range(power):
        npow = npow * det
    return npow * base


def regular_builder(l, n, m, chirality: str, position: str):
    """The regular spinors built from matrix coefficients.

    chirality "left" gives S-valued columns, "right" S'-valued rows;
    position "infinity-regular" the t(Z)-built family (quasi-regular at
    infinity), "origin-regular" the N^{-1} t(Z^{-1})-built one.  Returns a
    pair of (factor, CoeffIndex, LaurentPoly) triples, one per component;
    the polynomial includes the factor.
    """
    lh = HalfInt.of(l)
    n = HalfInt.of(n)
    m = HalfInt.of(m)
    half = HalfInt(1)

    def entry(lv, nv, mv, factor):
        # a vanishing prefactor kills the component outright (the index may
        # then fall in the non-polynomial strip)
        if factor == 0:
            return factor, None, LaurentPoly.zero()
        poly = coeff_poly_or_zero(lv, nv, mv).scale(QQi(factor))
        return factor, CoeffIndex.make(complex(float(lv)), nv, mv), poly

    def inv_entry(lv, nv, mv, factor):
        if factor == 0:
            return factor, None, LaurentPoly.zero()
        poly = ninv_t_at_inverse_poly(lv, nv, mv).scale(QQi(factor))
        return factor, CoeffIndex.make(complex(float(lv)), nv, mv), poly

    lf = Fraction(lh.as_fraction())
    if chirality == "left" and position == "infinity-regular":
        return (
            entry(lh, n, m + half, lf - m.as_fraction() + Fraction(1, 2)),
            entry(lh, n, m - half, lf + m.as_fraction() + Fraction(1, 2)),
        )
    if chirality == "left" and position == "origin-regular":
        return (
            inv_entry(lh, n - half, m, lf - n.as_fraction() + Fraction(1, 2)),
            inv_entry(lh, n + half, m, lf + n.as_fraction() + Fraction(1, 2)),
        )
    if chirality == "right" and position == "infinity-regular":
        lm = lh - half
        return (
            entry(lm, m + half, n, Fraction(1)),
            entry(lm, m - half, n, Fraction(1)),
        )
    if chirality == "right" and position == "origin-regular":
        lp = lh + half
        return (
            inv_entry(lp, m, n - half, Fraction(1)),
            inv_entry(lp, m, n + half, Fraction(1)),
        )
    raise ValueError(f"unknown chirality/position {chirality!r}/{position!r}")


# ----------------------------------------------------------------------
# degree-invariant recursion
# ----------------------------------------------------------------------

def degree_recursion_solve(D1: int, D2: int, D3: int, D4: int) -> LaurentPoly:
    """The (at most one-dimensional) space of harmonic elements of
    z11^{-1} C[z11^{-1}, z12, z21, z22] with the given degree invariant.

    Monomials are z11^{-r} z12^{D1+r} z21^{D2+r} z22^{D3-D1-r} for
    r = 1..D3-D1, with coefficients pinned by the two-term recursion; the
    boundary equation (D1+1)(D2+1) a_1 = 0 decides solvability.
    """
    from .errors import NoSolution

    if D1 + D4 != D2 + D3:
        raise NoSolution("degree invariant must satisfy D1 + D4 = D2 + D3")
    rmax = D3 - D1
    if rmax < 1:
        raise NoSolution("empty monomial family for this invariant")
    a = {rmax: Fraction(1)}
    for r in range(rmax, 1, -1):
        denom = (r - 1) * (D3 - D1 - r + 1)
        a[r - 1] = Fraction(-(D1 + r) * (D2 + r), denom) * a[r]
    if (D1 + 1) * (D2 + 1) * a[1] != 0:
        raise NoSolution("boundary equation obstructs a harmonic solution")
    terms = {}
    for r, coeff in a.items():
        if coeff == 0:
            continue
        expo = (-r, D1 + r, D2 + r, D3 - D1 - r)
        if expo[1] < 0 or expo[2] < 0:
            raise NoSolution("recursion leaves the Laurent ring")
        terms[expo] = QQi(coeff)
    sol = LaurentPoly(terms)
    if sol.is_zero():
        raise NoSolution("only the zero solution exists")
    return sol


# ----------------------------------------------------------------------
# relation checks
# ----------------------------------------------------------------------

def substitute_z_plus(p: LaurentPoly) -> LaurentPoly:
    """p(Z^+): z11 <-> z22 and sign flip on the off-diagonal entries."""
    out = {}
    for (a, b, c, d), coeff in p.terms.items():
        sign = (-1) ** (b + c)
        out[(d, b, c, a)] = coeff * sign
    return LaurentPoly(out)


def t_zplus_ratio(l, n, m):
    """Exact prefactor in t(Z^+) = ratio * t_{-m, -n}(Z) for half-integer l."""
    lh = HalfInt.of(l)
    n = HalfInt.of(n)
    m = HalfInt.of(m)
    num = [(lh - m + 1).as_int(), (lh + m + 1).as_int()]
    den = [(lh - n + 1).as_int(), (lh + n + 1).as_int()]
    return Fraction((-1) ** (m - n).as_int()) * gamma_ratio_int(num, den)


def verify_relations(idx: CoeffIndex, Z: Biquaternion | None = None) -> dict:
    """Residuals of the standing relations for the given index.

    Discrete families: exact symbolic checks (True/False); continuous
    series: float residuals at the supplied SU(1,1) point.
    """
    report: dict[str, object] = {}
    if idx.series.is_discrete_family:
        p = coeff_poly(idx)
        mirror = coeff_poly_or_zero(idx.l_half, -idx.m, -idx.n)
        ratio = t_zplus_ratio(idx.l_half, idx.n, idx.m)
        report["t(Z+) exact"] = substitute_z_plus(p) == mirror.scale(QQi(ratio))
        report["wave exact"] = p.wave_apply().is_zero()
        report["wave of inversion exact"] = p.inversion_map().wave_apply().is_zero()
    else:
        if Z is None:
            raise ValueError("continuous-series checks need an SU(1,1) point")
        lc = idx.l
        lhs = coeff_eval(idx, Z.conj_plus())
        ratio = (-1) ** int(round(float(idx.m - idx.n))) * gamma_ratio2(
            lc - float(idx.m) + 1, lc - float(idx.n) + 1
        ) * gamma_ratio2(lc + float(idx.m) + 1, lc + float(idx.n) + 1)
        rhs = ratio * coeff_eval(CoeffIndex.make(lc, -idx.m, -idx.n), Z)
        report["t(Z+) residual"] = abs(lhs - rhs)
        # N^{-1} t(Z^{-1}) = t^{conj l}_{-m, -n}(Z) at Re l = -1/2
        zinv = Z.inverse()
        lhs2 = coeff_eval(idx, zinv) / Z.quad_norm()
        rhs2 = coeff_eval(CoeffIndex.make(lc.conjugate(), -idx.m, -idx.n), Z)
        report["t(Z^-1) residual"] = abs(lhs2 - rhs2)
    return report


def multiplicativity_residual(idx: CoeffIndex, Z1: Biquaternion, Z2: Biquaternion,
                              k_extra: int = 24) -> float:
    """|t(Z1 Z2) - sum_k t_{n,k}(Z1) t_{k,m}(Z2)| with a truncated k-sum."""
    lh = idx.l_half
    target = coeff_eval(idx, Z1 * Z2)
    total = 0j
    if idx.series.tag in (HOLO, LIMIT_HOLO):
        ks = [-lh + HalfInt(2 * j) for j in range(k_extra)]
    else:
        ks = [lh - HalfInt(2 * j) for j in range(k_extra)]
    for k in ks:
        t1 = coeff_poly_or_zero(lh, idx.n, k).evaluate(Z1)
        t2 = coeff_poly_or_zero(lh, k, idx.m).evaluate(Z2)
        total += t1 * t2
    return abs(target - total)
