"""Tagged spectral functions: finite linear combinations of matrix-
coefficient basis elements with analytically known homogeneity.

Tags on the split-form side:

    ("t", idx)            t^l_{n, m}(Z),                degree 2l
    ("ninv_t", idx)       N(Z)^{-2l-1} t^l_{n, m}(Z),   degree -2l-2
    ("n_pow_t", idx, k)   N(Z)^k t^l_{n, m}(Z),         degree 2k+2l

and on the Minkowski side ("f_plus"/"f_minus", l, m, n) for the harmonic
basis of degrees n-1 and -(n+1).  Angular behavior on the hyperboloids is
a single Fourier mode per tag, which the projector engines exploit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Biquaternion
from .coeffs import CoeffIndex, coeff_eval, coeff_poly
from .errors import WrongSeries
from .halfint import HalfInt
from .specfun import frakP_array, legendre_p, spherical_y

__all__ = ["SpectralFunction", "t_term", "ninv_t_term", "n_pow_t_term",
           "f_plus_term", "f_minus_term", "minkowski_basis", "gauss_wave_packet"]


def t_term(l, n, m, weight=1.0):
    return SpectralFunction([(complex(weight), ("t", CoeffIndex.make(l, n, m)))])


def ninv_t_term(l, n, m, weight=1.0):
    return SpectralFunction([(complex(weight), ("ninv_t", CoeffIndex.make(l, n, m)))])


def n_pow_t_term(l, n, m, k, weight=1.0):
    return SpectralFunction([(complex(weight), ("n_pow_t", CoeffIndex.make(l, n, m), k))])


def f_plus_term(l, m, n, weight=1.0):
    return SpectralFunction([(complex(weight), ("f_plus", l, m, n))])


def f_minus_term(l, m, n, weight=1.0):
    return SpectralFunction([(complex(weight), ("f_minus", l, m, n))])


def minkowski_basis(sign: str, l: int, m: int, n: int, Y: Biquaternion) -> complex:
    """The harmonic basis function f^{+|-}_{l, m, n} at a Minkowski point
    with N(Y) > 0: sqrt((2l+1)(l-n)!/(l+n)!) r^{-1} (r^2-t^2)^{+-n/2}
    P_l^{(n)}(t/r) Y_l^m(theta, phi)."""
    from .errors import OutsideDomain

    if not (0 <= n <= l and -l <= m <= l):
        raise ValueError("need 0 <= n <= l and |m| <= l")
    y0, y1, y2, y3 = (c.real for c in Y.minkowski_coords())
    r2 = y1 * y1 + y2 * y2 + y3 * y3
    r = math.sqrt(r2)
    n_y = r2 - y0 * y0
    if n_y <= 0 or r == 0:
        raise OutsideDomain("basis functions live on N(Y) > 0")
    theta = math.acos(max(-1.0, min(1.0, y3 / r)))
    phi = math.atan2(y2, y1)
    amp = math.sqrt((2 * l + 1) * math.factorial(l - n) / math.factorial(l + n))
    radial = n_y ** (n / 2) if sign == "+" else n_y ** (-n / 2)
    return amp / r * radial * legendre_p(l, n, y0 / r) * spherical_y(l, m, theta, phi)


def ninv_t_at_inverse(l, a, b, weight=1.0) -> "SpectralFunction":
    """N(Z)^{-1} t^l_{a, b}(Z^{-1}) as a tagged function, via the Z^+
    substitution relation: equals ratio * N^{-2l-1} t^l_{-b, -a}(Z)."""
    from fractions import Fraction

    from .halfint import HalfInt
    from .specfun import gamma_ratio_int

    lh, ah, bh = HalfInt.of(l), HalfInt.of(a), HalfInt.of(b)
    num = [(lh - bh + 1).as_int(), (lh + bh + 1).as_int()]
    den = [(lh - ah + 1).as_int(), (lh + ah + 1).as_int()]
    ratio = Fraction((-1) ** (bh - ah).as_int()) * gamma_ratio_int(num, den)
    return ninv_t_term(float(lh), float(-bh), float(-ah), weight=weight * float(ratio))


def left_spinor(l, n, m, position: str):
    """The left-regular spinor components as tagged functions (matching
    `coeffs.regular_builder` componentwise)."""
    from .halfint import HalfInt

    lh, nh, mh = HalfInt.of(l), HalfInt.of(n), HalfInt.of(m)
    lf = float(lh)
    half = HalfInt(1)
    if position == "infinity-regular":
        comps = []
        for mm, fac in ((mh + half, lf - float(mh) + 0.5), (mh - half, lf + float(mh) + 0.5)):
            comps.append(
                SpectralFunction([]) if fac == 0 else t_term(lf, nh, mm, weight=fac)
            )
        return tuple(comps)
    if position == "origin-regular":
        comps = []
        for nn, fac in ((nh - half, lf - float(nh) + 0.5), (nh + half, lf + float(nh) + 0.5)):
            comps.append(
                SpectralFunction([]) if fac == 0 else ninv_t_at_inverse(lf, nn, mh, weight=fac)
            )
        return tuple(comps)
    raise ValueError(f"unknown position {position!r}")


def gauss_wave_packet(n, m, lam0: float = 1.0, width: float = 0.3, points: int = 9):
    """A continuous-series wave packet: Gauss-Hermite combination of
    t^{-1/2 + i lam_k}_{n, m} around lam0."""
    nodes, weights = np.polynomial.hermite.hermgauss(points)
    terms = []
    for x, w in zip(nodes, weights):
        lam = lam0 + math.sqrt(2) * width * x
        terms.append((complex(w), ("t", CoeffIndex.make(-0.5 + 1j * lam, n, m))))
    return SpectralFunction(terms)


@dataclass(frozen=True)
class SU11Term:
    """One tag restricted to the hyperboloid H_R: coefficient x
    e^{-i(p alpha + q beta)} x profile(tau)."""

    weight: complex
    p: int
    q: int
    deg_eig: complex  # eigenvalue of the shifted degree operator
    profile: object  # callable: cosh_tau array -> complex array
    osc: float = 0.0  # tau-oscillation frequency |Im l| of the profile


@dataclass(frozen=True)
class MinkTerm:
    """One Minkowski tag on the R-hyperboloid: weight x e^{-i m phi} x
    rho_profile(tanh rho) x theta_profile(cos theta)."""

    weight: complex
    phi_mode: int
    deg_eig: complex
    l: int
    m: int
    n: int
    sign: str
    R: float


class SpectralFunction:
    """A finite weighted sum of tagged basis elements."""

    def __init__(self, terms):
        self.terms = list(terms)

    def __add__(self, other: "SpectralFunction") -> "SpectralFunction":
        return SpectralFunction(self.terms + other.terms)

    def __mul__(self, c) -> "SpectralFunction":
        return SpectralFunction([(complex(c) * w, tag) for w, tag in self.terms])

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1.0)

    # -- pointwise evaluation -----------------------------------------
    def evaluate(self, Z: Biquaternion) -> complex:
        total = 0j
        for w, tag in self.terms:
            total += w * _eval_tag(tag, Z)
        return total

    def deg_evaluate(self, Z: Biquaternion) -> complex:
        """(deg f)(Z) using the exact homogeneity of each tag."""
        total = 0j
        for w, tag in self.terms:
            total += w * (1 + _hom_degree(tag)) * _eval_tag(tag, Z)
        return total

    # -- restriction to H_R as angular modes ---------------------------
    def su11_terms(self, R: float) -> list[SU11Term]:
        out = []
        for w, tag in self.terms:
            kind = tag[0]
            if kind not in ("t", "ninv_t", "n_pow_t"):
                raise WrongSeries(f"tag {kind} does not restrict to SU(1,1) side")
            idx: CoeffIndex = tag[1]
            nf, mf = float(idx.n), float(idx.m)
            p, q = int(round(nf + mf)), int(round(nf - mf))
            deg = 1 + _hom_degree(tag)
            if kind == "t":
                rfac = R ** (2 * idx.l)
            elif kind == "ninv_t":
                rfac = R ** (-2 * idx.l - 2)
            else:
                rfac = R ** (2 * tag[2] + 2 * idx.l)
            out.append(
                SU11Term(
                    w * complex(rfac), p, q, deg, _tau_profile(idx), abs(idx.l.imag)
                )
            )
        return out

    def mink_terms(self, R: float) -> list[MinkTerm]:
        out = []
        for w, tag in self.terms:
            kind = tag[0]
            if kind not in ("f_plus", "f_minus"):
                raise WrongSeries(f"tag {kind} does not restrict to the M side")
            _, l, m, n = tag
            sign = "+" if kind == "f_plus" else "-"
            deg = 1 + _hom_degree(tag)
            out.append(MinkTerm(w, m, deg, l, m, n, sign, R))
        return out


def _hom_degree(tag) -> complex:
    kind = tag[0]
    if kind == "t":
        return 2 * tag[1].l
    if kind == "ninv_t":
        return -2 * tag[1].l - 2
    if kind == "n_pow_t":
        return 2 * tag[2] + 2 * tag[1].l
    if kind == "f_plus":
        return tag[3] - 1
    if kind == "f_minus":
        return -(tag[3] + 1)
    raise ValueError(f"unknown tag {tag!r}")


def _eval_tag(tag, Z: Biquaternion) -> complex:
    kind = tag[0]
    if kind == "t":
        return coeff_eval(tag[1], Z)
    if kind == "ninv_t":
        idx = tag[1]
        n = Z.quad_norm()
        return n ** (-2 * idx.l - 1) * coeff_eval(idx, Z)
    if kind == "n_pow_t":
        idx, k = tag[1], tag[2]
        return Z.quad_norm() ** k * coeff_eval(idx, Z)
    if kind == "f_plus":
        return minkowski_basis("+", tag[1], tag[2], tag[3], Z)
    if kind == "f_minus":
        return minkowski_basis("-", tag[1], tag[2], tag[3], Z)
    raise ValueError(f"unknown tag {tag!r}")


def _tau_profile(idx: CoeffIndex):
    """cosh_tau-array -> frak-P values; exact polynomial route for the
    discrete families, 2F1 route otherwise."""
    if idx.series.is_discrete_family:
        poly = coeff_poly(idx)
        items = [(expo, complex(c)) for expo, c in poly.terms.items()]

        def profile(cosh_tau):
            t = np.asarray(cosh_tau, dtype=float)
            ch = np.sqrt((1 + t) / 2)
            sh = np.sqrt(np.maximum((t - 1) / 2, 0.0))
            total = np.zeros(t.shape, dtype=complex)
            for (a, b, c_, d), coeff in items:
                total += coeff * ch ** (a + d) * sh ** (b + c_)
            return total

        return profile

    def profile(cosh_tau):
        return frakP_array(idx.l, idx.n, idx.m, cosh_tau)

    return profile
