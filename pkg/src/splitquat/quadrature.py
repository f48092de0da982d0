"""Numerical integration over the noncompact hyperboloids, epsilon
extrapolation, and the four bilinear pairings.

The generic engines take plain callables on biquaternion points and use
trapezoid rules in the (spectrally convergent) angular directions with
adaptive Gauss panels along the boost coordinate.  Pairings of tagged
spectral functions skip the angular quadrature entirely: each tag carries
a single Fourier mode, so the angular integrals are exact mode selections
and only a one-dimensional profile integral remains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Biquaternion, kak_matrix
from .errors import NonConvergent, NonIntegrable, TolNotMet
from .geometry import MHyperPoint, mhyper_point
from .spectral import MinkTerm, SpectralFunction, SU11Term
from . import _core

__all__ = [
    "QuadResult",
    "EpsSchedule",
    "adaptive_gl",
    "integrate_su11",
    "integrate_mhyper",
    "eps_extrapolate",
    "pairing",
    "su11_pair_integral",
]


@dataclass
class QuadResult:
    value: complex
    abs_err: float
    n_nodes: int


@dataclass(frozen=True)
class EpsSchedule:
    eps0: float
    ratio: float = 0.5
    steps: int = 5
    power: float = 1.0  # extrapolation variable is eps**power

    def values(self) -> list[float]:
        return [self.eps0 * self.ratio**k for k in range(self.steps)]


# ----------------------------------------------------------------------
# adaptive Gauss-Legendre panels with an embedded error estimate
# ----------------------------------------------------------------------

_GL_HI = np.polynomial.legendre.leggauss(15)
_GL_LO = np.polynomial.legendre.leggauss(7)


def _panel(f, a: float, b: float):
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    x_hi = mid + half * _GL_HI[0]
    x_lo = mid + half * _GL_LO[0]
    v_hi = np.asarray(f(x_hi))
    v_lo = np.asarray(f(x_lo))
    hi = half * (v_hi * _GL_HI[1]).sum(axis=-1)
    lo = half * (v_lo * _GL_LO[1]).sum(axis=-1)
    return hi, float(np.max(np.abs(hi - lo))), x_hi.size


def adaptive_gl(f, a: float, b: float, tol: float, max_panels: int = 4000):
    """Integrate a vector-valued f over [a, b]; f maps a node array to an
    array whose last axis matches the nodes.  Returns (value, err, nodes)."""
    hi, err, n = _panel(f, a, b)
    panels = [(err, a, b, hi)]
    total_nodes = n
    while True:
        total_err = sum(p[0] for p in panels)
        if total_err <= tol or len(panels) >= max_panels:
            break
        panels.sort(key=lambda p: -p[0])
        _, pa, pb, _ = panels.pop(0)
        mid = 0.5 * (pa + pb)
        hi1, e1, n1 = _panel(f, pa, mid)
        hi2, e2, n2 = _panel(f, mid, pb)
        panels.append((e1, pa, mid, hi1))
        panels.append((e2, mid, pb, hi2))
        total_nodes += n1 + n2
    value = sum(p[3] for p in panels)
    return value, sum(p[0] for p in panels), total_nodes


# ----------------------------------------------------------------------
# generic hyperboloid integrators
# ----------------------------------------------------------------------

def integrate_su11(f, R: float = 1.0, tau_max: float = 12.0, tol: float = 1e-8,
                   n_ang_max: int = 128) -> QuadResult:
    """integral of f over the R-hyperboloid in the split form with measure
    dS/||X|| = R^2 sinh(tau)/8 dphi dtau dpsi.

    f is a scalar callable on Biquaternion points; the two angles use
    trapezoid grids doubled until the Cauchy difference falls below tol,
    the boost direction adaptive Gauss panels on (0, tau_max].
    """

    def angular_average(tau: float, n_ang: int) -> complex:
        ch, sh = math.cosh(tau / 2), math.sinh(tau / 2)
        ea = np.exp(2j * math.pi * np.arange(n_ang) / n_ang)
        total = 0j
        for i in range(n_ang):
            for j in range(n_ang):
                Z = Biquaternion(
                    R * ch * ea[i], R * sh * ea[j], R * sh / ea[j], R * ch / ea[i]
                )
                total += f(Z)
        return total / (n_ang * n_ang)

    def run(n_ang: int):
        def tau_integrand(tau_arr):
            out = np.empty(tau_arr.shape, dtype=complex)
            for i, tau in enumerate(tau_arr):
                # dphi dpsi = 2 dalpha dbeta; the (alpha, beta) box is (2pi)^2
                out[i] = (
                    angular_average(float(tau), n_ang)
                    * 2.0 * (2 * math.pi) ** 2
                    * R**2 * math.sinh(float(tau)) / 8.0
                )
            return out

        return adaptive_gl(tau_integrand, 1e-12, tau_max, tol / 2)

    n_ang = 16
    val, err, n = run(n_ang)
    nodes = n * n_ang**2
    while True:
        n_ang *= 2
        val2, err2, n2 = run(n_ang)
        nodes += n2 * n_ang**2
        cauchy = abs(val2 - val)
        val, err = val2, err2
        if cauchy <= tol:
            break
        if n_ang >= n_ang_max:
            raise TolNotMet(f"angular Cauchy difference {cauchy:.2e} > tol {tol:.2e}")
    return QuadResult(val, err + cauchy, nodes)


def integrate_mhyper(f, R: float = 1.0, rho_max: float = 12.0, tol: float = 1e-8,
                     n_phi: int = 32, n_theta: int = 48) -> QuadResult:
    """integral of f over the R-hyperboloid in Minkowski space with measure
    dS/||Y|| = R^2 cosh^2(rho) sin(theta) drho dtheta dphi."""
    tg, tw = np.polynomial.legendre.leggauss(n_theta)
    theta = 0.5 * math.pi * (tg + 1.0)
    wth = 0.5 * math.pi * tw
    phi = 2 * math.pi * np.arange(n_phi) / n_phi
    nodes_used = 0

    def rho_integrand(rho_arr):
        out = np.empty(rho_arr.shape, dtype=complex)
        for i, rho in enumerate(rho_arr):
            acc = 0j
            for th, w in zip(theta, wth):
                row = 0j
                for ph in phi:
                    row += f(mhyper_point(MHyperPoint(float(rho), float(th), float(ph), R)))
                acc += w * math.sin(th) * row * (2 * math.pi / n_phi)
            out[i] = acc * R**2 * math.cosh(float(rho)) ** 2
        return out

    val, err, n = adaptive_gl(rho_integrand, -rho_max, rho_max, tol)
    nodes_used = n * n_phi * n_theta
    return QuadResult(val, err, nodes_used)


# ----------------------------------------------------------------------
# epsilon extrapolation
# ----------------------------------------------------------------------

def eps_extrapolate(F, schedule: EpsSchedule):
    """Richardson extrapolation of F(eps) to eps -> 0+ assuming an
    asymptotic expansion F = F0 + c1 eps + c2 eps^2 + ...

    F may be a callable or a list of precomputed values matching the
    schedule.  The expansion variable is eps**power (power 1/2 captures the
    half-power expansion at boundary points N(W) = R^2).  Returns
    (limit, err_estimate)."""
    eps = schedule.values()
    vals = [F(e) for e in eps] if callable(F) else list(F)
    if len(vals) != len(eps) or len(vals) < 2:
        raise ValueError("need one value per schedule step, at least two")
    xs = [e**schedule.power for e in eps]
    tableau = [list(vals)]
    for j in range(1, len(vals)):
        row = []
        for i in range(len(vals) - j):
            xi, xij = xs[i], xs[i + j]
            row.append((xi * tableau[j - 1][i + 1] - xij * tableau[j - 1][i]) / (xi - xij))
        tableau.append(row)
    diag = [tableau[j][0] for j in range(len(vals))]
    err = abs(diag[-1] - diag[-2])
    spread0 = max(abs(v - diag[-1]) for v in vals) + 1e-300
    if err > 2.0 * spread0:
        raise NonConvergent("extrapolation diagonal diverges")
    return diag[-1], err


# ----------------------------------------------------------------------
# tagged pairings
# ----------------------------------------------------------------------

_ENTRY_SHIFT = {
    # matrix entry -> (delta_p, delta_q, half-uses-cosh)
    "z11": (-1, 0, True),
    "z12": (0, -1, False),
    "z21": (0, 1, False),
    "z22": (1, 0, True),
}


def su11_pair_integral(terms_a: list[SU11Term], terms_b: list[SU11Term], R: float,
                       tol: float = 1e-10, tau_max: float = 60.0,
                       entry: str | None = None) -> complex:
    """integral over H_R of (sum_a) * [optional matrix entry of X] * (sum_b)
    with measure dS/||X||; angular integrals are exact mode selections."""
    dp, dq, use_ch = (0, 0, None) if entry is None else _ENTRY_SHIFT[entry]
    total = 0j
    for ta in terms_a:
        for tb in terms_b:
            if ta.p + tb.p + (dp if entry else 0) != 0:
                continue
            if ta.q + tb.q + (dq if entry else 0) != 0:
                continue

            def profile(tau_arr, ta=ta, tb=tb):
                t = np.cosh(tau_arr)
                vals = ta.profile(t) * tb.profile(t)
                if entry is not None:
                    half = np.cosh(tau_arr / 2) if use_ch else np.sinh(tau_arr / 2)
                    vals = vals * (R * half)
                return vals * np.sinh(tau_arr)

            val, err, _ = adaptive_gl(profile, 1e-12, tau_max, tol)
            if not np.isfinite(val):
                raise NonIntegrable("profile integral diverged")
            total += ta.weight * tb.weight * val * (2 * math.pi) ** 2 * R**2 / 4.0
    return total


def _mink_profile_value(term: MinkTerm, rho: np.ndarray) -> np.ndarray:
    """rho-profile of a Minkowski tag on H_R (phi and theta parts split off):
    amp * (R cosh rho)^{-1} * R^{+-n} * P_l^{(n)}(tanh rho)."""
    from .specfun import legendre_p

    amp = math.sqrt(
        (2 * term.l + 1) * math.factorial(term.l - term.n) / math.factorial(term.l + term.n)
    )
    rad = term.R**term.n if term.sign == "+" else term.R ** (-term.n)
    x = np.tanh(rho)
    vals = np.array([legendre_p(term.l, term.n, xx).real for xx in x])
    return amp * rad * vals / (term.R * np.cosh(rho))


def _theta_pair_integral(t1: MinkTerm, t2: MinkTerm) -> float:
    """integral over theta of the two Y_l^m theta-profiles with sin(theta),
    including the (-i)^m normalization prefactors."""
    from .specfun import legendre_p

    amp1 = math.sqrt(math.factorial(t1.l - t1.m) / math.factorial(t1.l + t1.m))
    amp2 = math.sqrt(math.factorial(t2.l - t2.m) / math.factorial(t2.l + t2.m))
    pref = (-1j) ** t1.m * (-1j) ** t2.m * amp1 * amp2

    def f(tharr):
        return np.array(
            [
                legendre_p(t1.l, t1.m, math.cos(th)).real
                * legendre_p(t2.l, t2.m, math.cos(th)).real
                * math.sin(th)
                for th in tharr
            ],
            dtype=complex,
        )

    val, _, _ = adaptive_gl(f, 0.0, math.pi, 1e-12)
    return pref * val


def mink_pair_integral(terms_a: list[MinkTerm], terms_b: list[MinkTerm],
                       R: float, tol: float = 1e-10, rho_max: float = 40.0,
                       deg_weight_on_a: bool = True) -> complex:
    """integral over the Minkowski R-hyperboloid of (deg a) * b, tagged path."""
    total = 0j
    for ta in terms_a:
        for tb in terms_b:
            if ta.phi_mode + tb.phi_mode != 0:
                continue
            dega = ta.deg_eig if deg_weight_on_a else 1.0
            if dega == 0:
                continue
            th = _theta_pair_integral(ta, tb)
            if abs(th) < 1e-18:
                continue

            def rho_profile(rho_arr, ta=ta, tb=tb):
                return (
                    _mink_profile_value(ta, rho_arr)
                    * _mink_profile_value(tb, rho_arr)
                    * np.cosh(rho_arr) ** 2
                )

            val, err, _ = adaptive_gl(rho_profile, -rho_max, rho_max, tol)
            total += ta.weight * tb.weight * dega * th * val * 2 * math.pi * R**2
    return total


def pairing(kind: str, f1, f2, R: float = 1.0, tol: float = 1e-8) -> complex:
    """The four bilinear pairings.

    kind "R-form":      -1/(2 pi^2) int_{H_R} (deg f1) f2 dS/||X||
    kind "min-form":    1/(2 pi^2 i) int_{M hyperboloid} (deg f1) f2 dS/||Y||
    kind "regular-form":-1/(2 pi^2) int_{H_R} f1 . X . f2 dS/||X|| (row, column)
    kind "one-form":    i/(2 pi^3) int_{R U(1,1)} f1 f2 dV, evaluated through
                        the theta-circle reduction (exact in theta).
    Tagged SpectralFunction inputs use exact angular mode selection; plain
    callables fall back to the generic quadrature with a numeric radial
    derivative for deg.
    """
    if kind == "R-form":
        if isinstance(f1, SpectralFunction) and isinstance(f2, SpectralFunction):
            ta = [
                SU11Term(t.weight * t.deg_eig, t.p, t.q, t.deg_eig, t.profile)
                for t in f1.su11_terms(R)
            ]
            tb = f2.su11_terms(R)
            return -su11_pair_integral(ta, tb, R, tol) / (2 * math.pi**2)
        return -_generic_rform(f1, f2, R, tol) / (2 * math.pi**2)
    if kind == "min-form":
        if isinstance(f1, SpectralFunction) and isinstance(f2, SpectralFunction):
            val = mink_pair_integral(f1.mink_terms(R), f2.mink_terms(R), R, tol)
            return val / (2j * math.pi**2)
        return _generic_minform(f1, f2, R, tol) / (2j * math.pi**2)
    if kind == "regular-form":
        # f1 = (g1, g2) row, f2 = (f1c, f2c) column of SpectralFunctions
        g1, g2 = f1
        c1, c2 = f2
        total = 0j
        for gi, entry_row in ((g1, 0), (g2, 1)):
            for cj, entry_col in ((c1, 0), (c2, 1)):
                entry = ("z11", "z12", "z21", "z22")[2 * entry_row + entry_col]
                total += su11_pair_integral(
                    gi.su11_terms(R), cj.su11_terms(R), R, tol, entry=entry
                )
        return -total / (2 * math.pi**2)
    if kind == "one-form":
        # theta-circle reduction: only total homogeneity -4 survives; the
        # orientation of U(1,1) makes the surviving piece
        # + (1/2 pi^2) int_{SU(1,1)} f1 f2 dHaar.
        total = 0j
        for a in f1.su11_terms(R):
            for b in f2.su11_terms(R):
                if abs((a.deg_eig - 1) + (b.deg_eig - 1) + 4) < 1e-9:
                    total += su11_pair_integral([a], [b], R, tol)
        return total / (2 * math.pi**2)
    raise ValueError(f"unknown pairing kind {kind!r}")


def numeric_deg(f, Z: Biquaternion, h: float = 1e-5) -> complex:
    """(deg f)(Z) = f(Z) + d/ds f(sZ)|_{s=1} by central differences."""
    up = f((1 + h) * Z)
    dn = f((1 - h) * Z)
    return f(Z) + (up - dn) / (2 * h)


def _generic_rform(f1, f2, R, tol):
    def integrand(X):
        return numeric_deg(f1, X) * f2(X)

    return integrate_su11(integrand, R=R, tol=tol).value


def _generic_minform(f1, f2, R, tol):
    def integrand(Y):
        return numeric_deg(f1, Y) * f2(Y)

    return integrate_mhyper(integrand, R=R, tol=tol).value
