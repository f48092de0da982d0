"""Reproducing kernels and their matrix-coefficient expansions.

The kernel 1/N(Z-W) (and its Fueter and second-order-pole companions)
expands into discrete-series matrix coefficients whenever W Z^{-1} lies in
one of the open Olshanskii semigroups; the expansions converge
geometrically in the eigenvalue moduli of W Z^{-1}.  On the Minkowski side
the same kernel expands through Legendre Q/P addition series under a
time-ordering condition.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import Biquaternion
from .coeffs import coeff_poly_or_zero
from .errors import NotInSemigroup, SingularKernel, WrongOrdering
from .geometry import semigroup_classify
from .halfint import HalfInt
from .specfun import legendre_p, legendre_q, legendre_q_tilde, spherical_y

__all__ = [
    "KernelSpec",
    "ExpansionResult",
    "kernel_eval",
    "expand_szego",
    "expand_fueter",
    "expand_pole2",
    "expand_minkowski_szego",
    "legendre_addition_eval",
]

HALF = HalfInt(1)
ONE = HalfInt(2)


@dataclass(frozen=True)
class KernelSpec:
    kind: str  # "szego" | "fueter" | "pole2"
    regularization: str = "none"  # none | plus_i_eps | minus_i_eps | eps_z0 | eps_sgn_dt
    eps: float = 0.0
    sign: int = +1

    def shift(self, Z: Biquaternion, W: Biquaternion) -> complex:
        if self.regularization == "none":
            return 0j
        if self.regularization == "plus_i_eps":
            return 1j * self.eps
        if self.regularization == "minus_i_eps":
            return -1j * self.eps
        if self.regularization == "eps_z0":
            z0 = (Z - W).minkowski_coords()[0]
            return 1j * self.sign * self.eps * z0
        if self.regularization == "eps_sgn_dt":
            t = Z.minkowski_coords()[0].real
            tt = W.minkowski_coords()[0].real
            return 1j * self.sign * self.eps * math.copysign(1.0, t - tt)
        raise ValueError(f"unknown regularization {self.regularization!r}")


@dataclass
class ExpansionResult:
    partial_sum: object  # complex or 2x2 ndarray
    L_used: int
    tail_bound: float


def kernel_eval(spec: KernelSpec, Z: Biquaternion, W: Biquaternion):
    """Evaluate the chosen kernel at (Z, W) with the requested i-epsilon
    insertion in the denominator."""
    diff = Z - W
    den = diff.quad_norm() + spec.shift(Z, W)
    scale = max(diff.hnorm() ** 2, 1e-300)
    if spec.regularization == "none" and abs(den) < 1e-12 * scale:
        raise SingularKernel(f"|N(Z-W)| = {abs(den):.2e}")
    if spec.kind == "szego":
        return 1.0 / den
    if spec.kind == "pole2":
        return 1.0 / (den * den)
    if spec.kind == "fueter":
        return diff.conj_plus().to_matrix() / (den * den)
    raise ValueError(f"unknown kernel kind {spec.kind!r}")


# ----------------------------------------------------------------------
# semigroup-domain expansions
# ----------------------------------------------------------------------

def _shells(L_max: int):
    """Half-integer l = -1/2, -1, ... down to -L_max/2."""
    return [HalfInt(-d) for d in range(1, L_max + 1)]


def _boxsum(term_fn, box: int, cut: float, matrix: bool = False):
    """Sum term_fn(i, j) over the quarter-lattice with early termination on
    runs of negligible terms."""
    total = np.zeros((2, 2), dtype=complex) if matrix else 0j
    row_small = 0
    for i in range(box + 1):
        row = np.zeros((2, 2), dtype=complex) if matrix else 0j
        col_small = 0
        for j in range(box + 1):
            t = term_fn(i, j)
            mag = float(np.abs(t).max()) if matrix else abs(t)
            row = row + t
            if mag < cut:
                col_small += 1
                if col_small >= 3 and j >= 4:
                    break
            else:
                col_small = 0
        total = total + row
        rmag = float(np.abs(row).max()) if matrix else abs(row)
        if rmag < cut:
            row_small += 1
            if row_small >= 3 and i >= 4:
                break
        else:
            row_small = 0
    return total


def _tail_from_shells(shell_mags: list[float], q: float, L_next: int) -> float:
    """Geometric tail C q^L / (1 - q), C fit from the last three shells."""
    if q >= 1.0:
        return math.inf
    C = 0.0
    n = len(shell_mags)
    for k in range(max(0, n - 3), n):
        C = max(C, shell_mags[k] / max(q ** (k + 1), 1e-300))
    return C * q**L_next / (1.0 - q)


def _semigroup_moduli(Z: Biquaternion, W: Biquaternion):
    label, (r1, r2) = semigroup_classify(W * Z.inverse())
    if label not in ("GammaMinus", "GammaPlus"):
        raise NotInSemigroup(f"W Z^{{-1}} classifies as {label}")
    return label, r1, r2


def expand_szego(Z: Biquaternion, W: Biquaternion, L_max: int = 40,
                 term_cut: float = 1e-18, limit_in: str = "second") -> ExpansionResult:
    """Partial sum of the matrix-coefficient expansion of -1/N(Z-W).

    The l = -1/2 (limit) terms sit in the second sum by default; passing
    limit_in="first" moves them to the first via the inversion relation,
    which changes nothing.
    """
    label, r1, r2 = _semigroup_moduli(Z, W)
    q = max(1.0 / r1, r2)
    zinv, winv = Z.inverse(), W.inverse()
    nz, nw = Z.quad_norm(), W.quad_norm()
    first_cone = "holo" if label == "GammaMinus" else "anti"
    second_cone = "anti" if label == "GammaMinus" else "holo"
    total = 0j
    shell_mags = []
    for l in _shells(L_max):
        shell = 0j
        is_limit = l.doubled == -1
        if not is_limit:
            shell += _cone_boxsum(l, first_cone, W, zinv, 1.0 / nz, L_max, term_cut)
            shell += _cone_boxsum(l, second_cone, winv, Z, 1.0 / nw, L_max, term_cut)
        elif limit_in == "second":
            shell += _cone_boxsum(l, second_cone, winv, Z, 1.0 / nw, L_max, term_cut)
        else:
            shell += _cone_boxsum(l, first_cone, W, zinv, 1.0 / nz, L_max, term_cut)
        total += shell
        shell_mags.append(abs(shell))
    tail = _tail_from_shells(shell_mags, q, L_max + 1)
    return ExpansionResult(total, L_max, tail)


def _cone_boxsum(l: HalfInt, cone: str, A: Biquaternion, B: Biquaternion,
                 nfactor: complex, box: int, cut: float) -> complex:
    """sum over the (m, n) cone at fixed l of t^l_{n,m}(A) nfactor t^l_{m,n}(B)."""
    edge = -l if cone == "holo" else l
    sgn = 1 if cone == "holo" else -1

    def term(i, j):
        m = edge + HalfInt(sgn * 2 * i)
        n = edge + HalfInt(sgn * 2 * j)
        ta = coeff_poly_or_zero(l, n, m).evaluate(A)
        tb = coeff_poly_or_zero(l, m, n).evaluate(B)
        return ta * nfactor * tb

    return _boxsum(term, box, cut)


def expand_fueter(Z: Biquaternion, W: Biquaternion, L_max: int = 40,
                  term_cut: float = 1e-18) -> ExpansionResult:
    """Partial sums of the spinor expansion of (Z-W)^{-1}/N(Z-W) (2x2)."""
    label, r1, r2 = _semigroup_moduli(Z, W)
    q = max(1.0 / r1, r2)
    zinv, winv = Z.inverse(), W.inverse()
    nz, nw = Z.quad_norm(), W.quad_norm()
    total = np.zeros((2, 2), dtype=complex)
    shell_mags = []
    for l in _shells(L_max):
        lf = float(l)
        if label == "GammaMinus":
            def term_a(i, j, l=l, lf=lf):
                m = l - HalfInt(2 * i)
                n = l - HalfInt(2 * j)
                colv = np.array([
                    (lf - float(n) + 1) * coeff_poly_or_zero(l, n - ONE, m).evaluate(winv),
                    (lf + float(n)) * coeff_poly_or_zero(l, n, m).evaluate(winv),
                ]) / nw
                roww = np.array([
                    coeff_poly_or_zero(l - HALF, m + HALF, n - HALF).evaluate(Z),
                    coeff_poly_or_zero(l - HALF, m - HALF, n - HALF).evaluate(Z),
                ])
                return np.outer(colv, roww)

            def term_b(i, j, l=l, lf=lf):
                m = -l + HalfInt(2 * i)
                n = -l + HalfInt(2 * j)
                colv = np.array([
                    (lf - float(m) + 1) * coeff_poly_or_zero(l, n, m).evaluate(W),
                    (lf + float(m)) * coeff_poly_or_zero(l, n, m - ONE).evaluate(W),
                ])
                roww = np.array([
                    coeff_poly_or_zero(l + HALF, m - HALF, n - HALF).evaluate(zinv),
                    coeff_poly_or_zero(l + HALF, m - HALF, n + HALF).evaluate(zinv),
                ]) / nz
                return -np.outer(colv, roww)
        else:
            def term_a(i, j, l=l, lf=lf):
                m = -l + HalfInt(2 * i)
                n = -l + HalfInt(2 * j)
                colv = np.array([
                    (lf - float(n)) * coeff_poly_or_zero(l, n, m).evaluate(winv),
                    (lf + float(n) + 1) * coeff_poly_or_zero(l, n + ONE, m).evaluate(winv),
                ]) / nw
                roww = np.array([
                    coeff_poly_or_zero(l - HALF, m + HALF, n + HALF).evaluate(Z),
                    coeff_poly_or_zero(l - HALF, m - HALF, n + HALF).evaluate(Z),
                ])
                return np.outer(colv, roww)

            def term_b(i, j, l=l, lf=lf):
                m = l - HalfInt(2 * i)
                n = l - HalfInt(2 * j)
                colv = np.array([
                    (lf - float(m)) * coeff_poly_or_zero(l, n, m + ONE).evaluate(W),
                    (lf + float(m) + 1) * coeff_poly_or_zero(l, n, m).evaluate(W),
                ])
                roww = np.array([
                    coeff_poly_or_zero(l + HALF, m + HALF, n - HALF).evaluate(zinv),
                    coeff_poly_or_zero(l + HALF, m + HALF, n + HALF).evaluate(zinv),
                ]) / nz
                return -np.outer(colv, roww)

        shell = _boxsum(term_a, L_max, term_cut, matrix=True)
        if l.doubled <= -2:
            shell = shell + _boxsum(term_b, L_max, term_cut, matrix=True)
        total += shell
        shell_mags.append(float(np.abs(shell).max()))
    tail = _tail_from_shells(shell_mags, q, L_max + 1)
    return ExpansionResult(total, L_max, tail)


def expand_pole2(Z: Biquaternion, W: Biquaternion, L_max: int = 40,
                 term_cut: float = 1e-18) -> ExpansionResult:
    """Partial sum of the expansion of 1/N(Z-W)^2 with weights -(2l+1);
    only genuine discrete series l <= -1 enter."""
    label, r1, r2 = _semigroup_moduli(Z, W)
    q = max(1.0 / r1, r2)
    zinv = Z.inverse()
    nz, nw = Z.quad_norm(), W.quad_norm()
    total = 0j
    shell_mags = []
    for l in _shells(L_max):
        if l.doubled > -2:
            shell_mags.append(0.0)
            continue
        lf = float(l)
        kmax = int(round(-2 * lf - 2))
        ksum = sum(nw**k * nz ** (-k - 2) for k in range(kmax + 1))
        edge = -l if label == "GammaMinus" else l
        sgn = 1 if label == "GammaMinus" else -1

        def term(i, j, l=l, lf=lf, ksum=ksum):
            m = edge + HalfInt(sgn * 2 * i)
            n = edge + HalfInt(sgn * 2 * j)
            tw = coeff_poly_or_zero(l, n, m).evaluate(W)
            tz = coeff_poly_or_zero(l, m, n).evaluate(zinv)
            return -(2 * lf + 1) * tw * tz * ksum

        shell = _boxsum(term, L_max, term_cut)
        total += shell
        shell_mags.append(abs(shell))
    tail = _tail_from_shells(shell_mags, q, L_max + 1)
    return ExpansionResult(total, L_max, tail)


# ----------------------------------------------------------------------
# Minkowski-side expansion
# ----------------------------------------------------------------------

def _mink_split(Z: Biquaternion):
    y0, y1, y2, y3 = Z.minkowski_coords()
    r2 = y1 * y1 + y2 * y2 + y3 * y3
    r = cmath.sqrt(r2)
    theta = cmath.acos(y3 / r)
    phi = math.atan2(y2.real, y1.real)
    return y0, r, theta.real, phi


def expand_minkowski_szego(Z: Biquaternion, W: Biquaternion, L_max: int = 30,
                           variant: str = "Q_at_Z") -> ExpansionResult:
    """The Legendre-series expansion of 1/N(Z-W) for Minkowski arguments,
    one of which carries a complex time coordinate.

    variant "Q_at_Z" needs Im t != 0 and tilde-t > Re t; "Q_at_W" is the
    same expansion with the two points swapped.
    """
    if variant == "Q_at_W":
        Z, W = W, Z
    t, r, theta, phi = _mink_split(Z)
    tt, rr, ttheta, tphi = _mink_split(W)
    if abs(t.imag) < 1e-14:
        raise WrongOrdering("the Q-side point needs a complex time coordinate")
    if not tt.real > t.real:
        raise WrongOrdering("need tilde-t > Re t for this variant")
    sgn_im = 1.0 if t.imag > 0 else -1.0
    rq = r * r - t * t
    rp = (rr * rr - tt * tt).real
    total = 0j
    shell_mags: list[float] = []
    for l in range(L_max + 1):
        msum = sum(
            (-1) ** m * spherical_y(l, -m, theta, phi) * spherical_y(l, m, ttheta, tphi)
            for m in range(-l, l + 1)
        )
        nsum = 0j
        for n in range(-l, l + 1):
            nsum += (
                (1j * sgn_im) ** n
                * math.factorial(l - n)
                / math.factorial(l + n)
                * rq ** (n / 2.0)
                * rp ** (-n / 2.0)
                * legendre_q(l, n, t / r)
                * legendre_p(l, n, (tt / rr).real)
            )
        shell = (2 * l + 1) / (2 * r * rr) * msum * nsum
        total += shell
        shell_mags.append(abs(shell))
    qs = [
        shell_mags[i + 1] / shell_mags[i]
        for i in range(max(0, len(shell_mags) - 3), len(shell_mags) - 1)
        if shell_mags[i] > 0
    ]
    q = min(max(qs), 0.999) if qs else 0.999
    tail = _tail_from_shells(shell_mags, q, L_max + 1)
    return ExpansionResult(total, L_max, tail)


# ----------------------------------------------------------------------
# Legendre addition theorems, both sides evaluated independently
# ----------------------------------------------------------------------

def legendre_addition_eval(which: str, **kw):
    """Evaluate both sides of an addition identity; returns (lhs, rhs, residual)."""
    if which == "P_spatial":
        l = kw["l"]
        th, ph, tth, tph = kw["theta"], kw["phi"], kw["theta2"], kw["phi2"]
        lhs = sum(
            (-1) ** m * spherical_y(l, -m, th, ph) * spherical_y(l, m, tth, tph)
            for m in range(-l, l + 1)
        )
        cosg = math.cos(th) * math.cos(tth) + math.sin(th) * math.sin(tth) * math.cos(
            ph - tph
        )
        rhs = legendre_p(l, 0, cosg)
    elif which in ("P_temporal", "Q_temporal"):
        l = kw["l"]
        t, r, tt, rr = kw["t"], kw["r"], kw["t2"], kw["r2"]
        ratio = (r * r - t * t) / (rr * rr - tt * tt)
        arg = t * tt / (r * rr) + (r * r - t * t + rr * rr - tt * tt) / (2 * r * rr)
        fn = legendre_p if which == "P_temporal" else legendre_q_tilde
        lhs = sum(
            math.factorial(l - n)
            / math.factorial(l + n)
            * ratio ** (n / 2.0)
            * fn(l, n, t / r)
            * legendre_p(l, n, tt / rr)
            for n in range(-l, l + 1)
        )
        rhs = fn(l, 0, arg)
    elif which == "P_sum":
        l, phi = kw["l"], kw["phi"]  # phi may be complex
        th, tth = kw["theta"], kw["theta2"]
        lhs = sum(
            math.factorial(l - m)
            / math.factorial(l + m)
            * cmath.exp(1j * m * phi)
            * legendre_p(l, m, math.cos(th))
            * legendre_p(l, m, math.cos(tth))
            for m in range(-l, l + 1)
        )
        cosg = math.cos(th) * math.cos(tth) + math.sin(th) * math.sin(tth) * cmath.cos(phi)
        rhs = legendre_p(l, 0, cosg)
    elif which == "Q_sum":
        l, phi = kw["l"], kw["phi"]
        th, tth = kw["theta"], kw["theta2"]
        lhs = sum(
            math.factorial(l - m)
            / math.factorial(l + m)
            * cmath.exp(1j * m * phi)
            * legendre_p(l, m, math.cos(th))
            * legendre_q_tilde(l, m, math.cos(tth))
            for m in range(-l, l + 1)
        )
        cosg = math.cos(th) * math.cos(tth) + math.sin(th) * math.sin(tth) * math.cos(phi)
        rhs = legendre_q_tilde(l, 0, cosg)
    elif which == "PQ_sum":
        x, y, lmax = kw["x"], kw["y"], kw.get("lmax", 80)
        lhs = sum((2 * l + 1) * legendre_p(l, 0, x) * legendre_q(l, 0, y)
                  for l in range(lmax + 1))
        rhs = 1.0 / (y - x)
    else:
        raise ValueError(f"unknown identity {which!r}")
    return lhs, rhs, abs(lhs - rhs)
