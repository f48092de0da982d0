"""Hyperboloid parameterizations with measure densities, Cayley transforms
between the split form and Minkowski space, the sign function on the
one-sheeted hyperboloid, and semigroup/tube membership classification.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import Biquaternion, E0, TE3, from_minkowski_coords, kak_matrix
from .errors import CayleySingular, Indeterminate, SingularElement, ZeroCoordinate

__all__ = [
    "KAKPoint",
    "MHyperPoint",
    "su11_point",
    "su11_density",
    "mhyper_point",
    "mhyper_density",
    "kak_factorize",
    "cayley",
    "pullback_gamma",
    "sgnx",
    "semigroup_classify",
    "tube_classify",
]


@dataclass(frozen=True)
class KAKPoint:
    """KAK coordinates (phi, tau, psi) on R * SU(1,1)."""

    phi: float
    tau: float
    psi: float
    R: float = 1.0


@dataclass(frozen=True)
class MHyperPoint:
    """Coordinates (rho, theta, phi) on the R-hyperboloid in Minkowski space."""

    rho: float
    theta: float
    phi: float
    R: float = 1.0


def su11_point(p: KAKPoint) -> Biquaternion:
    return kak_matrix(p.phi, p.tau, p.psi, p.R)


def su11_density(p: KAKPoint) -> float:
    """dS/||X|| on the R-hyperboloid equals R^2 sinh(tau)/8 dphi dtau dpsi."""
    return p.R**2 * math.sinh(p.tau) / 8.0


def mhyper_point(p: MHyperPoint) -> Biquaternion:
    """R (sinh rho te0 + cosh rho (sin th cos ph e1 + sin th sin ph e2 + cos th e3))."""
    ch, sh = math.cosh(p.rho), math.sinh(p.rho)
    st, ct = math.sin(p.theta), math.cos(p.theta)
    return from_minkowski_coords(
        p.R * sh,
        p.R * ch * st * math.cos(p.phi),
        p.R * ch * st * math.sin(p.phi),
        p.R * ch * ct,
    )


def mhyper_density(p: MHyperPoint) -> float:
    """dS/||Y|| = R^2 cosh^2(rho) sin(theta) drho dtheta dphi."""
    return p.R**2 * math.cosh(p.rho) ** 2 * math.sin(p.theta)


def kak_factorize(Z: Biquaternion, tol: float = 1e-10) -> KAKPoint:
    """Recover (phi, tau, psi; R) for Z in the positive split cone.

    At tau = 0 the K-factors degenerate; psi is set to 0 there.
    """
    nz = Z.quad_norm()
    if abs(nz.imag) > tol * (1 + abs(nz)) or nz.real <= 0:
        raise ValueError("KAK factorization needs N(Z) > 0")
    R = math.sqrt(nz.real)
    x11 = Z.z11 / R
    x12 = Z.z12 / R
    tau = 2.0 * math.acosh(max(1.0, abs(x11)))
    alpha = cmath.phase(x11)
    beta = cmath.phase(x12) if abs(x12) > tol else 0.0
    phi = alpha + beta
    psi = alpha - beta
    # normalize to the parameter box [0, 2pi) x [-2pi, 2pi)
    twopi = 2 * math.pi
    while phi < 0:
        phi, psi = phi + twopi, psi + twopi
    while phi >= twopi:
        phi, psi = phi - twopi, psi - twopi
    if psi >= twopi:
        psi -= 2 * twopi
    if psi < -twopi:
        psi += 2 * twopi
    return KAKPoint(phi, tau, psi, R)


# ----------------------------------------------------------------------
# Cayley transforms
# ----------------------------------------------------------------------

def cayley(direction: str, Z: Biquaternion) -> Biquaternion:
    """to_u11: Z -> i (te3 Z + 1)(te3 Z - 1)^{-1}, Minkowski to U(1,1);
    to_m: Z -> te3 (Z + i)(Z - i)^{-1}, the inverse map."""
    one = E0
    if direction == "to_u11":
        num = TE3 * Z + one
        den = TE3 * Z - one
    elif direction == "to_m":
        num = Z + 1j * one
        den = Z - 1j * one
    else:
        raise ValueError(f"unknown direction {direction!r}")
    nden = den.quad_norm()
    if abs(nden) < 1e-10 * (1 + Z.hnorm() ** 2):
        raise CayleySingular(f"|N(denominator)| = {abs(nden):.2e}")
    out = num * den.inverse()
    if direction == "to_u11":
        return 1j * out
    return TE3 * out


def pullback_gamma(phi_on_u11, Y: Biquaternion) -> complex:
    """(pi_l^0(gamma) phi)(Y) = -2 phi(cayley_to_u11(Y)) / N(te3 Y - 1)."""
    den = (TE3 * Y - E0).quad_norm()
    if abs(den) < 1e-10 * (1 + Y.hnorm() ** 2):
        raise CayleySingular("pullback at a Cayley-singular point")
    return -2.0 / den * phi_on_u11(cayley("to_u11", Y))


def sgnx(Y: Biquaternion, tol: float = 1e-12) -> int:
    """Sign of the y^3 coordinate of a Minkowski point."""
    y3 = Y.minkowski_coords()[3]
    if abs(y3) <= tol:
        raise ZeroCoordinate("y^3 vanishes")
    return 1 if y3.real > 0 else -1


# ----------------------------------------------------------------------
# semigroup and tube classification
# ----------------------------------------------------------------------

def _eig2(Z: Biquaternion) -> tuple[complex, complex]:
    tr = Z.trace()
    det = Z.quad_norm()
    disc = cmath.sqrt(tr * tr - 4 * det)
    return (tr + disc) / 2, (tr - disc) / 2


def semigroup_classify(W: Biquaternion, tol: float = 1e-9):
    """Classify W against the open Olshanskii semigroups.

    Returns (label, (r1, r2)) with eigenvalue moduli r1 >= r2.  The moduli
    criterion (r1 > 1 > r2 > 0 for the contracting side) is the operative
    convergence test; when the moduli are distinct the Hermitian-form
    condition on log(J W* J W) is verified as well.
    """
    det = W.quad_norm()
    if abs(det) < 1e-14 * max(W.hnorm() ** 2, 1e-300):
        raise SingularElement("W is singular")
    lam1, lam2 = _eig2(W)
    r1, r2 = sorted((abs(lam1), abs(lam2)), reverse=True)
    if abs(r1 - 1) < tol or abs(r2 - 1) < tol:
        if abs(r1 - 1) < tol and abs(r2 - 1) < tol:
            return "Neither", (r1, r2)
        raise Indeterminate(f"eigenvalue modulus within {tol} of 1: ({r1}, {r2})")
    if (r1 > 1 and r2 > 1) or (r1 < 1 and r2 < 1):
        return "Neither", (r1, r2)
    # one modulus on each side of 1: decide Gamma^- vs Gamma^+ by the
    # definiteness of X = (1/2) log(J W* J W), J = diag(1, -1)
    J = np.diag([1.0, -1.0]).astype(complex)
    Wm = W.to_matrix()
    M = J @ Wm.conj().T @ J @ Wm
    evals, evecs = np.linalg.eig(M)
    if np.any(evals.real <= 0) or np.any(np.abs(evals.imag) > 1e-8 * np.abs(evals)):
        return "Neither", (r1, r2)
    X = evecs @ np.diag(0.5 * np.log(evals.real.astype(float))) @ np.linalg.inv(evecs)
    K = -J @ X  # Hermitian when X lies in i u(1,1)
    herm_defect = np.abs(K - K.conj().T).max()
    if herm_defect > 1e-7 * (1 + np.abs(K).max()):
        return "Neither", (r1, r2)
    kvals = np.linalg.eigvalsh(0.5 * (K + K.conj().T))
    if np.all(kvals < 0):
        return "GammaMinus", (r1, r2)
    if np.all(kvals > 0):
        return "GammaPlus", (r1, r2)
    return "Neither", (r1, r2)


def tube_classify(Z: Biquaternion, tol: float = 1e-12) -> str:
    """Split Z = W1 + i W2 with W1, W2 Minkowski; classify by the
    definiteness of the Hermitian matrix i W2."""
    mu = -(Z.conj_c().conj_plus())  # antilinear projection onto M
    w2 = (Z - mu) * (1 / (2j))
    iw2 = (1j * w2).to_matrix()
    defect = np.abs(iw2 - iw2.conj().T).max()
    ev = np.linalg.eigvalsh(0.5 * (iw2 + iw2.conj().T))
    if defect > 1e-9 * (1 + np.abs(iw2).max()):
        return "Neither"
    if np.all(ev > tol):
        return "TMinus"
    if np.all(ev < -tol):
        return "TPlus"
    return "Neither"
