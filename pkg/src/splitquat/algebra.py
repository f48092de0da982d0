"""Biquaternion arithmetic in the 2x2 complex matrix realization.

A biquaternion is a complex 2x2 matrix Z = (z_ij).  The three real forms
used throughout are cut out by conjugation conditions:

    classical quaternions  H   : z22 = conj(z11), z21 = -conj(z12)
    split quaternions      H_R : z22 = conj(z11), z21 =  conj(z12)
    Minkowski space        M   : z11, z22 purely imaginary, z21 = -conj(z12)

The quadratic form N(Z) is the determinant; Z Z^+ = N(Z) Id defines the
quaternionic conjugate Z^+ (the adjugate matrix).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import SingularElement

__all__ = [
    "Biquaternion",
    "MobiusElement",
    "E0",
    "E1",
    "E2",
    "E3",
    "TE0",
    "TE1",
    "TE2",
    "TE3",
    "from_split_coords",
    "from_minkowski_coords",
    "deform",
]


@dataclass(frozen=True)
class Biquaternion:
    z11: complex
    z12: complex
    z21: complex
    z22: complex

    # -- constructors ---------------------------------------------------
    @staticmethod
    def from_matrix(mat) -> "Biquaternion":
        m = np.asarray(mat, dtype=complex)
        return Biquaternion(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def to_matrix(self) -> np.ndarray:
        return np.array([[self.z11, self.z12], [self.z21, self.z22]], dtype=complex)

    # -- ring operations --------------------------------------------------
    def __add__(self, other: "Biquaternion") -> "Biquaternion":
        return Biquaternion(
            self.z11 + other.z11,
            self.z12 + other.z12,
            self.z21 + other.z21,
            self.z22 + other.z22,
        )

    def __sub__(self, other: "Biquaternion") -> "Biquaternion":
        return Biquaternion(
            self.z11 - other.z11,
            self.z12 - other.z12,
            self.z21 - other.z21,
            self.z22 - other.z22,
        )

    def __neg__(self) -> "Biquaternion":
        return Biquaternion(-self.z11, -self.z12, -self.z21, -self.z22)

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(
                self.z11 * other.z11 + self.z12 * other.z21,
                self.z11 * other.z12 + self.z12 * other.z22,
                self.z21 * other.z11 + self.z22 * other.z21,
                self.z21 * other.z12 + self.z22 * other.z22,
            )
        c = complex(other)
        return Biquaternion(c * self.z11, c * self.z12, c * self.z21, c * self.z22)

    def __rmul__(self, other):
        c = complex(other)
        return Biquaternion(c * self.z11, c * self.z12, c * self.z21, c * self.z22)

    # -- conjugations -----------------------------------------------------
    def conj_c(self) -> "Biquaternion":
        """Complex conjugation with respect to the classical quaternions."""
        cj = complex.conjugate
        return Biquaternion(cj(self.z22), -cj(self.z21), -cj(self.z12), cj(self.z11))

    def conj_plus(self) -> "Biquaternion":
        """Quaternionic conjugation Z^+ (the adjugate): Z Z^+ = N(Z) Id."""
        return Biquaternion(self.z22, -self.z12, -self.z21, self.z11)

    def conj_minus(self) -> "Biquaternion":
        """The involution Z^- = -e3 Z e3 (off-diagonal sign flip)."""
        return Biquaternion(self.z11, -self.z12, -self.z21, self.z22)

    def conjugate(self, kind: str) -> "Biquaternion":
        if kind in ("complex-c", "c"):
            return self.conj_c()
        if kind in ("quaternionic-plus", "plus"):
            return self.conj_plus()
        if kind == "minus":
            return self.conj_minus()
        raise ValueError(f"unknown conjugation kind {kind!r}")

    # -- quadratic forms ---------------------------------------------------
    def quad_norm(self) -> complex:
        """N(Z) = det Z; signature (2,2) on the split form."""
        return self.z11 * self.z22 - self.z12 * self.z21

    def s_form(self) -> complex:
        """S(Z) = z11 z22 + z12 z21; S(X) = ||X||^2 on the split form."""
        return self.z11 * self.z22 + self.z12 * self.z21

    def hnorm(self) -> float:
        """The norm with ||e_i|| = 1: sqrt(sum |z_ij|^2 / 2)."""
        s = (
            abs(self.z11) ** 2
            + abs(self.z12) ** 2
            + abs(self.z21) ** 2
            + abs(self.z22) ** 2
        )
        return (0.5 * s) ** 0.5

    def trace(self) -> complex:
        return self.z11 + self.z22

    def pairing(self, other: "Biquaternion") -> complex:
        """<Z, W> = (1/2) tr(Z^+ W); polarization of N."""
        zp = self.conj_plus()
        return 0.5 * (
            zp.z11 * other.z11
            + zp.z12 * other.z21
            + zp.z21 * other.z12
            + zp.z22 * other.z22
        )

    def inverse(self, singular_tol: float | None = None) -> "Biquaternion":
        n = self.quad_norm()
        tol = 1e-14 * max(self.hnorm() ** 2, 1e-300) if singular_tol is None else singular_tol
        if abs(n) <= tol:
            raise SingularElement(f"|N(Z)| = {abs(n):.3e} below tolerance {tol:.3e}")
        zp = self.conj_plus()
        return Biquaternion(zp.z11 / n, zp.z12 / n, zp.z21 / n, zp.z22 / n)

    # -- coordinates --------------------------------------------------------
    def split_coords(self) -> tuple[complex, complex, complex, complex]:
        """Coefficients (x0, x1, x2, x3) in the basis (e0, te1, te2, e3)."""
        x0 = (self.z11 + self.z22) / 2
        x3 = (self.z22 - self.z11) / 2j
        x1 = (self.z12 + self.z21) / 2
        x2 = (self.z12 - self.z21) / 2j
        return x0, x1, x2, x3

    def minkowski_coords(self) -> tuple[complex, complex, complex, complex]:
        """Coefficients (y0, y1, y2, y3) in the basis (te0, e1, e2, e3)."""
        y0 = 0.5j * (self.z11 + self.z22)
        y3 = 0.5j * (self.z11 - self.z22)
        y1 = 0.5j * (self.z12 + self.z21)
        y2 = (self.z21 - self.z12) / 2
        return y0, y1, y2, y3

    # -- real-form membership -------------------------------------------------
    def in_split_form(self, tol: float = 1e-12) -> bool:
        return (
            abs(self.z22 - self.z11.conjugate()) <= tol
            and abs(self.z21 - self.z12.conjugate()) <= tol
        )

    def in_minkowski(self, tol: float = 1e-12) -> bool:
        return (
            abs(self.z11.real) <= tol
            and abs(self.z22.real) <= tol
            and abs(self.z21 + self.z12.conjugate()) <= tol
        )

    def in_su11(self, tol: float = 1e-12) -> bool:
        return self.in_split_form(tol) and abs(self.quad_norm() - 1) <= tol

    def __repr__(self):
        return (
            f"Biquaternion([[{self.z11:.6g}, {self.z12:.6g}], "
            f"[{self.z21:.6g}, {self.z22:.6g}]])"
        )


# Matrix units of the classical quaternions and of the split/Minkowski bases.
E0 = Biquaternion(1, 0, 0, 1)
E1 = Biquaternion(0, -1j, -1j, 0)
E2 = Biquaternion(0, -1, 1, 0)
E3 = Biquaternion(-1j, 0, 0, 1j)
TE0 = Biquaternion(-1j, 0, 0, -1j)  # -i e0
TE1 = Biquaternion(0, 1, 1, 0)  # i e1
TE2 = Biquaternion(0, 1j, -1j, 0)  # -i e2
TE3 = Biquaternion(1, 0, 0, -1)  # i e3


def from_split_coords(x0, x1, x2, x3) -> Biquaternion:
    """x0 e0 + x1 te1 + x2 te2 + x3 e3; real coords give a split quaternion."""
    return Biquaternion(x0 - 1j * x3, x1 + 1j * x2, x1 - 1j * x2, x0 + 1j * x3)


def from_minkowski_coords(y0, y1, y2, y3) -> Biquaternion:
    """y0 te0 + y1 e1 + y2 e2 + y3 e3; real coords give a Minkowski point."""
    return Biquaternion(
        -1j * y0 - 1j * y3,
        -1j * y1 - y2,
        -1j * y1 + y2,
        -1j * y0 + 1j * y3,
    )


def deform(Z: Biquaternion, Z0: Biquaternion, eps: float, variant: str = "i") -> Biquaternion:
    """Epsilon-deformation Z + i*eps*(Z-Z0)^- (variant "i") or
    Z + eps*(1+i)*(Z-Z0)^- (variant "one-plus-i").

    Satisfies N(deform(Z, 0, eps, "i")) = (1-eps^2) N(Z) + 2i eps S(Z).
    """
    d = (Z - Z0).conj_minus()
    if variant == "i":
        factor = 1j * eps
    elif variant == "one-plus-i":
        factor = eps * (1 + 1j)
    else:
        raise ValueError(f"unknown deformation variant {variant!r}")
    return Z + factor * d


class MobiusElement:
    """An element h of GL(2, H_C) acting by fractional linear maps.

    Blocks a, b, c, d are biquaternions; the inverse blocks are computed
    once at construction by inverting the underlying 4x4 complex matrix.
    """

    def __init__(self, a: Biquaternion, b: Biquaternion, c: Biquaternion, d: Biquaternion):
        self.a, self.b, self.c, self.d = a, b, c, d
        big = np.zeros((4, 4), dtype=complex)
        big[:2, :2] = a.to_matrix()
        big[:2, 2:] = b.to_matrix()
        big[2:, :2] = c.to_matrix()
        big[2:, 2:] = d.to_matrix()
        det = np.linalg.det(big)
        if abs(det) < 1e-13 * max(np.abs(big).max() ** 4, 1e-300):
            raise SingularElement("4x4 matrix of the Mobius element is singular")
        inv = np.linalg.inv(big)
        self.inv_a = Biquaternion.from_matrix(inv[:2, :2])
        self.inv_b = Biquaternion.from_matrix(inv[:2, 2:])
        self.inv_c = Biquaternion.from_matrix(inv[2:, :2])
        self.inv_d = Biquaternion.from_matrix(inv[2:, 2:])

    @staticmethod
    def identity() -> "MobiusElement":
        zero = Biquaternion(0, 0, 0, 0)
        return MobiusElement(E0, zero, zero, E0)

    def __mul__(self, other: "MobiusElement") -> "MobiusElement":
        return MobiusElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, Z: Biquaternion) -> Biquaternion:
        """The conformal action Z -> (aZ+b)(cZ+d)^{-1}."""
        num = self.a * Z + self.b
        den = self.c * Z + self.d
        return num * den.inverse()


def kak_matrix(phi: float, tau: float, psi: float, R: float = 1.0) -> Biquaternion:
    """R times the KAK-parameterized SU(1,1) element X(phi, tau, psi)."""
    ch, sh = cmath.cosh(tau / 2), cmath.sinh(tau / 2)
    ea = cmath.exp(0.5j * (phi + psi))
    eb = cmath.exp(0.5j * (phi - psi))
    return Biquaternion(R * ch * ea, R * sh * eb, R * sh / eb, R * ch / ea)
