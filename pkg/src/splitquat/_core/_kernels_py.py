"""Pure-numpy implementations of the hot kernels.

Mirrors the compiled extension `_kernels`; one of the two is selected at
import time in `splitquat._core`.

The angular workhorses compute Fourier modes of reciprocal trigonometric
polynomials in closed form.  With u = e^{i a} and

    D(a) = C + P u + P'/u = P (u - s_a)(u - s_b) / u,

the p-th Fourier mode (1/2pi) int e^{-i p a} / D^q da is a residue
combination of the roots s_a, s_b, evaluated per entry of a C-array (one
entry per node of the outer integral).  All formulas below are invariant
under swapping the roots together with disc -> -disc, so the branch of the
square root never matters.
"""

from __future__ import annotations

import numpy as np

_REL_TINY = 1e-13


def _J(k: int, s0: np.ndarray) -> np.ndarray:
    """(1/2pi i) oint u^k/(u - s0) du over the unit circle, |s0| != 1."""
    out = np.zeros_like(s0)
    inside = np.abs(s0) < 1.0
    if k >= 0:
        out[inside] = s0[inside] ** k
    else:
        out[~inside] = -(s0[~inside] ** k)
    return out


def _J2(k: int, s0: np.ndarray) -> np.ndarray:
    """(1/2pi i) oint u^k/(u - s0)^2 du."""
    out = np.zeros_like(s0)
    if k == 0:
        return out
    inside = np.abs(s0) < 1.0
    if k >= 0:
        out[inside] = k * s0[inside] ** (k - 1)
    else:
        out[~inside] = -(k * s0[~inside] ** (k - 1))
    return out


def _J4(k: int, s0: np.ndarray) -> np.ndarray:
    """(1/2pi i) oint u^k/(u - s0)^4 du."""
    out = np.zeros_like(s0)
    coef = k * (k - 1) * (k - 2) / 6.0
    if coef == 0:
        return out
    inside = np.abs(s0) < 1.0
    if k >= 0:
        out[inside] = coef * s0[inside] ** (k - 3)
    else:
        out[~inside] = -(coef * s0[~inside] ** (k - 3))
    return out


def _stable_roots(C: np.ndarray, P: complex, Pp: complex):
    """Roots of P u^2 + C u + P' and disc_signed = P (s_a - s_b)."""
    disc = np.sqrt(C * C - 4.0 * P * Pp)
    sgn = np.where((np.conj(C) * disc).real >= 0.0, 1.0, -1.0)
    q = -0.5 * (C + sgn * disc)
    sa = q / P
    qsafe = np.where(np.abs(q) == 0.0, 1.0, q)
    sb = np.where(np.abs(q) == 0.0, 0.0, Pp / qsafe)
    return sa, sb, -sgn * disc


def reciprocal_modes(C: np.ndarray, P: complex, Pp: complex, p_list) -> np.ndarray:
    """Modes f_p of 1/(C + P e^{ia} + P' e^{-ia}); shape (len(p_list), len(C))."""
    C = np.asarray(C, dtype=complex)
    out = np.empty((len(p_list), C.shape[0]), dtype=complex)
    scale = max(float(np.max(np.abs(C))), abs(P), abs(Pp), 1e-300)
    if abs(P) < _REL_TINY * scale and abs(Pp) < _REL_TINY * scale:
        for i, p in enumerate(p_list):
            out[i] = 1.0 / C if p == 0 else 0.0
        return out
    if abs(P) < _REL_TINY * scale:
        u0 = -Pp / C
        for i, p in enumerate(p_list):
            out[i] = _J(-p, u0) / C
        return out
    if abs(Pp) < _REL_TINY * scale:
        u1 = np.full(C.shape, -1.0, dtype=complex) * C / P
        for i, p in enumerate(p_list):
            out[i] = _J(-p - 1, u1) / P
        return out
    sa, sb, disc = _stable_roots(C, P, Pp)
    rootscale = np.maximum(np.abs(sa), np.abs(sb)) + 1.0
    degen = np.abs(sa - sb) < 1e-8 * rootscale
    disc_safe = np.where(degen, 1.0, disc)
    s0 = 0.5 * (sa + sb)
    for i, p in enumerate(p_list):
        generic = (_J(-p, sa) - _J(-p, sb)) / disc_safe
        if np.any(degen):
            double = _J2(-p, s0) / P
            out[i] = np.where(degen, double, generic)
        else:
            out[i] = generic
    return out


def reciprocal_sq_modes(C: np.ndarray, P: complex, Pp: complex, p_list) -> np.ndarray:
    """Modes g_p of 1/(C + P e^{ia} + P'/e^{ia})^2; shape (len(p_list), len(C))."""
    C = np.asarray(C, dtype=complex)
    out = np.empty((len(p_list), C.shape[0]), dtype=complex)
    scale = max(float(np.max(np.abs(C))), abs(P), abs(Pp), 1e-300)
    if abs(P) < _REL_TINY * scale and abs(Pp) < _REL_TINY * scale:
        for i, p in enumerate(p_list):
            out[i] = 1.0 / (C * C) if p == 0 else 0.0
        return out
    if abs(P) < _REL_TINY * scale:
        u0 = -Pp / C
        for i, p in enumerate(p_list):
            out[i] = _J2(1 - p, u0) / (C * C)
        return out
    if abs(Pp) < _REL_TINY * scale:
        u1 = np.full(C.shape, -1.0, dtype=complex) * C / P
        for i, p in enumerate(p_list):
            out[i] = _J2(-p - 1, u1) / (P * P)
        return out
    sa, sb, disc = _stable_roots(C, P, Pp)
    rootscale = np.maximum(np.abs(sa), np.abs(sb)) + 1.0
    degen = np.abs(sa - sb) < 1e-6 * rootscale
    disc_safe = np.where(degen, 1.0, disc)
    s0 = 0.5 * (sa + sb)
    for i, p in enumerate(p_list):
        k = 1 - p
        generic = (_J2(k, sa) + _J2(k, sb)) / (disc_safe * disc_safe) - 2.0 * P * (
            _J(k, sa) - _J(k, sb)
        ) / (disc_safe * disc_safe * disc_safe)
        if np.any(degen):
            double = _J4(k, s0) / (P * P)
            out[i] = np.where(degen, double, generic)
        else:
            out[i] = generic
    return out


def reciprocal_modes_arr(C: np.ndarray, P: np.ndarray, Pp: np.ndarray, p_list) -> np.ndarray:
    """Like reciprocal_modes but with elementwise coefficient arrays."""
    C = np.asarray(C, dtype=complex)
    P = np.broadcast_to(np.asarray(P, dtype=complex), C.shape)
    Pp = np.broadcast_to(np.asarray(Pp, dtype=complex), C.shape)
    out = np.empty((len(p_list), C.shape[0]), dtype=complex)
    scale = np.maximum(np.abs(C), np.maximum(np.abs(P), np.abs(Pp))) + 1e-300
    degenP = np.abs(P) < _REL_TINY * scale
    if np.all(degenP):
        both = np.abs(Pp) < _REL_TINY * scale
        u0 = np.where(both, 1.0, -Pp / C)
        for i, p in enumerate(p_list):
            vals = _J(-p, u0) / C
            if p == 0:
                vals = np.where(both, 1.0 / C, vals)
            else:
                vals = np.where(both, 0.0, vals)
            out[i] = vals
        return out
    if np.any(degenP):
        # split and recurse on the two regimes
        idx = np.where(degenP)[0]
        jdx = np.where(~degenP)[0]
        out[:, idx] = reciprocal_modes_arr(C[idx], P[idx], Pp[idx], p_list)
        out[:, jdx] = reciprocal_modes_arr(C[jdx], P[jdx], Pp[jdx], p_list)
        return out
    disc = np.sqrt(C * C - 4.0 * P * Pp)
    sgn = np.where((np.conj(C) * disc).real >= 0.0, 1.0, -1.0)
    q = -0.5 * (C + sgn * disc)
    qs = np.where(np.abs(q) == 0.0, 1.0, q)
    sa = q / P
    sb = np.where(np.abs(q) == 0.0, 0.0, Pp / qs)
    dsc = -sgn * disc
    rootscale = np.maximum(np.abs(sa), np.abs(sb)) + 1.0
    degen = np.abs(sa - sb) < 1e-8 * rootscale
    dsafe = np.where(degen, 1.0, dsc)
    s0 = 0.5 * (sa + sb)
    for i, p in enumerate(p_list):
        generic = (_J(-p, sa) - _J(-p, sb)) / dsafe
        if np.any(degen):
            out[i] = np.where(degen, _J2(-p, s0) / P, generic)
        else:
            out[i] = generic
    return out


def reciprocal_sq_modes_arr(C: np.ndarray, P: np.ndarray, Pp: np.ndarray, p_list) -> np.ndarray:
    """Like reciprocal_sq_modes but with elementwise coefficient arrays."""
    C = np.asarray(C, dtype=complex)
    P = np.broadcast_to(np.asarray(P, dtype=complex), C.shape)
    Pp = np.broadcast_to(np.asarray(Pp, dtype=complex), C.shape)
    out = np.empty((len(p_list), C.shape[0]), dtype=complex)
    scale = np.maximum(np.abs(C), np.maximum(np.abs(P), np.abs(Pp))) + 1e-300
    degenP = np.abs(P) < _REL_TINY * scale
    if np.all(degenP):
        both = np.abs(Pp) < _REL_TINY * scale
        u0 = np.where(both, 1.0, -Pp / C)
        for i, p in enumerate(p_list):
            vals = _J2(1 - p, u0) / (C * C)
            if p == 0:
                vals = np.where(both, 1.0 / (C * C), vals)
            else:
                vals = np.where(both, 0.0, vals)
            out[i] = vals
        return out
    if np.any(degenP):
        idx = np.where(degenP)[0]
        jdx = np.where(~degenP)[0]
        out[:, idx] = reciprocal_sq_modes_arr(C[idx], P[idx], Pp[idx], p_list)
        out[:, jdx] = reciprocal_sq_modes_arr(C[jdx], P[jdx], Pp[jdx], p_list)
        return out
    disc = np.sqrt(C * C - 4.0 * P * Pp)
    sgn = np.where((np.conj(C) * disc).real >= 0.0, 1.0, -1.0)
    q = -0.5 * (C + sgn * disc)
    qs = np.where(np.abs(q) == 0.0, 1.0, q)
    sa = q / P
    sb = np.where(np.abs(q) == 0.0, 0.0, Pp / qs)
    dsc = -sgn * disc
    rootscale = np.maximum(np.abs(sa), np.abs(sb)) + 1.0
    degen = np.abs(sa - sb) < 1e-6 * rootscale
    dsafe = np.where(degen, 1.0, dsc)
    s0 = 0.5 * (sa + sb)
    for i, p in enumerate(p_list):
        k = 1 - p
        generic = (_J2(k, sa) + _J2(k, sb)) / (dsafe * dsafe) - 2.0 * P * (
            _J(k, sa) - _J(k, sb)
        ) / (dsafe * dsafe * dsafe)
        if np.any(degen):
            out[i] = np.where(degen, _J4(k, s0) / (P * P), generic)
        else:
            out[i] = generic
    return out


def assoc_legendre_table(lmax: int, x: np.ndarray) -> np.ndarray:
    """Table P[m, l, i] = P_l^{(m)}(x_i) for 0 <= m <= l <= lmax, x real."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    table = np.zeros((lmax + 1, lmax + 1, n))
    sx = np.sqrt(np.maximum(1.0 - x * x, 0.0))
    for m in range(lmax + 1):
        if m == 0:
            pmm = np.ones(n)
        else:
            pmm = table[m - 1, m - 1] * (-(2 * m - 1)) * sx
        table[m, m] = pmm
        if m == lmax:
            break
        table[m, m + 1] = (2 * m + 1) * x * pmm
        for l in range(m + 1, lmax):
            table[m, l + 1] = (
                (2 * l + 1) * x * table[m, l] - (l + m) * table[m, l - 1]
            ) / (l - m + 1)
    return table


def hyp2f1_series_arr(a: complex, b: complex, c: complex, z: np.ndarray,
                      tol: float = 1e-14, kmax: int = 4000) -> np.ndarray:
    """Plain 2F1 power series evaluated elementwise; caller guarantees |z| < 1."""
    z = np.asarray(z, dtype=complex)
    term = np.ones_like(z)
    total = term.copy()
    for k in range(kmax):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z
        total += term
        if np.all(np.abs(term) <= tol * np.maximum(np.abs(total), 1e-30)):
            return total
    raise RuntimeError("2F1 series (array) did not converge")


def contour_t(l: complex, m: float, n: float,
              z11: complex, z12: complex, z21: complex, z22: complex,
              nodes: int) -> complex:
    """One trapezoid pass of the branch-resolved matrix-coefficient contour
    integral over |s| = 1 (valid on SU(1,1), where conj(z11) = z22)."""
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    s = np.exp(1j * theta)
    base = np.abs(s * z11 + z21)
    if np.any(base < 1e-14):
        raise ArithmeticError("branch factor vanished at a contour node")
    two_m = int(round(2 * m))
    mn = int(round(m + n))
    vals = base ** (2.0 * (l - m)) * (z12 + z22 / s) ** two_m * s**mn
    return complex(np.mean(vals))
