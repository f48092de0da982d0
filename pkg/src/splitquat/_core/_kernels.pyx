# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in `_kernels_py`.

Scalar C loops over the node arrays; selected over the numpy backend at
import time when this extension built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt, pi

cnp.import_array()

ctypedef double complex dcomplex

cdef extern from "complex.h" nogil:
    double cabs(dcomplex)
    dcomplex csqrt(dcomplex)
    dcomplex cpow(dcomplex, dcomplex)
    dcomplex cexp(dcomplex)
    dcomplex conj(dcomplex)
    double creal(dcomplex)
    double cimag(dcomplex)


cdef inline dcomplex _ipow(dcomplex base, int k) nogil:
    cdef dcomplex out = 1.0
    cdef dcomplex b = base
    cdef int n = k
    if n < 0:
        b = 1.0 / b
        n = -n
    while n:
        if n & 1:
            out = out * b
        b = b * b
        n >>= 1
    return out


cdef inline dcomplex _J(int k, dcomplex s0) nogil:
    cdef bint inside = cabs(s0) < 1.0
    if k >= 0:
        if inside:
            return _ipow(s0, k)
        return 0.0
    if inside:
        return 0.0
    return -_ipow(s0, k)


cdef inline dcomplex _J2(int k, dcomplex s0) nogil:
    cdef bint inside = cabs(s0) < 1.0
    if k == 0:
        return 0.0
    if k >= 0:
        if inside:
            return k * _ipow(s0, k - 1)
        return 0.0
    if inside:
        return 0.0
    return -(k * _ipow(s0, k - 1))


cdef inline dcomplex _J4(int k, dcomplex s0) nogil:
    cdef double coef = k * (k - 1) * (k - 2) / 6.0
    cdef bint inside = cabs(s0) < 1.0
    if coef == 0.0:
        return 0.0
    if k >= 0:
        if inside:
            return coef * _ipow(s0, k - 3)
        return 0.0
    if inside:
        return 0.0
    return -(coef * _ipow(s0, k - 3))


def reciprocal_modes(C_in, P_in, Pp_in, p_list):
    cdef cnp.ndarray[dcomplex, ndim=1] C = np.ascontiguousarray(C_in, dtype=complex)
    cdef dcomplex P = P_in
    cdef dcomplex Pp = Pp_in
    cdef cnp.ndarray[long, ndim=1] ps = np.asarray(p_list, dtype=np.int64)
    cdef Py_ssize_t nC = C.shape[0], nP = ps.shape[0]
    cdef cnp.ndarray[dcomplex, ndim=2] out = np.empty((nP, nC), dtype=complex)
    cdef double scale = max(np.max(np.abs(C)), cabs(P), cabs(Pp), 1e-300)
    cdef double tiny = 1e-13 * scale
    cdef Py_ssize_t i, j
    cdef int p
    cdef dcomplex c, disc, sgnd, q, sa, sb, s0, val
    cdef double rootscale

    for j in range(nC):
        c = C[j]
        if cabs(P) < tiny and cabs(Pp) < tiny:
            for i in range(nP):
                out[i, j] = 1.0 / c if ps[i] == 0 else 0.0
            continue
        if cabs(P) < tiny:
            sa = -Pp / c
            for i in range(nP):
                out[i, j] = _J(-<int>ps[i], sa) / c
            continue
        if cabs(Pp) < tiny:
            sa = -c / P
            for i in range(nP):
                out[i, j] = _J(-<int>ps[i] - 1, sa) / P
            continue
        disc = csqrt(c * c - 4.0 * P * Pp)
        if creal(conj(c) * disc) >= 0.0:
            sgnd = disc
        else:
            sgnd = -disc
        q = -0.5 * (c + sgnd)
        sa = q / P
        sb = Pp / q if cabs(q) > 0.0 else 0.0
        rootscale = max(cabs(sa), cabs(sb)) + 1.0
        if cabs(sa - sb) < 1e-8 * rootscale:
            s0 = 0.5 * (sa + sb)
            for i in range(nP):
                out[i, j] = _J2(-<int>ps[i], s0) / P
        else:
            for i in range(nP):
                p = <int>ps[i]
                out[i, j] = (_J(-p, sa) - _J(-p, sb)) / (-sgnd)
    return out


def reciprocal_sq_modes(C_in, P_in, Pp_in, p_list):
    cdef cnp.ndarray[dcomplex, ndim=1] C = np.ascontiguousarray(C_in, dtype=complex)
    cdef dcomplex P = P_in
    cdef dcomplex Pp = Pp_in
    cdef cnp.ndarray[long, ndim=1] ps = np.asarray(p_list, dtype=np.int64)
    cdef Py_ssize_t nC = C.shape[0], nP = ps.shape[0]
    cdef cnp.ndarray[dcomplex, ndim=2] out = np.empty((nP, nC), dtype=complex)
    cdef double scale = max(np.max(np.abs(C)), cabs(P), cabs(Pp), 1e-300)
    cdef double tiny = 1e-13 * scale
    cdef Py_ssize_t i, j
    cdef int p, k
    cdef dcomplex c, disc, sgnd, q, sa, sb, s0, d
    cdef double rootscale

    for j in range(nC):
        c = C[j]
        if cabs(P) < tiny and cabs(Pp) < tiny:
            for i in range(nP):
                out[i, j] = 1.0 / (c * c) if ps[i] == 0 else 0.0
            continue
        if cabs(P) < tiny:
            sa = -Pp / c
            for i in range(nP):
                out[i, j] = _J2(1 - <int>ps[i], sa) / (c * c)
            continue
        if cabs(Pp) < tiny:
            sa = -c / P
            for i in range(nP):
                out[i, j] = _J2(-<int>ps[i] - 1, sa) / (P * P)
            continue
        disc = csqrt(c * c - 4.0 * P * Pp)
        if creal(conj(c) * disc) >= 0.0:
            sgnd = disc
        else:
            sgnd = -disc
        q = -0.5 * (c + sgnd)
        sa = q / P
        sb = Pp / q if cabs(q) > 0.0 else 0.0
        d = -sgnd
        rootscale = max(cabs(sa), cabs(sb)) + 1.0
        if cabs(sa - sb) < 1e-6 * rootscale:
            s0 = 0.5 * (sa + sb)
            for i in range(nP):
                out[i, j] = _J4(1 - <int>ps[i], s0) / (P * P)
        else:
            for i in range(nP):
                k = 1 - <int>ps[i]
                out[i, j] = (_J2(k, sa) + _J2(k, sb)) / (d * d) \
                    - 2.0 * P * (_J(k, sa) - _J(k, sb)) / (d * d * d)
    return out


def assoc_legendre_table(int lmax, x_in):
    cdef cnp.ndarray[double, ndim=1] x = np.ascontiguousarray(x_in, dtype=float)
    cdef Py_ssize_t n = x.shape[0]
    cdef cnp.ndarray[double, ndim=3] table = np.zeros((lmax + 1, lmax + 1, n))
    cdef Py_ssize_t i
    cdef int m, l
    cdef double sx
    for i in range(n):
        sx = sqrt(max(1.0 - x[i] * x[i], 0.0))
        for m in range(lmax + 1):
            if m == 0:
                table[0, 0, i] = 1.0
            else:
                table[m, m, i] = table[m - 1, m - 1, i] * (-(2 * m - 1)) * sx
            if m == lmax:
                break
            table[m, m + 1, i] = (2 * m + 1) * x[i] * table[m, m, i]
            for l in range(m + 1, lmax):
                table[m, l + 1, i] = ((2 * l + 1) * x[i] * table[m, l, i]
                                      - (l + m) * table[m, l - 1, i]) / (l - m + 1)
    return table


def hyp2f1_series_arr(a_in, b_in, c_in, z_in, double tol=1e-14, int kmax=4000):
    cdef dcomplex a = a_in, b = b_in, c = c_in
    cdef cnp.ndarray[dcomplex, ndim=1] z = np.ascontiguousarray(z_in, dtype=complex)
    cdef Py_ssize_t n = z.shape[0], i
    cdef cnp.ndarray[dcomplex, ndim=1] out = np.empty(n, dtype=complex)
    cdef dcomplex term, total, ratio
    cdef int k
    cdef bint ok
    for i in range(n):
        term = 1.0
        total = 1.0
        ok = False
        for k in range(kmax):
            term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z[i]
            total = total + term
            if cabs(term) <= tol * max(cabs(total), 1e-30):
                ok = True
                break
        if not ok:
            raise RuntimeError("2F1 series (array) did not converge")
        out[i] = total
    return out


def contour_t(l_in, double m, double n,
              z11_in, z12_in, z21_in, z22_in, int nodes):
    cdef dcomplex l = l_in
    cdef dcomplex z11 = z11_in, z12 = z12_in, z21 = z21_in, z22 = z22_in
    cdef dcomplex total = 0.0, s, w
    cdef double base, theta
    cdef int j
    cdef int two_m = <int>round(2 * m)
    cdef int mn = <int>round(m + n)
    for j in range(nodes):
        theta = 2.0 * pi * j / nodes
        s = cexp(1j * theta)
        base = cabs(s * z11 + z21)
        if base < 1e-14:
            raise ArithmeticError("branch factor vanished at a contour node")
        w = cpow(base, 2.0 * (l - m)) * _ipow(z12 + z22 / s, two_m) * _ipow(s, mn)
        total = total + w
    return complex(total / nodes)
