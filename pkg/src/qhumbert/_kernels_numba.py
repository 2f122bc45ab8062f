"""numba kernels. Mirrors ``_kernels_numpy`` one function for one function."""

import numpy as np

from ._accel import njit

OK = 0
MAXED = 1
BAD_RATIO = 2


@njit(cache=True, nogil=True)
def _nadd(s, c, v):
    # Neumaier compensated addition, componentwise on complex numbers
    t = s + v
    if abs(s.real) >= abs(v.real):
        cr = c.real + ((s.real - t.real) + v.real)
    else:
        cr = c.real + ((v.real - t.real) + s.real)
    if abs(s.imag) >= abs(v.imag):
        ci = c.imag + ((s.imag - t.imag) + v.imag)
    else:
        ci = c.imag + ((v.imag - t.imag) + s.imag)
    return t, complex(cr, ci)


@njit(cache=True, nogil=True)
def qpinf(a, q, tol, max_terms, consecutive_small):
    p = 1.0 + 0.0j
    aq = a
    small = 0
    for r in range(max_terms):
        p *= 1.0 - aq
        if abs(aq) < tol:
            small += 1
            if small >= consecutive_small:
                return p, r + 1, abs(aq), OK
        else:
            small = 0
        aq *= q
    return p, max_terms, abs(aq), MAXED


@njit(cache=True, nogil=True)
def qpinf_array(a, q, tol, max_terms, consecutive_small):
    out = np.empty(a.size, np.complex128)
    used = 0
    status = OK
    for i in range(a.size):
        v, n, _, st = qpinf(a[i], q, tol, max_terms, consecutive_small)
        out[i] = v
        if n > used:
            used = n
        if st != OK:
            status = st
    return out, used, status


@njit(cache=True, nogil=True)
def rphis(numer, denom, z, q, tol, max_terms, consecutive_small):
    term = 1.0 + 0.0j
    s = 1.0 + 0.0j
    comp = 0.0j
    qn = 1.0 + 0.0j
    small = 0
    for n in range(max_terms):
        num = z
        for i in range(numer.size):
            num *= 1.0 - numer[i] * qn
        den = 1.0 - qn * q
        for j in range(denom.size):
            den *= 1.0 - denom[j] * qn
        if den == 0:
            return s + comp, n + 1, abs(term), BAD_RATIO
        term = term * (num / den)
        if not (np.isfinite(term.real) and np.isfinite(term.imag)):
            return s + comp, n + 1, abs(term), BAD_RATIO
        s, comp = _nadd(s, comp, term)
        if abs(term) < tol * max(1.0, abs(s + comp)):
            small += 1
            if small >= consecutive_small:
                return s + comp, n + 2, abs(term), OK
        else:
            small = 0
        qn *= q
    return s + comp, max_terms, abs(term), MAXED


@njit(cache=True, nogil=True)
def humbert_sum(classical, q, num_m, num_n, num_k, den_m, x, y, init, tol, max_blocks, consecutive_small):
    """Antidiagonal summation of a Humbert-type double series.

    Term ratios are products of factors attached to ``m = n + k`` (shared by a
    whole antidiagonal), to ``n`` alone and to ``k`` alone. In q mode a
    parameter ``u`` contributes ``1 - u q^j``; in classical mode ``u + j``.
    """
    size = max_blocks + 2
    qp = np.empty(2 * size + 2, np.complex128)
    qp[0] = 1.0
    for j in range(1, qp.size):
        qp[j] = qp[j - 1] * q
    prev = np.zeros(size, np.complex128)
    cur = np.zeros(size, np.complex128)
    prev[0] = init
    s = init + 0.0j
    comp = 0.0j
    mag = abs(init)
    small = 1 if mag < tol * max(1.0, abs(s)) else 0
    for ell in range(1, max_blocks + 1):
        m = ell - 1
        fm = 1.0 + 0.0j
        dm = 1.0 + 0.0j
        for i in range(num_m.size):
            fm *= (num_m[i] + m) if classical else (1.0 - num_m[i] * qp[m])
        for i in range(den_m.size):
            dm *= (den_m[i] + m) if classical else (1.0 - den_m[i] * qp[m])
        if dm == 0:
            return s + comp, ell, mag, BAD_RATIO
        fm = fm / dm
        mag = 0.0
        for kappa in range(ell):
            n = m - kappa
            num = x * fm
            for i in range(num_n.size):
                num *= (num_n[i] + n) if classical else (1.0 - num_n[i] * qp[n])
            den = complex(n + 1.0) if classical else (1.0 - qp[n + 1])
            t = prev[kappa] * (num / den)
            cur[kappa] = t
        num = y * fm
        for i in range(num_k.size):
            num *= (num_k[i] + m) if classical else (1.0 - num_k[i] * qp[m])
        den = complex(m + 1.0) if classical else (1.0 - qp[m + 1])
        cur[ell] = prev[ell - 1] * (num / den)
        for kappa in range(ell + 1):
            t = cur[kappa]
            if not (np.isfinite(t.real) and np.isfinite(t.imag)):
                return s + comp, ell, mag, BAD_RATIO
            s, comp = _nadd(s, comp, t)
            mag += abs(t)
            prev[kappa] = t
        if mag < tol * max(1.0, abs(s + comp)):
            small += 1
            if small >= consecutive_small:
                return s + comp, ell + 1, mag, OK
        else:
            small = 0
    return s + comp, max_blocks + 1, mag, MAXED
