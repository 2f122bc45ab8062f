"""Vectorized numpy kernels, the fallback for ``_kernels_numba``.

Same signatures and return tuples as the numba versions; results agree to
rounding, not bit for bit.
"""

import math

import numpy as np

OK = 0
MAXED = 1
BAD_RATIO = 2

_CHUNK = 256


class _Neumaier:
    __slots__ = ("s", "c")

    def __init__(self, s=0j):
        self.s = complex(s)
        self.c = 0j

    def add(self, v):
        s, v = self.s, complex(v)
        t = s + v
        if abs(s.real) >= abs(v.real):
            cr = (s.real - t.real) + v.real
        else:
            cr = (v.real - t.real) + s.real
        if abs(s.imag) >= abs(v.imag):
            ci = (s.imag - t.imag) + v.imag
        else:
            ci = (v.imag - t.imag) + s.imag
        self.s = t
        self.c += complex(cr, ci)

    @property
    def value(self):
        return self.s + self.c


def _block_sum(terms):
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def qpinf(a, q, tol, max_terms, consecutive_small):
    a = complex(a)
    if a == 0:
        return 1.0 + 0j, consecutive_small, 0.0, OK
    absq = abs(q)
    # first r with |a q^r| < tol; the magnitudes are monotone in r
    r0 = max(0, math.ceil(math.log(tol / abs(a)) / math.log(absq))) if abs(a) >= tol else 0
    while r0 > 0 and abs(a) * absq ** (r0 - 1) < tol:
        r0 -= 1
    while abs(a) * absq**r0 >= tol:
        r0 += 1
    needed = r0 + consecutive_small
    status = OK
    if needed > max_terms:
        needed, status = max_terms, MAXED
    p = 1.0 + 0j
    for start in range(0, needed, 4096):
        r = np.arange(start, min(needed, start + 4096))
        p *= np.prod(1.0 - a * np.power(complex(q), r))
    return p, needed, abs(a) * absq ** (needed - 1), status


def qpinf_array(a, q, tol, max_terms, consecutive_small):
    a = np.asarray(a, dtype=np.complex128)
    out = np.ones(a.shape, np.complex128)
    amax = float(np.max(np.abs(a))) if a.size else 0.0
    if amax == 0.0:
        return out, consecutive_small, OK
    absq = abs(q)
    r0 = 0
    if amax >= tol:
        r0 = max(0, math.ceil(math.log(tol / amax) / math.log(absq)))
        while amax * absq**r0 >= tol:
            r0 += 1
    needed = r0 + consecutive_small
    status = OK
    if needed > max_terms:
        needed, status = max_terms, MAXED
    step = max(1, 2**16 // max(1, a.size))
    for start in range(0, needed, step):
        r = np.arange(start, min(needed, start + step))
        out *= np.prod(1.0 - a[:, None] * np.power(complex(q), r)[None, :], axis=1)
    return out, needed, status


def rphis(numer, denom, z, q, tol, max_terms, consecutive_small):
    numer = np.asarray(numer, np.complex128)
    denom = np.asarray(denom, np.complex128)
    acc = _Neumaier(1.0)
    last = 1.0 + 0j
    small = 0
    n0 = 0
    while n0 < max_terms:
        n = np.arange(n0, min(max_terms, n0 + _CHUNK))
        qn = np.power(complex(q), n)
        num = np.full(n.shape, complex(z))
        for a in numer:
            num *= 1.0 - a * qn
        den = 1.0 - qn * q
        for b in denom:
            den *= 1.0 - b * qn
        if np.any(den == 0):
            return acc.value, n0 + 1, abs(last), BAD_RATIO
        terms = last * np.cumprod(num / den)
        if not np.all(np.isfinite(terms)):
            return acc.value, n0 + 1, abs(last), BAD_RATIO
        for i, t in enumerate(terms):
            acc.add(t)
            if abs(t) < tol * max(1.0, abs(acc.value)):
                small += 1
                if small >= consecutive_small:
                    return acc.value, n0 + i + 2, abs(t), OK
            else:
                small = 0
        last = terms[-1]
        n0 += n.size
    return acc.value, max_terms, abs(last), MAXED


def block_recurrence_sum(init, ratio_n, ratio_k, tol, max_blocks, consecutive_small):
    """Antidiagonal summation driven by vectorized ratio callables.

    Block ``l`` holds ``T(l - kappa, kappa)``; every entry but the last is the
    previous block's entry times ``ratio_n``, and the last is the previous
    block's last entry times ``ratio_k``. No division, so vanishing terms stay
    exactly zero.
    """
    prev = np.array([complex(init)])
    acc = _Neumaier(init)
    mag = abs(complex(init))
    small = 1 if mag < tol * max(1.0, abs(acc.value)) else 0
    for ell in range(1, max_blocks + 1):
        k_prev = np.arange(ell)
        n_prev = ell - 1 - k_prev
        rn = np.asarray(ratio_n(n_prev, k_prev), dtype=np.complex128)
        rk = complex(np.asarray(ratio_k(np.array([0]), np.array([ell - 1])), dtype=np.complex128).ravel()[0])
        cur = np.empty(ell + 1, np.complex128)
        with np.errstate(invalid="ignore", over="ignore"):
            # a non-finite ratio is reported below as BAD_RATIO
            cur[:ell] = prev * rn
            cur[ell] = prev[-1] * rk
        if not np.all(np.isfinite(cur)):
            return acc.value, ell, mag, BAD_RATIO
        acc.add(_block_sum(cur))
        mag = float(np.sum(np.abs(cur)))
        prev = cur
        if mag < tol * max(1.0, abs(acc.value)):
            small += 1
            if small >= consecutive_small:
                return acc.value, ell + 1, mag, OK
        else:
            small = 0
    return acc.value, max_blocks + 1, mag, MAXED


def humbert_ratios(classical, q, num_m, num_n, num_k, den_m, x, y):
    """Vectorized ``(ratio_n, ratio_k)`` for a Humbert-type double series."""
    q = complex(q)

    def fac(params, j):
        out = np.ones(j.shape, np.complex128)
        for u in params:
            out *= (u + j) if classical else (1.0 - u * np.power(q, j))
        return out

    def step(j):
        return (j + 1.0).astype(np.complex128) if classical else 1.0 - np.power(q, j + 1)

    def ratio_n(n, k):
        m = n + k
        with np.errstate(divide="ignore", invalid="ignore"):
            return x * fac(num_m, m) * fac(num_n, n) / (fac(den_m, m) * step(n))

    def ratio_k(n, k):
        m = n + k
        with np.errstate(divide="ignore", invalid="ignore"):
            return y * fac(num_m, m) * fac(num_k, k) / (fac(den_m, m) * step(k))

    return ratio_n, ratio_k


def humbert_sum(classical, q, num_m, num_n, num_k, den_m, x, y, init, tol, max_blocks, consecutive_small):
    rn, rk = humbert_ratios(classical, q, num_m, num_n, num_k, den_m, complex(x), complex(y))
    return block_recurrence_sum(init, rn, rk, tol, max_blocks, consecutive_small)
