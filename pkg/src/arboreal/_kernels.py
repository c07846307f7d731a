"""Mod-p polynomial kernels used by distinct-degree factorization.

Polynomials are int64 arrays, ascending coefficients, entries in [0, p).
Products stay below p**2 * deg, far from int64 overflow for the small
primes this package scans.

Two implementations exist: numba ``@njit`` loops and a numpy fallback.
``ARBOREAL_DISABLE_NUMBA=1`` (or a missing numba) selects the fallback.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["BACKEND", "mulmod", "powmod", "kernels"]


def _np_trim(a):
    n = a.shape[0]
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _np_reduce(c, m, p):
    dm = m.shape[0] - 1
    c = c % p
    for i in range(c.shape[0] - 1, dm - 1, -1):
        t = c[i]
        if t:
            c[i - dm:i + 1] = (c[i - dm:i + 1] - t * m) % p
    return c[:dm] if c.shape[0] > dm else c


def np_mulmod(a, b, m, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    c = np.convolve(a, b) % p
    return _np_trim(_np_reduce(c.astype(np.int64), m, p))


def np_powmod(a, e, m, p):
    result = np.ones(1, dtype=np.int64)
    base = _np_trim(_np_reduce(a.astype(np.int64).copy(), m, p))
    while e > 0:
        if e & 1:
            result = np_mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = np_mulmod(base, base, m, p)
    return result


def _build_numba():
    from numba import njit

    @njit(cache=True)
    def nb_mulmod(a, b, m, p):
        na, nb = a.shape[0], b.shape[0]
        if na == 0 or nb == 0:
            return np.zeros(0, dtype=np.int64)
        c = np.zeros(na + nb - 1, dtype=np.int64)
        for i in range(na):
            ai = a[i]
            if ai != 0:
                for j in range(nb):
                    c[i + j] = (c[i + j] + ai * b[j]) % p
        dm = m.shape[0] - 1
        for i in range(c.shape[0] - 1, dm - 1, -1):
            t = c[i]
            if t != 0:
                for j in range(dm + 1):
                    c[i - dm + j] = (c[i - dm + j] - t * m[j]) % p
        n = min(c.shape[0], dm)
        while n > 0 and c[n - 1] == 0:
            n -= 1
        return c[:n].copy()

    @njit(cache=True)
    def nb_powmod(a, e, m, p):
        result = np.ones(1, dtype=np.int64)
        base = nb_mulmod(a, np.ones(1, dtype=np.int64), m, p)
        while e > 0:
            if e & 1:
                result = nb_mulmod(result, base, m, p)
            e >>= 1
            if e > 0:
                base = nb_mulmod(base, base, m, p)
        return result

    return nb_mulmod, nb_powmod


_NUMBA = None
if os.environ.get("ARBOREAL_DISABLE_NUMBA", "") not in ("1", "true", "yes"):
    try:
        _NUMBA = _build_numba()
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _NUMBA = None

BACKEND = "numba" if _NUMBA is not None else "numpy"


def kernels(backend: str | None = None):
    """Return ``(mulmod, powmod)`` for the requested backend."""
    backend = backend or BACKEND
    if backend == "numba":
        if _NUMBA is None:
            _built = _build_numba()
            return _built
        return _NUMBA
    if backend == "numpy":
        return np_mulmod, np_powmod
    raise ValueError(f"unknown backend {backend!r}")


mulmod, powmod = kernels()
