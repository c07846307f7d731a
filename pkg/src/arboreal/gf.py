"""Polynomials over a prime field F_p: squarefree splitting and DDF.

Dense lists of ints in [0, p), ascending order, no trailing zeros.
"""
from __future__ import annotations

from typing import List, Tuple

import numpy as np

from . import _kernels
from .poly import IntPolynomial

Poly = List[int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_below(n: int) -> List[int]:
    return [q for q in range(2, n) if is_prime(q)]


def _trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(F: IntPolynomial, p: int) -> Poly:
    return _trim([c % p for c in F.coeffs])


def monic(a: Poly, p: int) -> Poly:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def divmod_(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        t = r[i] * inv % p
        q[i - db] = t
        if t:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - t * b[j]) % p
    return _trim(q), _trim(r[:db])


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p) if a else a


def derivative(a: Poly, p: int) -> Poly:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def pth_root(a: Poly, p: int) -> Poly:
    # over F_p, (sum c_i x^(ip))^(1/p) = sum c_i x^i
    return _trim([a[i] for i in range(0, len(a), p)])


def squarefree_decomposition(f: Poly, p: int) -> List[Tuple[Poly, int]]:
    """Pairs (g, e) with f = prod g**e, each g squarefree and monic."""
    f = monic(f, p)
    if len(f) <= 1:
        return []
    df = derivative(f, p)
    if not df:
        return [(g, e * p) for g, e in squarefree_decomposition(pth_root(f, p), p)]
    out = []
    c = gcd(f, df, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, e * p) for g, e in squarefree_decomposition(pth_root(c, p), p))
    return out


def distinct_degree(g: Poly, p: int) -> List[int]:
    """Irreducible factor degrees of a squarefree monic g, with multiplicity."""
    powmod = _kernels.powmod
    degrees: List[int] = []
    d = 1
    x = [0, 1]
    h = x
    while len(g) - 1 >= 2 * d:
        h_arr = powmod(np.array(h, dtype=np.int64), p, np.array(g, dtype=np.int64), p)
        h = _trim([int(c) for c in h_arr])
        u = gcd(g, sub(h, x, p), p)
        if len(u) > 1:
            degrees.extend([d] * ((len(u) - 1) // d))
            g = divmod_(g, u, p)[0]
            h = divmod_(h, g, p)[1]
        d += 1
    if len(g) > 1:
        degrees.append(len(g) - 1)
    return degrees


def factor_degrees(F: IntPolynomial, p: int) -> List[int]:
    """Multiset (sorted list) of irreducible factor degrees of F mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = reduce(F, p)
    if not f:
        raise ValueError(f"polynomial vanishes mod {p}")
    out: List[int] = []
    for g, e in squarefree_decomposition(f, p):
        out.extend(d for d in distinct_degree(g, p) for _ in range(e))
    return sorted(out)


def is_irreducible_mod(F: IntPolynomial, p: int) -> bool:
    f = reduce(F, p)
    return len(f) - 1 == F.degree and factor_degrees(F, p) == [F.degree]
