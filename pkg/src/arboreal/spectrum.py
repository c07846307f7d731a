"""The squared spectrum of lambda and its interlacing sets.

``F`` is the minimal polynomial of lambda**2; its roots are the squares of
the positive conjugates, isolated by rational intervals that never straddle
an integer, so every "which integers lie between two roots" question is
answered by integer comparisons.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from . import gf
from .poly import (
    IntPolynomial,
    RationalInterval,
    integer_poly_gcd,
    isolate_positive_roots,
    refine_interval,
    sign_at,
    sign_at_integer,
    squarefree_part,
)

LEFT = "left"
RIGHT = "right"


def squares_min_poly(f: IntPolynomial) -> IntPolynomial:
    """Monic F whose roots are the distinct squares of the roots of f."""
    if not f or not f.is_monic():
        raise ValueError("f must be monic")
    h = f * f.compose_neg()
    if f.degree % 2:
        h = -h
    if any(h[i] for i in range(1, len(h), 2)):
        raise AssertionError("f(x) f(-x) is not even")
    G = IntPolynomial(h.coeffs[::2])
    F = squarefree_part(G)
    if not F.is_monic():
        raise AssertionError("squarefree part of a monic polynomial must be monic")
    return F


@dataclass(frozen=True)
class SquaresSpectrum:
    """F together with integer-resolved isolating intervals for its roots."""

    F: IntPolynomial
    roots: Tuple[RationalInterval, ...]
    floors: Tuple[int, ...]
    exact: Tuple[bool, ...]

    @property
    def n(self) -> int:
        return len(self.roots)

    def approx(self, width=Fraction(1, 2 ** 40)) -> List[float]:
        """Floating-point root values, from intervals refined to ``width``."""
        out = []
        for iv, e in zip(self.roots, self.exact):
            if e:
                out.append(float(self.floors[len(out)]))
            else:
                out.append(float(refine_interval(self.F, iv, width).midpoint))
        return out

    def least_above(self, i: int) -> int:
        """Least integer strictly greater than root i (0-based)."""
        return self.floors[i] + 1

    def greatest_below(self, i: int) -> int:
        """Greatest integer strictly less than root i (0-based)."""
        return self.floors[i] - 1 if self.exact[i] else self.floors[i]

    def gap_integers(self, i: int) -> range:
        """Integers strictly between roots i and i+1 (0-based)."""
        return range(self.least_above(i), self.greatest_below(i + 1) + 1)


def squared_spectrum(F: IntPolynomial) -> SquaresSpectrum:
    if not F or not F.is_monic():
        raise ValueError("F must be monic")
    if F.degree < 1:
        raise ValueError("F must have positive degree")
    if integer_poly_gcd(F, F.derivative()).degree > 0:
        raise ValueError("F is not squarefree")
    ivs = isolate_positive_roots(F)
    if len(ivs) != F.degree:
        raise ValueError("F has a non-real or non-positive root")
    roots, floors, exact = [], [], []
    for iv in ivs:
        lo, hi = iv.lo, iv.hi
        is_int = False
        while True:
            k = lo.__floor__() + 1
            if k >= hi:
                break
            s = sign_at_integer(F, k)
            if s == 0:
                is_int = True
                break
            if s == sign_at(F, hi):
                hi = Fraction(k)
            else:
                lo = Fraction(k)
        if is_int:
            floors.append(k)
            # keep the isolating interval tight around the integer root
            lo, hi = max(lo, Fraction(k) - Fraction(1, 2)), min(hi, Fraction(k) + Fraction(1, 2))
        else:
            floors.append(lo.__floor__())
        roots.append(RationalInterval(lo, hi))
        exact.append(is_int)
    return SquaresSpectrum(F, tuple(roots), tuple(floors), tuple(exact))


def least_integer_in_gap(spec: SquaresSpectrum, i: int) -> Optional[int]:
    """Least k with root_i < k < root_{i+1}; ``i`` is 1-based as in the literature."""
    if not 1 <= i < spec.n:
        raise IndexError(f"gap index {i} out of range 1..{spec.n - 1}")
    r = spec.gap_integers(i - 1)
    return r.start if len(r) else None


@dataclass(frozen=True)
class InterlacingSet:
    ks: Tuple[int, ...]
    side: str

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        if any(a >= b for a, b in zip(self.ks, self.ks[1:])):
            raise ValueError("ks must be strictly increasing")

    @property
    def sign(self) -> int:
        return 1 if self.side == LEFT else -1

    def __len__(self):
        return len(self.ks)

    def __iter__(self):
        return iter(self.ks)


def expected_signs(n: int, side: str) -> List[int]:
    """Signs of F(k_1), ..., F(k_n) for a monic F of degree n.

    A right set ends above every root (sign +1); a left set ends below the
    top root (sign -1). Signs alternate going down.
    """
    last = 1 if side == RIGHT else -1
    return [last * (-1) ** (n - 1 - i) for i in range(n)]


def is_interlacing(F: IntPolynomial, ks: Sequence[int], side: str) -> bool:
    """Sign-only test: no root values needed."""
    ks = list(ks)
    if len(ks) != F.degree or any(a >= b for a, b in zip(ks, ks[1:])):
        return False
    if ks and ks[0] < 0:
        return False
    return [sign_at_integer(F, k) for k in ks] == expected_signs(len(ks), side)


def _choices(spec: SquaresSpectrum, side: str, max_k: Optional[int]) -> List[range]:
    n = spec.n
    if side == LEFT:
        out = [range(0, spec.greatest_below(0) + 1)]
        out += [spec.gap_integers(i) for i in range(n - 1)]
    else:
        out = [spec.gap_integers(i) for i in range(n - 1)]
        top = spec.least_above(n - 1)
        out.append(range(top, (max_k if max_k is not None else top) + 1))
    if max_k is not None:
        out = [range(r.start, min(r.stop, max_k + 1)) for r in out]
    return out


def find_interlacing(spec: SquaresSpectrum, side: str) -> Optional[InterlacingSet]:
    """Canonical (smallest-integer) interlacing set, or None."""
    ks = []
    for r in _choices(spec, side, None):
        if not len(r):
            return None
        ks.append(r.start)
    return InterlacingSet(tuple(ks), side)


@dataclass(frozen=True)
class EnumBudget:
    max_k: int
    max_sets: int = 5000


def iter_interlacing(spec: SquaresSpectrum, side: str, max_k: int) -> Iterator[InterlacingSet]:
    """All sets with entries <= max_k, lexicographic on (k_n, ..., k_1)."""
    choices = _choices(spec, side, max_k)
    if any(not len(r) for r in choices):
        return
    for rev in itertools.product(*reversed(choices)):
        ks = rev[::-1]
        if not is_interlacing(spec.F, ks, side):
            raise AssertionError(f"enumerated set {ks} fails sign alternation")
        yield InterlacingSet(ks, side)


def enumerate_interlacing(spec: SquaresSpectrum, side: str, budget: EnumBudget) -> List[InterlacingSet]:
    return list(itertools.islice(iter_interlacing(spec, side, budget.max_k), budget.max_sets))


def irreducibility_witness(F: IntPolynomial, max_prime: int = 100) -> Optional[int]:
    """A prime p <= max_prime modulo which monic F is irreducible, if any."""
    if F.degree <= 1:
        return None
    for p in gf.primes_below(max_prime + 1):
        if gf.is_irreducible_mod(F, p):
            return p
    return None


def _subset_sums(degrees: Sequence[int]) -> set:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def irreducibility_evidence(F: IntPolynomial, max_prime: int = 100) -> Optional[str]:
    """Certify irreducibility of monic F from mod-p factor degrees.

    A factor of degree d over Q reduces to a product of mod-p factors, so d is
    a subset sum of every mod-p degree pattern (p not dividing the
    discriminant).  If no 0 < d < deg F survives all primes, F is irreducible.
    """
    n = F.degree
    if n <= 1:
        return "linear"
    possible = set(range(1, n))
    used = []
    for p in gf.primes_below(max_prime + 1):
        if any(e > 1 for _, e in gf.squarefree_decomposition(gf.reduce(F, p), p)):
            continue  # p divides the discriminant
        degs = gf.factor_degrees(F, p)
        if degs == [n]:
            return f"irreducible mod {p}"
        before = set(possible)
        possible &= _subset_sums(degs)
        if possible != before:
            used.append(p)
        if not possible:
            return "factor degrees mod " + ", ".join(map(str, used))
    return None


def has_integer_root(F: IntPolynomial) -> bool:
    """Rational root test for monic F (rational roots are integers dividing F(0))."""
    c0 = F[0]
    if c0 == 0:
        return True
    a = abs(c0)
    d = 1
    while d * d <= a:
        if a % d == 0:
            for r in (d, -d, a // d, -(a // d)):
                if F(r) == 0:
                    return True
        d += 1
    return False
