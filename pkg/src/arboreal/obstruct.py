"""Refutation evidence: missing interlacing sets, mod-p factor degrees, and
the three-adic computation for 2cos(2pi/48)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import gf
from .linalg import det_fraction, solve_fraction
from .poly import IntPolynomial
from .spectrum import SquaresSpectrum, least_integer_in_gap

NO_INTERLACING = "no_interlacing"
MOD_P = "mod_p"
ZETA48 = "zeta48_three_adic"

ZETA48_F = IntPolynomial((1, -16, 20, -8, 1))


@dataclass(frozen=True)
class Zeta48Report:
    k_max: int
    y0: Fraction
    detM: Fraction
    bk0_values: Dict[int, Fraction]
    all_three_integral: bool
    fk_mod3_all_one: bool

    def to_json(self) -> dict:
        return {
            "kind": ZETA48,
            "y0": str(self.y0),
            "detM": int(self.detM) if self.detM.denominator == 1 else str(self.detM),
            "k_max": self.k_max,
            "all_three_integral": self.all_three_integral,
            "F_k_mod_3_all_one": self.fk_mod3_all_one,
            "bk0": {str(k): str(v) for k, v in self.bk0_values.items()},
        }


@dataclass(frozen=True)
class Obstruction:
    kind: str
    detail: str
    gap: Optional[int] = None
    p: Optional[int] = None
    degree: Optional[int] = None
    report: Optional[Zeta48Report] = field(default=None, repr=False)

    def to_json(self) -> dict:
        if self.kind == MOD_P:
            return {"kind": MOD_P, "p": self.p, "degree": self.degree, "detail": self.detail}
        if self.kind == NO_INTERLACING:
            return {"kind": NO_INTERLACING, "gap": self.gap, "detail": self.detail}
        out = self.report.to_json()
        out["detail"] = self.detail
        return out

    def recheck(self, F: IntPolynomial, spec: Optional[SquaresSpectrum] = None) -> bool:
        """Re-derive the obstruction from scratch."""
        if self.kind == MOD_P:
            return self.degree > self.p and self.degree in modp_factor_degrees(F, self.p)
        if self.kind == NO_INTERLACING:
            return spec is not None and least_integer_in_gap(spec, self.gap) is None
        if self.kind == ZETA48:
            r = zeta48_three_adic_report(self.report.k_max)
            return F == ZETA48_F and r.y0 == Fraction(1, 6) and r.all_three_integral
        return False


def modp_factor_degrees(F: IntPolynomial, p: int) -> List[int]:
    """Sorted multiset of irreducible factor degrees of F mod p."""
    return gf.factor_degrees(F, p)


def modp_obstruction(F: IntPolynomial) -> Optional[Tuple[int, int]]:
    """First (p, d), p < deg F ascending, with an irreducible factor of degree d > p."""
    for p in gf.primes_below(F.degree):
        if F.lc % p == 0:
            continue
        big = [d for d in modp_factor_degrees(F, p) if d > p]
        if big:
            return p, max(big)
    return None


def modp_obstruction_record(F: IntPolynomial) -> Optional[Obstruction]:
    hit = modp_obstruction(F)
    if hit is None:
        return None
    p, d = hit
    return Obstruction(
        MOD_P,
        f"F mod {p} has an irreducible factor of degree {d} > {p}",
        p=p,
        degree=d,
    )


def no_interlacing_obstruction(spec: SquaresSpectrum) -> Optional[Obstruction]:
    for i in range(1, spec.n):
        if least_integer_in_gap(spec, i) is None:
            return Obstruction(
                NO_INTERLACING,
                f"no integer lies strictly between root {i} and root {i + 1} of F",
                gap=i,
            )
    return None


def inverse_shift_coords(F: IntPolynomial, k: int) -> List[Fraction]:
    """Coordinates of 1/(y - k) in the power basis 1, y, ..., y^(n-1) of Q[y]/F.

    From F(y) - F(k) = (y - k) Q_k(y) and F(y) = 0: 1/(y - k) = -Q_k(y)/F(k).
    """
    fk = F(k)
    if fk == 0:
        raise ZeroDivisionError(f"F({k}) = 0")
    q = (F - IntPolynomial((fk,))).exact_div(IntPolynomial((-k, 1)))
    n = F.degree
    return [Fraction(-q[i], fk) for i in range(n)]


def zeta48_three_adic_report(k_max: int = 100) -> Zeta48Report:
    """Reproduce the mod-3 argument ruling out 2cos(2pi/48).

    Basis 1/y, 1/(y-1), 1/(y-2), 1/(y-3) of Q(y), y = lambda**2.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    F = ZETA48_F
    cols = [inverse_shift_coords(F, j) for j in range(4)]
    M = [[cols[j][i] for j in range(4)] for i in range(4)]
    detM = det_fraction(M)
    y = solve_fraction(M, [1, 0, 0, 0])
    bk0: Dict[int, Fraction] = {}
    for k in range(4, k_max + 1):
        ck = inverse_shift_coords(F, k)
        Mk = [[ck[i]] + row[1:] for i, row in enumerate(M)]
        bk0[k] = det_fraction(Mk) / detM
    three_integral = all(v.denominator % 3 for v in bk0.values())
    fk_one = all(F(k) % 3 == 1 for k in range(0, k_max + 1))
    return Zeta48Report(k_max, y[0], detM, bk0, three_integral, fk_one)


def zeta48_obstruction(k_max: int = 100) -> Obstruction:
    r = zeta48_three_adic_report(k_max)
    if not (r.y0 == Fraction(1, 6) and r.all_three_integral and r.fk_mod3_all_one):
        raise AssertionError("three-adic computation did not reproduce")
    return Obstruction(
        ZETA48,
        "coefficient of 1/lambda^2 must equal 1/6, but every other term contributes "
        "a 3-integral amount (checked for k = 4..%d)" % k_max,
        report=r,
    )
