"""Real cyclotomic integers 2cos(2pi/m) and their height classification."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd
from typing import Dict, Optional

from .certify import (
    HEIGHT_AT_MOST_1,
    AnalysisReport,
    SearchBudget,
    analyze_F,
)
from .obstruct import MOD_P, NO_INTERLACING
from .poly import IntPolynomial
from .spectrum import squares_min_poly

_PHI: Dict[int, IntPolynomial] = {}
_PHI_LOCK = threading.Lock()

# membership list for height <= 2; the theorem is phrased as "only if" but
# the classification below is two-sided
HEIGHT_TWO_LIST = (1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24)


def euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def cyclotomic_poly(m: int) -> IntPolynomial:
    """Phi_m by dividing x^m - 1 by Phi_d over proper divisors d."""
    if m < 1:
        raise ValueError("m must be positive")
    with _PHI_LOCK:
        return _cyclotomic_locked(m)


def _cyclotomic_locked(m: int) -> IntPolynomial:
    if m in _PHI:
        return _PHI[m]
    num = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            num = num.exact_div(_cyclotomic_locked(d))
    _PHI[m] = num
    return num


def real_cyclotomic_min_poly(m: int) -> IntPolynomial:
    """Minimal polynomial of 2cos(2pi/m)."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return IntPolynomial((-2, 1))
    if m == 2:
        return IntPolynomial((2, 1))
    phi = list(cyclotomic_poly(m).coeffs)
    h = (len(phi) - 1) // 2
    psi = [0] * (h + 1)
    # x^h psi(x + 1/x) = Phi_m; peel top coefficients of x^(h-i) (x^2 + 1)^i
    binom_rows = [[1]]
    for i in range(1, h + 1):
        prev = binom_rows[-1]
        binom_rows.append([1] + [prev[j] + prev[j + 1] for j in range(i - 1)] + [1])
    for i in range(h, -1, -1):
        c = phi[h + i]
        psi[i] = c
        if c:
            for j, b in enumerate(binom_rows[i]):
                phi[h - i + 2 * j] -= c * b
    if any(phi):
        raise AssertionError(f"Phi_{m} is not of the form x^h psi(x + 1/x)")
    return IntPolynomial(tuple(psi))


def expected_square_degree(m: int) -> int:
    if m <= 4:
        return 1
    ph = euler_phi(m)
    return ph // 4 if m % 4 == 0 else ph // 2


@dataclass
class CycloReport:
    m: int
    psi: IntPolynomial
    F: IntPolynomial
    n: int
    degree_formula_ok: bool
    analysis: AnalysisReport

    @property
    def verdict(self) -> str:
        return self.analysis.verdict

    def summary(self) -> str:
        a = self.analysis
        if a.obstruction is not None:
            ob = a.obstruction
            if ob.kind == MOD_P:
                return f"mod {ob.p}: factor of degree {ob.degree}"
            if ob.kind == NO_INTERLACING:
                return f"no integer in gap {ob.gap}"
            return "three-adic argument"
        if a.certificate is not None:
            return f"certificate {a.certificate.a}, {a.certificate.vertex_count} vertices"
        if a.verdict == HEIGHT_AT_MOST_1:
            return a.method
        return a.diagnostics.get("budget", "")

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "psi": str(self.psi),
            "F": str(self.F),
            "n": self.n,
            "degree_formula_ok": self.degree_formula_ok,
            "verdict": self.verdict,
            "summary": self.summary(),
            "analysis": self.analysis.to_json(),
            "remark": "classification is two-sided: height <= 2 exactly for m in "
            + str(list(HEIGHT_TWO_LIST)),
        }


def classify_cyclotomic(m: int, budget: Optional[SearchBudget] = None) -> CycloReport:
    psi = real_cyclotomic_min_poly(m)
    F = squares_min_poly(psi)
    n = F.degree
    ok = n == expected_square_degree(m)
    if not ok:
        raise AssertionError(f"m = {m}: degree of lambda^2 is {n}, formula gives {expected_square_degree(m)}")
    # small degrees: factorization mod p is the sharper witness; large: interlacing
    order = (MOD_P, NO_INTERLACING) if n <= 4 else (NO_INTERLACING, MOD_P)
    report = analyze_F(F, budget, obstruction_order=order, zeta48=True)
    return CycloReport(m, psi, F, n, ok, report)
