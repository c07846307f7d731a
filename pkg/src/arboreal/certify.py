"""Weight vectors, the integer monoid of attainable sums, and certificates.

A certificate is a map ``k -> a_k`` of positive integers with
``sum a_k / (lambda**2 - k) == 1``.  Every claim in this module is checked as
the polynomial congruence

    sum_k a_k prod_{j != k} (x - j)  ==  value * prod_j (x - j)   (mod F)

before it is handed out.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .obstruct import (
    MOD_P,
    NO_INTERLACING,
    ZETA48_F,
    Obstruction,
    modp_obstruction_record,
    no_interlacing_obstruction,
    zeta48_obstruction,
)
from .poly import IntPolynomial
from .spectrum import (
    LEFT,
    RIGHT,
    InterlacingSet,
    SquaresSpectrum,
    find_interlacing,
    has_integer_root,
    irreducibility_evidence,
    is_interlacing,
    iter_interlacing,
    least_integer_in_gap,
    squared_spectrum,
    squares_min_poly,
)

HEIGHT_AT_MOST_1 = "height_at_most_1"
IN_A2 = "in_A2"
NOT_IN_A2 = "not_in_A2"
UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# exact identity checks


def _rem_monic(c: List[int], F: IntPolynomial) -> List[int]:
    n = F.degree
    f = F.coeffs
    for i in range(len(c) - 1, n - 1, -1):
        t = c[i]
        if t:
            for j in range(n):
                c[i - n + j] -= t * f[j]
            c[i] = 0
    return c[:n]


def identity_holds(F: IntPolynomial, coeffs: Mapping[int, int], value: int) -> bool:
    """Check sum_k coeffs[k]/(y - k) == value modulo F (F monic)."""
    keys = sorted(coeffs)
    prod = IntPolynomial((1,))
    for j in keys:
        prod = prod * IntPolynomial((-j, 1))
    total = prod * (-value)
    for k in keys:
        a = coeffs[k]
        if a:
            # prod / (x - k) by synthetic division
            q = _synthetic_div(prod.coeffs, k)
            total = total + IntPolynomial(tuple(a * c for c in q))
    rem = _rem_monic(list(total.coeffs), F)
    return not any(rem)


def _synthetic_div(c: Sequence[int], k: int) -> List[int]:
    n = len(c) - 1
    out = [0] * n
    acc = 0
    for i in range(n, 0, -1):
        acc = acc * k + c[i]
        out[i - 1] = acc
    return out


def verify_certificate(F: IntPolynomial, a: Mapping[int, int]) -> bool:
    """True iff sum a_k/(lambda^2 - k) = 1 for every root lambda^2 of F."""
    a = {int(k): int(v) for k, v in a.items() if v}
    if any(v < 0 for v in a.values()):
        return False
    for k in a:
        if F(k) == 0:
            raise ValueError(f"F({k}) = 0: key {k} is a root of F")
    if not a:
        return False
    return identity_holds(F, a, 1)


def vertex_count(a: Mapping[int, int]) -> int:
    return 1 + sum(v * (k + 1) for k, v in a.items())


# ---------------------------------------------------------------------------
# weight vectors and monoid elements


@dataclass(frozen=True)
class WeightVector:
    F: IntPolynomial
    ks: InterlacingSet
    v: Tuple[Fraction, ...]
    delta: int

    @property
    def sign(self) -> int:
        return self.ks.sign

    @property
    def side(self) -> str:
        return self.ks.side

    def as_map(self) -> Dict[int, Fraction]:
        return dict(zip(self.ks.ks, self.v))


def weight_vector(F: IntPolynomial, ks: InterlacingSet) -> WeightVector:
    """v_i = -F(k_i) / prod_{j != i}(k_i - k_j) and its common denominator."""
    if not is_interlacing(F, ks.ks, ks.side):
        raise ValueError(f"{ks.ks} is not a {ks.side}-interlacing set for F")
    v = []
    for i, ki in enumerate(ks.ks):
        den = 1
        for j, kj in enumerate(ks.ks):
            if j != i:
                den *= ki - kj
        v.append(Fraction(-F(ki), den))
    delta = 1
    for x in v:
        delta = delta * x.denominator // math.gcd(delta, x.denominator)
    if any((x > 0) != (ks.side == LEFT) for x in v):
        raise AssertionError("weight vector signs disagree with the side tag")
    return WeightVector(F, ks, tuple(v), delta)


@dataclass(frozen=True)
class GammaElement:
    """An integer ``value`` written as sum coeffs[k]/(lambda^2 - k)."""

    value: int
    coeffs: Dict[int, int]
    provenance: Tuple[Tuple[WeightVector, int], ...] = field(default=(), repr=False, compare=False)

    @property
    def weight(self) -> int:
        """Vertices contributed per unit multiplier: sum a_k (k + 1)."""
        return sum(v * (k + 1) for k, v in self.coeffs.items())

    def describe(self) -> str:
        return " + ".join(
            (f"{m}*" if m != 1 else "") + "v(" + ",".join(map(str, w.ks.ks)) + ")"
            for w, m in self.provenance
        )


def _checked_element(F, value, coeffs, provenance) -> GammaElement:
    coeffs = {k: c for k, c in sorted(coeffs.items()) if c}
    if any(c < 0 for c in coeffs.values()):
        raise AssertionError("negative coefficient in a monoid element")
    if not identity_holds(F, coeffs, value):
        raise AssertionError(f"identity check failed for value {value}")
    return GammaElement(value, coeffs, tuple(provenance))


def signed_delta(wv: WeightVector) -> GammaElement:
    coeffs = {}
    for k, x in zip(wv.ks.ks, wv.v):
        c = abs(x * wv.delta)
        if c.denominator != 1:
            raise AssertionError("delta does not clear denominators")
        coeffs[k] = int(c)
    return _checked_element(wv.F, wv.sign * wv.delta, coeffs, [(wv, 1)])


def combine_vectors(wvs: Sequence[WeightVector], multipliers: Sequence[int]) -> GammaElement:
    """Same-side combination sum m_j v_j, scaled by the common denominator."""
    if not wvs or len(wvs) != len(multipliers):
        raise ValueError("need equally many vectors and multipliers")
    side, F = wvs[0].side, wvs[0].F
    if any(w.side != side for w in wvs):
        raise ValueError("cannot combine left and right weight vectors")
    if any(w.F != F for w in wvs):
        raise ValueError("weight vectors belong to different polynomials")
    if any(m <= 0 for m in multipliers):
        raise ValueError("multipliers must be positive")
    total: Dict[int, Fraction] = {}
    for w, m in zip(wvs, multipliers):
        for k, x in zip(w.ks.ks, w.v):
            total[k] = total.get(k, Fraction(0)) + m * x
    lcd = 1
    for x in total.values():
        lcd = lcd * x.denominator // math.gcd(lcd, x.denominator)
    coeffs = {k: int(abs(x * lcd)) for k, x in total.items()}
    value = wvs[0].sign * lcd * sum(multipliers)
    return _checked_element(F, value, coeffs, list(zip(wvs, multipliers)))


# ---------------------------------------------------------------------------
# monoid search


@dataclass
class SearchBudget:
    """Bounds for the monoid search.  ``max_k=None`` means ceil(top root) + 200."""

    max_k: Optional[int] = None
    max_sets: int = 5000
    max_multiplier: int = 50
    max_combo_vectors: int = 24
    triple_vectors: int = 10
    triple_multiplier: int = 12
    time_limit: Optional[float] = None
    k_slack: int = 200

    def resolved_max_k(self, spec: SquaresSpectrum) -> int:
        if self.max_k is not None:
            return self.max_k
        return spec.least_above(spec.n - 1) + self.k_slack


@dataclass
class MonoidState:
    F: IntPolynomial
    elements: List[GammaElement] = field(default_factory=list)
    gcd_all: int = 0
    has_positive: bool = False
    has_negative: bool = False
    delta_gcd: Optional[int] = None
    sets_tried: Dict[str, int] = field(default_factory=lambda: {LEFT: 0, RIGHT: 0})
    gcd_trajectory: List[int] = field(default_factory=list)
    combinations_found: int = 0
    exhausted: bool = False
    timed_out: bool = False

    @property
    def reaches_one(self) -> bool:
        return self.has_positive and self.has_negative and self.gcd_all == 1

    def add(self, el: GammaElement) -> None:
        self.elements.append(el)
        g = math.gcd(self.gcd_all, abs(el.value))
        if g != self.gcd_all or not self.gcd_trajectory:
            self.gcd_trajectory.append(g)
        self.gcd_all = g
        if el.value > 0:
            self.has_positive = True
        else:
            self.has_negative = True

    def merge(self, other: "MonoidState") -> "MonoidState":
        out = MonoidState(self.F)
        for el in self.elements + other.elements:
            out.add(el)
        return out


def prime_factors(n: int) -> List[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _qval(n: int, q: int) -> int:
    e = 0
    while n and n % q == 0:
        n //= q
        e += 1
    return e


def _residue_mod_q(x: Fraction, e: int, q: int) -> int:
    """(x * q**e) mod q for x whose denominator has q-valuation <= e."""
    y = x * q ** e
    return y.numerator * pow(y.denominator, -1, q) % q


def _guided_candidates(maps, mults_fixed, q, limit):
    """Residue class of the first multiplier forced by the worst q-denominator."""
    keys = set().union(*maps)
    e = max(_qval(x.denominator, q) for m in maps for x in m.values())
    if e == 0:
        return range(1, limit + 1)
    for k in sorted(keys):
        vals = [m.get(k, Fraction(0)) for m in maps]
        if max(_qval(x.denominator, q) for x in vals) != e:
            continue
        res = [_residue_mod_q(x, e, q) for x in vals]
        if res[0] % q:
            rhs = -sum(r * m for r, m in zip(res[1:], mults_fixed)) % q
            r0 = rhs * pow(res[0], -1, q) % q
            start = r0 if r0 else q
            return range(start, limit + 1, q)
    return range(1, limit + 1)


def _try_cancel(wvs, q, limit, inner_limit) -> Optional[GammaElement]:
    maps = [w.as_map() for w in wvs]
    others = len(wvs) - 1
    for fixed in itertools.product(range(1, inner_limit + 1), repeat=others):
        for m0 in _guided_candidates(maps, fixed, q, limit):
            mults = (m0,) + fixed
            if math.gcd(*mults) != 1 or sum(mults) % q == 0:
                continue
            total: Dict[int, Fraction] = {}
            for mp, m in zip(maps, mults):
                for k, x in mp.items():
                    total[k] = total.get(k, Fraction(0)) + m * x
            if any(x.denominator % q == 0 for x in total.values()):
                continue
            return combine_vectors(wvs, mults)
    return None


def monoid_search(spec: SquaresSpectrum, budget: Optional[SearchBudget] = None) -> MonoidState:
    """Collect signed deltas over interlacing sets, then same-side combinations."""
    budget = budget or SearchBudget()
    F = spec.F
    state = MonoidState(F)
    start = time.monotonic()

    def out_of_time() -> bool:
        if budget.time_limit is not None and time.monotonic() - start > budget.time_limit:
            state.timed_out = True
            return True
        return False

    max_k = budget.resolved_max_k(spec)
    vectors: Dict[str, List[WeightVector]] = {LEFT: [], RIGHT: []}
    streams = {
        side: itertools.islice(iter_interlacing(spec, side, max_k), budget.max_sets)
        for side in (LEFT, RIGHT)
    }
    live = [LEFT, RIGHT]
    while live and not state.reaches_one:
        for side in list(live):
            ks = next(streams[side], None)
            if ks is None:
                live.remove(side)
                continue
            wv = weight_vector(F, ks)
            vectors[side].append(wv)
            state.sets_tried[side] += 1
            state.add(signed_delta(wv))
            if state.reaches_one or out_of_time():
                break
        if state.timed_out:
            break
    state.delta_gcd = state.gcd_all
    if state.reaches_one or state.timed_out:
        return state

    # combination phase: cancel each prime q | gcd from some combined denominator
    progress = True
    while progress and not state.reaches_one and state.gcd_all > 1:
        progress = False
        for q in prime_factors(state.gcd_all):
            el = _cancel_prime(vectors, q, budget, out_of_time)
            if el is not None:
                state.add(el)
                state.combinations_found += 1
                progress = True
                break
            if state.timed_out:
                return state
    state.exhausted = not state.reaches_one
    return state


def _cancel_prime(vectors, q, budget, out_of_time) -> Optional[GammaElement]:
    for side in (LEFT, RIGHT):
        pool = [w for w in vectors[side] if w.delta % q == 0][: budget.max_combo_vectors]
        for a, b in itertools.combinations(pool, 2):
            el = _try_cancel([a, b], q, budget.max_multiplier, budget.max_multiplier)
            if el is not None:
                return el
            if out_of_time():
                return None
    for side in (LEFT, RIGHT):
        pool = [w for w in vectors[side] if w.delta % q == 0][: budget.triple_vectors]
        for trio in itertools.combinations(pool, 3):
            el = _try_cancel(list(trio), q, budget.max_multiplier,
                             min(budget.triple_multiplier, budget.max_multiplier))
            if el is not None:
                return el
            if out_of_time():
                return None
    return None


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    a: Dict[int, int]
    F: IntPolynomial
    verified: bool
    combination: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def vertex_count(self) -> int:
        return vertex_count(self.a)

    def to_json(self) -> dict:
        return {
            "F": str(self.F),
            "a": {str(k): v for k, v in sorted(self.a.items())},
            "verified": self.verified,
        }

    @classmethod
    def from_json(cls, obj: Mapping, verify: bool = True) -> "Certificate":
        from .poly import parse_polynomial

        F = parse_polynomial(obj["F"])
        a = {int(k): int(v) for k, v in obj["a"].items() if int(v)}
        ok = verify_certificate(F, a) if verify else bool(obj.get("verified", False))
        return cls(a, F, ok)


def make_certificate(F: IntPolynomial, a: Mapping[int, int], combination=()) -> Certificate:
    a = {k: v for k, v in sorted(a.items()) if v}
    return Certificate(a, F, verify_certificate(F, a), tuple(combination))


def _merge(parts: Iterable[Tuple[int, GammaElement]]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for c, el in parts:
        if c:
            for k, v in el.coeffs.items():
                out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in sorted(out.items()) if v}


def _pair_multipliers(p: int, n: int) -> Tuple[int, int]:
    """Least c+ >= 1, c- >= 0 with c+ * p - c- * n == 1 (p, n > 0 coprime)."""
    cp = pow(p, -1, n) if n > 1 else 1
    return cp, (cp * p - 1) // n


def assemble_certificate(state: MonoidState) -> Optional[Certificate]:
    """Write 1 as a nonnegative combination of collected elements."""
    F = state.F
    pos = [e for e in state.elements if e.value > 0]
    neg = [e for e in state.elements if e.value < 0]
    best = None
    for ep in pos:
        for en in neg:
            n = -en.value
            if math.gcd(ep.value, n) != 1:
                continue
            cp, cn = _pair_multipliers(ep.value, n)
            verts = 1 + cp * ep.weight + cn * en.weight
            if best is not None and verts > best[0]:
                continue
            merged = _merge([(cp, ep), (cn, en)])
            key = (verts, sorted(merged.items()))
            if best is None or key < best[:2]:
                best = (verts, sorted(merged.items()), merged, ((ep.value, cp), (en.value, cn)))
    if best is not None:
        cert = make_certificate(F, best[2], best[3])
        if not cert.verified:
            raise AssertionError("assembled certificate failed verification")
        return cert
    combo = _general_combination(pos, neg)
    if combo is None:
        return None
    cert = make_certificate(F, _merge(combo), tuple((e.value, c) for c, e in combo if c))
    if not cert.verified:
        raise AssertionError("assembled certificate failed verification")
    return cert


def _general_combination(pos, neg):
    if not pos or not neg:
        return None
    chosen: List[GammaElement] = []
    g = 0
    for el in sorted(pos + neg, key=lambda e: (abs(e.value), e.value)):
        ng = math.gcd(g, abs(el.value))
        if ng != g or not chosen:
            chosen.append(el)
            g = ng
        if g == 1:
            break
    if g != 1:
        return None
    if not any(e.value > 0 for e in chosen):
        chosen.append(min(pos, key=lambda e: e.value))
    if not any(e.value < 0 for e in chosen):
        chosen.append(max(neg, key=lambda e: e.value))
    # integer Bezout coefficients
    coeffs = [0] * len(chosen)
    g, coeffs[0] = chosen[0].value, 1
    for i in range(1, len(chosen)):
        d, x, y = _ext_gcd(g, chosen[i].value)
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
        g = d
    if g < 0:
        coeffs = [-c for c in coeffs]
    ip = next(i for i, e in enumerate(chosen) if e.value > 0)
    ineg = next(i for i, e in enumerate(chosen) if e.value < 0)
    P, N = chosen[ip].value, -chosen[ineg].value
    # adding (N, P) to (c_ip, c_in) preserves the sum since N*P + P*(-N) = 0
    for i, e in enumerate(chosen):
        if i in (ip, ineg) or coeffs[i] >= 0:
            continue
        if e.value > 0:
            t = -(-(-coeffs[i]) // N)
            coeffs[i] += t * N
            coeffs[ineg] += t * e.value
        else:
            t = -(-(-coeffs[i]) // P)
            coeffs[i] += t * P
            coeffs[ip] += t * (-e.value)
    if coeffs[ip] < 0:
        t = -(-(-coeffs[ip]) // N)
        coeffs[ip] += t * N
        coeffs[ineg] += t * P
    if coeffs[ineg] < 0:
        t = -(-(-coeffs[ineg]) // P)
        coeffs[ineg] += t * P
        coeffs[ip] += t * N
    assert sum(c * e.value for c, e in zip(coeffs, chosen)) == 1
    return list(zip(coeffs, chosen))


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


# ---------------------------------------------------------------------------
# reports and degree-specific paths


@dataclass
class AnalysisReport:
    verdict: str
    F: IntPolynomial
    certificate: Optional[Certificate] = None
    obstruction: Optional[Obstruction] = None
    spectrum: Optional[SquaresSpectrum] = None
    method: str = ""
    irreducibility: str = "assumed"
    diagnostics: Dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.F.degree

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "F": str(self.F),
            "n": self.n,
            "method": self.method,
            "irreducibility": self.irreducibility,
        }
        if self.spectrum is not None:
            out["roots_of_F"] = [f"{x:.6f}" for x in self.spectrum.approx()]
            for side in (LEFT, RIGHT):
                s = find_interlacing(self.spectrum, side)
                out[f"{side}_interlacing"] = list(s.ks) if s else None
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
            out["vertex_count"] = self.certificate.vertex_count
            if self.certificate.combination:
                out["combination"] = [[v, c] for v, c in self.certificate.combination]
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_json()
        out["diagnostics"] = self.diagnostics
        return out


def _prepare(F: IntPolynomial) -> SquaresSpectrum:
    if has_integer_root(F):
        raise ValueError("F has an integer root, so it is not the minimal polynomial of lambda^2")
    return squared_spectrum(F)


def quadratic_certificate(F: IntPolynomial) -> Certificate:
    """{k-1, k} is left-interlacing with unit denominators, so delta = 1."""
    if F.degree != 2:
        raise ValueError("quadratic_certificate needs deg F = 2")
    spec = _prepare(F)
    k = least_integer_in_gap(spec, 1)
    if k is None:
        raise AssertionError("an irreducible quadratic always has an integer in its root gap")
    cert = make_certificate(F, {k - 1: F(k - 1), k: -F(k)})
    if not cert.verified:
        raise AssertionError("quadratic certificate failed verification")
    return cert


def _least_above_congruent(spec: SquaresSpectrum, i: int, residue: int, modulus: int) -> int:
    k = spec.least_above(i)
    return k + (residue - k) % modulus


def cubic_analyze(F: IntPolynomial, spec: Optional[SquaresSpectrum] = None) -> AnalysisReport:
    """Decide membership for deg F = 3: interlacing set plus a root mod 2."""
    if F.degree != 3:
        raise ValueError("cubic_analyze needs deg F = 3")
    spec = spec or _prepare(F)
    ob = no_interlacing_obstruction(spec)
    if ob is not None:
        return AnalysisReport(NOT_IN_A2, F, obstruction=ob, spectrum=spec, method="cubic")
    if F(0) % 2 and F(1) % 2:
        ob = Obstruction(MOD_P, "cubic F has no root mod 2, so it is irreducible mod 2", p=2, degree=3)
        return AnalysisReport(NOT_IN_A2, F, obstruction=ob, spectrum=spec, method="cubic")

    state = MonoidState(F)
    left = find_interlacing(spec, LEFT)
    state.add(signed_delta(weight_vector(F, left)))
    k1 = spec.floors[1]
    k2 = k1 + 1
    base = k1 if F(k1) % 2 == 0 else k2
    k3 = _least_above_congruent(spec, 2, base - 2, 4)
    state.add(signed_delta(weight_vector(F, InterlacingSet((k1, k2, k3), RIGHT))))
    used = {4}
    while state.gcd_all != 1:
        q = prime_factors(state.gcd_all)[0]
        d = 4 if q == 2 else q
        if d in used:
            raise AssertionError(f"modulus {d} failed to remove a prime from the gcd")
        used.add(d)
        k3 = _least_above_congruent(spec, 2, k1 + 2, d)
        state.add(signed_delta(weight_vector(F, InterlacingSet((k1, k2, k3), RIGHT))))
    cert = assemble_certificate(state)
    if cert is None or not cert.verified:
        raise AssertionError("cubic construction failed to produce a certificate")
    diag = {"elements": [el.value for el in state.elements], "moduli": sorted(used)}
    return AnalysisReport(IN_A2, F, certificate=cert, spectrum=spec, method="cubic", diagnostics=diag)


@dataclass(frozen=True)
class ScaleResult:
    D: int
    scaledF: IntPolynomial
    certificate: Certificate
    ks: Tuple[int, ...] = ()
    v: Tuple[Fraction, ...] = ()
    method: str = ""


def _square_saturation(n: int) -> int:
    """Least D with n | D**2."""
    D = 1
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        D *= p ** ((e + 1) // 2)
        p += 1
    if m > 1:
        D *= m
    return D


def scale_to_A2(F: IntPolynomial, budget: Optional[SearchBudget] = None) -> ScaleResult:
    """A positive integer D with D*lambda certifiably in A_2."""
    if F.degree == 1:
        raise ValueError("lambda^2 is an integer; lambda already has height at most 1")
    report = analyze_F(F, budget)
    if report.verdict == IN_A2:
        return ScaleResult(1, F, report.certificate, method="certified at D = 1")
    d = 1
    while True:
        Fd = F.scale_roots(d * d)
        left = find_interlacing(squared_spectrum(Fd), LEFT)
        if left is not None:
            break
        d += 1
    wv = weight_vector(Fd, left)
    lcm = wv.delta
    D2 = _square_saturation(lcm)
    scaled = Fd.scale_roots(D2 * D2)
    ks = tuple(D2 * D2 * k for k in left.ks)
    v = tuple(D2 * D2 * x for x in wv.v)
    cert = make_certificate(scaled, {k: int(x) for k, x in zip(ks, v)})
    if not cert.verified:
        raise AssertionError("scaled certificate failed verification")
    return ScaleResult(d * D2, scaled, cert, ks, v, method="least square-saturating D")


def analyze_F(
    F: IntPolynomial,
    budget: Optional[SearchBudget] = None,
    obstruction_order: Sequence[str] = (NO_INTERLACING, MOD_P),
    zeta48: bool = True,
) -> AnalysisReport:
    """Three-valued analysis of lambda from the minimal polynomial F of lambda^2."""
    if not F.is_monic():
        raise ValueError("F must be monic")
    if F.degree == 1:
        method = "lambda = 0" if F[0] == 0 else "lambda^2 is an integer"
        return AnalysisReport(HEIGHT_AT_MOST_1, F, method=method)
    spec = _prepare(F)
    ev = irreducibility_evidence(F)
    if ev is not None:
        irr = f"certified ({ev})"
    elif F.degree <= 3:
        irr = "certified (no rational root)"
    else:
        irr = "assumed"

    found = {
        NO_INTERLACING: no_interlacing_obstruction(spec),
        MOD_P: modp_obstruction_record(F),
    }
    for kind in obstruction_order:
        if found[kind] is not None:
            rep = AnalysisReport(NOT_IN_A2, F, obstruction=found[kind], spectrum=spec,
                                 method="obstruction", irreducibility=irr)
            rep.diagnostics["obstructions"] = [o.to_json() for o in found.values() if o is not None]
            return rep
    if zeta48 and F == ZETA48_F:
        return AnalysisReport(NOT_IN_A2, F, obstruction=zeta48_obstruction(), spectrum=spec,
                              method="three-adic", irreducibility=irr)
    if F.degree == 2:
        return AnalysisReport(IN_A2, F, certificate=quadratic_certificate(F), spectrum=spec,
                              method="quadratic", irreducibility=irr)
    if F.degree == 3:
        rep = cubic_analyze(F, spec)
        rep.irreducibility = irr
        return rep
    state = monoid_search(spec, budget)
    diag = {
        "sets_tried": dict(state.sets_tried),
        "delta_gcd": state.delta_gcd,
        "gcd_trajectory": state.gcd_trajectory,
        "combinations_found": state.combinations_found,
        "elements": len(state.elements),
    }
    if state.reaches_one:
        cert = assemble_certificate(state)
        if cert is not None and cert.verified:
            return AnalysisReport(IN_A2, F, certificate=cert, spectrum=spec, method="monoid search",
                                  irreducibility=irr, diagnostics=diag)
    diag["budget"] = "time limit reached" if state.timed_out else "search budget exhausted"
    return AnalysisReport(UNKNOWN, F, spectrum=spec, method="monoid search",
                          irreducibility=irr, diagnostics=diag)


def analyze(
    poly: IntPolynomial,
    kind: str = "lambda",
    budget: Optional[SearchBudget] = None,
    **kwargs,
) -> AnalysisReport:
    """Analyze lambda given its minimal polynomial (``kind='lambda'``) or F."""
    if kind in ("lambda", "lambda_poly"):
        if not poly.is_monic():
            raise ValueError("the minimal polynomial of lambda must be monic")
        F = squares_min_poly(poly)
    elif kind in ("lambda_squared", "lambda-squared", "lambda_squared_poly"):
        F = poly
        if F.degree >= 1 and not F.is_monic():
            raise ValueError("F must be monic")
    else:
        raise ValueError(f"unknown input kind {kind!r}")
    return analyze_F(F, budget, **kwargs)
