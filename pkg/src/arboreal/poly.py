"""Dense integer polynomials, subresultant gcds and Sturm root isolation.

Everything here is exact: coefficients are Python ints, interval endpoints
are ``fractions.Fraction`` values with power-of-two denominators.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

__all__ = [
    "IntPolynomial",
    "RationalInterval",
    "PolynomialSyntaxError",
    "parse_polynomial",
    "poly_arith",
    "integer_poly_gcd",
    "squarefree_part",
    "sturm_sequence",
    "count_roots",
    "cauchy_bound",
    "isolate_positive_roots",
    "refine_interval",
    "sign_at_integer",
    "sign_at",
]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree order.

    The zero polynomial is the empty tuple.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    continue
                raise TypeError(f"non-integer coefficient {c!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # -- constructors -------------------------------------------------
    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return parse_polynomial(text)

    # -- basic properties ----------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    __radd__ = __add__

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divrem(self, other: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Exact division with remainder; raises if the result is not integral."""
        q, r = _divmod_frac(self.coeffs, other.coeffs)
        if any(c.denominator != 1 for c in q + r):
            raise ValueError("quotient or remainder is not integral; divisor should be monic")
        return IntPolynomial(tuple(int(c) for c in q)), IntPolynomial(tuple(int(c) for c in r))

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divrem(other)
        if r:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def compose_neg(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def substitute_power(self, k: int) -> "IntPolynomial":
        """p(x**k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPolynomial(tuple(out))

    def reversed(self) -> "IntPolynomial":
        """x**deg * p(1/x)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def scale_roots(self, s: int) -> "IntPolynomial":
        """Polynomial whose roots are s times the roots of self: s**deg * p(x/s)."""
        d = self.degree
        return IntPolynomial(tuple(c * s ** (d - i) for i, c in enumerate(self.coeffs)))

    # -- evaluation -----------------------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction_sign(self, num: int, den: int) -> int:
        """Sign of p(num/den) for den > 0, computed without fractions."""
        d = self.degree
        if d < 0:
            return 0
        acc = 0
        pw = 1
        # homogenised Horner: sum c_i num^i den^(d-i)
        for c in reversed(self.coeffs):
            acc = acc * num + c * pw
            pw *= den
        return (acc > 0) - (acc < 0)

    # -- formatting -----------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"

    def to_coeff_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def _divmod_frac(a: Sequence, b: Sequence) -> Tuple[List[Fraction], List[Fraction]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [], _trim_frac(r)
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        t = c / lb
        q[i - db] = t
        for j in range(db + 1):
            r[i - db + j] -= t * b[j]
    return _trim_frac(q), _trim_frac(r[:db])


def _trim_frac(c: List[Fraction]) -> List[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_arith(a: IntPolynomial, b: IntPolynomial, op: str):
    """Dispatch ``add``, ``sub``, ``mul`` or ``divrem`` on two polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op in ("divrem", "divrem-exact"):
        return a.divrem(b)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# gcd via the subresultant pseudo-remainder sequence


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """lc(b)**(deg a - deg b + 1) * a  mod  b, computed over the integers."""
    if not b:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lc
    delta = len(r) - 1 - db
    if delta < 0:
        return a
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [x * lb for x in r]
        if c:
            for j in range(db + 1):
                r[i - db + j] -= c * b.coeffs[j]
        r.pop()
    return IntPolynomial(tuple(r))


def integer_poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not a:
        return b.primitive()
    if not b:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    # subresultant PRS
    g, h = 1, 1
    while b:
        delta = a.degree - b.degree
        r = pseudo_remainder(a, b)
        if not r:
            break
        if r.degree == 0:
            return IntPolynomial((1,))
        a, b = b, IntPolynomial(tuple(c // (g * h ** delta) for c in r.coeffs))
        g = a.lc
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)
    return b.primitive()


def squarefree_part(a: IntPolynomial) -> IntPolynomial:
    """a / gcd(a, a'), primitive with positive leading coefficient."""
    if not a:
        raise ValueError("squarefree part of the zero polynomial")
    if a.degree == 0:
        return IntPolynomial((1,))
    g = integer_poly_gcd(a, a.derivative())
    return a.primitive().exact_div(g).primitive() if g.degree > 0 else a.primitive()


# ---------------------------------------------------------------------------
# Sturm sequences and root isolation


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    def __float__(self) -> float:
        return float(self.midpoint)

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


def sign_at(p: IntPolynomial, x) -> int:
    """Exact sign of p at a rational point."""
    x = Fraction(x)
    return p.eval_fraction_sign(x.numerator, x.denominator)


def sign_at_integer(p: IntPolynomial, k: int) -> int:
    v = p(k)
    return (v > 0) - (v < 0)


def sturm_sequence(p: IntPolynomial) -> List[IntPolynomial]:
    """Sturm chain p, p', -rem(...), ... kept primitive (positive rescaling only)."""
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = pseudo_remainder(a, b)
        if not r:
            break
        # prem = lc(b)^(delta+1) * rem; recover sign of rem
        delta = a.degree - b.degree
        if b.lc < 0 and (delta + 1) % 2 == 1:
            r = -r
        r = -r
        g = r.content()
        seq.append(IntPolynomial(tuple(c // g for c in r.coeffs)))
    return seq


def _sign_changes(seq: Sequence[IntPolynomial], x: Fraction) -> int:
    changes = 0
    last = 0
    for p in seq:
        s = p.eval_fraction_sign(x.numerator, x.denominator)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def count_roots(p: IntPolynomial, lo, hi, seq=None) -> int:
    """Number of distinct real roots of a squarefree p in (lo, hi]."""
    seq = seq if seq is not None else sturm_sequence(p)
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def cauchy_bound(p: IntPolynomial) -> int:
    """ceil(1 + max|c_i| / |c_lead|); every root has smaller absolute value."""
    lead = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lead)


def _is_squarefree(p: IntPolynomial) -> bool:
    return p.degree <= 0 or integer_poly_gcd(p, p.derivative()).degree == 0


def _split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A dyadic point strictly inside (lo, hi) that is not a root of p."""
    w = hi - lo
    mid = lo + w / 2
    if sign_at(p, mid):
        return mid
    step = w / 4
    while True:
        for cand in (mid - step, mid + step):
            if sign_at(p, cand):
                return cand
        step /= 2


def isolate_positive_roots(F: IntPolynomial) -> List[RationalInterval]:
    """Isolating intervals for the positive real roots of a squarefree F."""
    if not F:
        raise ValueError("zero polynomial has no isolated roots")
    if not _is_squarefree(F):
        raise ValueError("polynomial is not squarefree")
    if F.degree == 0:
        return []
    seq = sturm_sequence(F)
    bound = Fraction(cauchy_bound(F))
    out: List[RationalInterval] = []
    stack = [(Fraction(0), bound, count_roots(F, 0, bound, seq))]
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            out.append(_lift_lower(F, lo, hi, seq))
            continue
        m = _split_point(F, lo, hi)
        cl = count_roots(F, lo, m, seq)
        stack.append((m, hi, c - cl))
        stack.append((lo, m, cl))
    out.sort(key=lambda iv: iv.lo)
    return out


def _lift_lower(F, lo, hi, seq) -> RationalInterval:
    # endpoints must be non-roots and the lower one strictly positive
    if lo > 0 and sign_at(F, lo):
        return RationalInterval(lo, hi)
    cand = hi / 2 if lo == 0 else (lo + hi) / 2
    while True:
        if cand > lo and sign_at(F, cand) and count_roots(F, cand, hi, seq) == 1:
            return RationalInterval(cand, hi)
        cand = lo + (cand - lo) / 2 if lo > 0 else cand / 2
        if lo > 0 and cand - lo < (hi - lo) / 2 ** 64:
            # lo is itself a root only if count excluded it; fall back to upper half search
            raise ValueError("could not lift lower endpoint")


def refine_interval(F: IntPolynomial, iv: RationalInterval, width) -> RationalInterval:
    """Bisect an isolating interval until it is narrower than ``width``.

    A no-op when ``width`` already exceeds or equals the current width.
    """
    width = Fraction(width)
    if width >= iv.width:
        return iv
    lo, hi = iv.lo, iv.hi
    slo, shi = sign_at(F, lo), sign_at(F, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("interval does not isolate a sign change of F")
    while hi - lo >= width:
        mid = (lo + hi) / 2
        s = sign_at(F, mid)
        if s == 0:
            # exact dyadic root: pad it symmetrically inside the current interval
            pad = min(mid - lo, hi - mid, width / 4)
            return RationalInterval(mid - pad, mid + pad)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


# ---------------------------------------------------------------------------
# text format

_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*(\*?\s*x\s*(?:\^\s*(\d+))?)?\s*")


class PolynomialSyntaxError(ValueError):
    def __init__(self, msg: str, position: int):
        super().__init__(f"{msg} at position {position}")
        self.position = position


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse ``"x^2 - 3x + 1"`` or an ascending list ``"1,-3,1"``."""
    s = text.strip()
    if not s:
        raise PolynomialSyntaxError("empty polynomial", 0)
    if "," in s or re.fullmatch(r"[+-]?\d+", s):
        coeffs = []
        pos = 0
        for part in s.split(","):
            tok = part.strip()
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise PolynomialSyntaxError(f"non-integer coefficient {tok!r}", pos)
            coeffs.append(int(tok))
            pos += len(part) + 1
        return IntPolynomial(tuple(coeffs))
    terms = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {s[pos]!r}", pos)
        sign, num, xpart, exp = m.groups()
        if not first and not sign:
            raise PolynomialSyntaxError("missing operator between terms", pos)
        if num is None and xpart is None:
            raise PolynomialSyntaxError("empty term", m.end())
        if num is not None and "." in num:
            raise PolynomialSyntaxError(f"non-integer coefficient {num!r}", pos + m.group(0).find(num))
        if xpart is not None and xpart.lstrip().startswith("*") and num is None:
            raise PolynomialSyntaxError("'*' without coefficient", pos)
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        e = 0 if xpart is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    deg = max(terms)
    return IntPolynomial(tuple(terms.get(i, 0) for i in range(deg + 1)))
