"""Height-2 witness trees built from stars hung off a common root.

The tree with branch map ``{k: a_k}`` has ``a_k`` copies of the star S_k
(a center with k leaves) whose centers are joined to the root.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .certify import Certificate, make_certificate, verify_certificate
from .linalg import bareiss_det
from .poly import IntPolynomial
from .spectrum import squared_spectrum

EXPORT_CAP = 10 ** 7
BRUTEFORCE_MAX_VERTICES = 64


@dataclass(frozen=True)
class RootedStarTree:
    branches: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_map(cls, a: Mapping[int, int]) -> "RootedStarTree":
        return build_tree(a)

    @property
    def as_map(self) -> Dict[int, int]:
        return dict(self.branches)

    @property
    def vertex_count(self) -> int:
        return 1 + sum(m * (k + 1) for k, m in self.branches)

    @property
    def root_degree(self) -> int:
        return sum(m for _, m in self.branches)

    @property
    def height(self) -> int:
        return 2 if any(k >= 1 for k, _ in self.branches) else 1

    def label(self) -> str:
        return "<" + " ".join(f"{k}^{m}" for k, m in self.branches) + ">"


def build_tree(a: Mapping[int, int]) -> RootedStarTree:
    items = sorted((int(k), int(m)) for k, m in a.items())
    if any(k < 0 for k, _ in items):
        raise ValueError("star sizes must be nonnegative")
    if any(m < 0 for _, m in items):
        raise ValueError("multiplicities must be nonnegative")
    items = [(k, m) for k, m in items if m]
    if not items:
        raise ValueError("branch map is empty")
    return RootedStarTree(tuple(items))


# ---------------------------------------------------------------------------
# characteristic polynomials


@dataclass(frozen=True)
class FactoredCharPoly:
    """x**x_power * prod (x^2 - k)**e * core(x^2)."""

    x_power: int
    star_factors: Tuple[Tuple[int, int], ...]
    core: IntPolynomial  # in y = x^2

    def expand(self) -> IntPolynomial:
        out = self.core.substitute_power(2)
        for k, e in self.star_factors:
            out = out * IntPolynomial((-k, 0, 1)) ** e
        return out.shift(self.x_power)

    def __str__(self) -> str:
        parts = [f"x^{self.x_power}"] if self.x_power else []
        parts += [f"(x^2 - {k})^{e}" for k, e in self.star_factors]
        parts.append(f"({self.core.substitute_power(2)})")
        return " * ".join(parts)


def char_poly_factored(t: RootedStarTree) -> FactoredCharPoly:
    a = t.as_map
    keys = sorted(a)
    prod = IntPolynomial((1,))
    for k in keys:
        prod = prod * IntPolynomial((-k, 1))
    core = prod
    for k in keys:
        others = IntPolynomial((1,))
        for j in keys:
            if j != k:
                others = others * IntPolynomial((-j, 1))
        core = core - others * a[k]
    a0 = a.get(0, 0)
    if a0:
        # y^(a0 - 1) from the k = 0 factor moves into the x-power
        x_power = sum((k - 1) * m for k, m in a.items() if k >= 1) + a0 - 1
    else:
        x_power = 1 + sum((k - 1) * m for k, m in a.items())
    stars = tuple((k, a[k] - 1) for k in keys if k >= 1 and a[k] > 1)
    return FactoredCharPoly(x_power, stars, core)


def char_poly_closed_form(t: RootedStarTree) -> IntPolynomial:
    return char_poly_factored(t).expand()


def adjacency_edges(t: RootedStarTree) -> Iterator[Tuple[int, int]]:
    """Edges in the deterministic numbering: root 0, then center, leaves, ..."""
    nxt = 1
    for k, m in t.branches:
        for _ in range(m):
            center = nxt
            yield 0, center
            for leaf in range(center + 1, center + 1 + k):
                yield center, leaf
            nxt = center + 1 + k


def char_poly_bruteforce(t: RootedStarTree, max_vertices: int = BRUTEFORCE_MAX_VERTICES) -> IntPolynomial:
    """det(xI - A) from integer determinants at x = 0..N and Newton interpolation."""
    n = t.vertex_count
    if n > max_vertices:
        raise ValueError(f"tree has {n} vertices, above the brute-force limit {max_vertices}")
    adj = [[0] * n for _ in range(n)]
    for u, v in adjacency_edges(t):
        adj[u][v] = adj[v][u] = 1
    values = []
    for x in range(n + 1):
        values.append(bareiss_det([[(x if i == j else 0) - adj[i][j] for j in range(n)] for i in range(n)]))
    # forward differences -> Newton form -> monomial basis
    diffs = list(values)
    newton = [diffs[0]]
    for _ in range(n):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        newton.append(diffs[0])
    result = [Fraction(0)] * (n + 1)
    basis = [1]  # x (x - 1) ... (x - i + 1)
    fact = 1
    for i, d in enumerate(newton):
        if i:
            basis = [0] + basis
            for j in range(len(basis) - 1):
                basis[j] -= (i - 1) * basis[j + 1]
            fact *= i
        if d:
            for j, c in enumerate(basis):
                result[j] += Fraction(d * c, fact)
    coeffs = []
    for c in result:
        if c.denominator != 1:
            raise AssertionError("interpolated characteristic polynomial is not integral")
        coeffs.append(int(c))
    return IntPolynomial(tuple(coeffs))


def verify_tree_eigenvalue(t: RootedStarTree, F: IntPolynomial) -> bool:
    """True iff every root of F(x^2) is an eigenvalue of the tree."""
    return verify_certificate(F, t.as_map)


# ---------------------------------------------------------------------------
# export


def export_tree(t: RootedStarTree, fmt: str = "edgelist", cap: int = EXPORT_CAP) -> str:
    if fmt not in ("edgelist", "dot"):
        raise ValueError(f"unknown export format {fmt!r}")
    if t.vertex_count > cap:
        raise ValueError(
            f"tree has {t.vertex_count} vertices, above the export cap {cap}; use the summary instead"
        )
    edges = sorted(adjacency_edges(t))
    if fmt == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in edges)
    lines = ["graph T {"]
    lines += [f"  {u} -- {v};" for u, v in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_summary(t: RootedStarTree) -> dict:
    return {
        "branches": {str(k): m for k, m in t.branches},
        "vertex_count": t.vertex_count,
        "root_degree": t.root_degree,
        "height": t.height,
    }


# ---------------------------------------------------------------------------
# search


def _support_ok(spec, K: Sequence[int], fvals: Sequence[int]) -> bool:
    if any(fvals[k] == 0 for k in K):
        return False
    # one pole below the lowest root and one between each pair of roots
    if K[0] > spec.greatest_below(0):
        return False
    for i in range(spec.n - 1):
        lo, hi = spec.least_above(i), spec.greatest_below(i + 1)
        if not any(lo <= k <= hi for k in K):
            return False
    return True


def _iter_supports(max_k: int, size: int) -> Iterator[Tuple[int, ...]]:
    """Subsets of {0..max_k} by max element, then lexicographically."""
    for top in range(size - 1, max_k + 1):
        for rest in itertools.combinations(range(top), size - 1):
            yield rest + (top,)


def _lagrange_monic(points: Sequence[int], values: Sequence[Fraction]):
    """Monic Q of degree len(points) with Q(points[i]) = values[i], as an evaluator."""

    def Q(x: int) -> Fraction:
        base = 1
        for p in points:
            base *= x - p
        total = Fraction(base)
        for i, pi in enumerate(points):
            num = Fraction(values[i])
            for j, pj in enumerate(points):
                if j != i:
                    num *= Fraction(x - pj, pi - pj)
            total += num
        return total

    return Q


def search_min_tree(
    F: IntPolynomial,
    max_vertices: int,
    max_k: int,
    max_support_excess: int = 0,
) -> Optional[Tuple[Certificate, RootedStarTree]]:
    """Least-vertex witness tree within bounds, ties broken lexicographically.

    For support K with |K| = n + e the identity sum a_k/(y - k) = 1 mod F reads
    a_k * prod_{j != k}(k - j) = -F(k) Q(k) for a monic Q of degree e, so the
    a-values on the e largest keys determine everything else.
    """
    spec = squared_spectrum(F)
    n = spec.n
    fvals = [F(k) for k in range(max_k + 1)]
    best: Optional[Tuple[int, List[Tuple[int, int]]]] = None
    bound = max_vertices

    for e in range(max_support_excess + 1):
        size = n + e
        for K in _iter_supports(max_k, size):
            floor_cost = 1 + sum(k + 1 for k in K)
            if floor_cost > bound or not _support_ok(spec, K, fvals):
                continue
            dens = {}
            for k in K:
                d = 1
                for j in K:
                    if j != k:
                        d *= k - j
                dens[k] = d
            free = K[len(K) - e:]
            fixed = K[: len(K) - e]
            for a_free in _free_values(free, bound - floor_cost):
                Qvals = [Fraction(-a * dens[k], fvals[k]) for k, a in zip(free, a_free)]
                Q = _lagrange_monic(free, Qvals)
                a = dict(zip(free, a_free))
                ok = True
                for k in fixed:
                    val = -fvals[k] * Q(k) / dens[k]
                    if val.denominator != 1 or val <= 0:
                        ok = False
                        break
                    a[k] = int(val)
                if not ok:
                    continue
                verts = 1 + sum(m * (k + 1) for k, m in a.items())
                if verts > bound:
                    continue
                key = (verts, sorted(a.items()))
                if best is None or key < best:
                    best = key
                    bound = verts
    if best is None:
        return None
    cert = make_certificate(F, dict(best[1]))
    if not cert.verified:
        raise AssertionError("search produced an unverified certificate")
    return cert, build_tree(cert.a)


def _free_values(free: Sequence[int], slack: int) -> Iterator[Tuple[int, ...]]:
    """Tuples (a_k >= 1) for the free keys whose extra vertices fit in ``slack``."""
    if not free:
        yield ()
        return
    k, rest = free[0], free[1:]
    m = 1
    while (m - 1) * (k + 1) <= slack:
        for tail in _free_values(rest, slack - (m - 1) * (k + 1)):
            yield (m,) + tail
        m += 1
