"""
h-polynomials and Hilbert functions of R/I(G), R/J(G) and of the Alexander
dual of a squarefree monomial ideal given by a hypergraph.

Each closed form has an independent oracle: a subset scan for the Hilbert
function followed by series_h_extract.
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, List, Sequence, Tuple

from app.errors import GuardExceededError, InvariantViolation, StructureError
from app.functions.graph_core import Graph, bits, mask_of
from app.functions.indpoly import D_coeff, E_coeff, bundle_from_poly
from app.functions.polyring import IntPoly, series_h_extract
from app.ingest.models.HilbertProfile import DegreeReport, HilbertProfile
from app.ingest.models.InvariantBundle import InvariantBundle

ORACLE_MAX_N = 20


def binom(a: int, b: int) -> int:
    """C(a, b), zero when b < 0 or a < b"""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def _one_minus_t(k: int) -> IntPoly:
    return IntPoly.binomial_power(k, -1)


def profile(h: IntPoly, dim: int) -> HilbertProfile:
    return HilbertProfile(dim=dim, h=h.to_list(), deg_h=h.degree, a_invariant=h.degree - dim)


# --- edge ideal ------------------------------------------------------------

def h_edge_fvector(b: InvariantBundle) -> IntPoly:
    """sum_i g_i t^i (1-t)^(alpha-i)"""
    total = IntPoly()
    for i, g_i in enumerate(b.gvec):
        total = total + (_one_minus_t(b.alpha - i) * g_i).shift(i)
    return total


def h_edge_Ds(b: InvariantBundle) -> IntPoly:
    """(1 - sum D_s)(1-t)^alpha + sum_s D_s (1-t)^(alpha-s-1)"""
    ds = [D_coeff(b, s) for s in range(b.alpha)]
    total = _one_minus_t(b.alpha) * (1 - sum(ds))
    for s, d in enumerate(ds):
        total = total + _one_minus_t(b.alpha - s - 1) * d
    return total


def h_edge(b: InvariantBundle) -> HilbertProfile:
    return profile(h_edge_fvector(b), b.alpha)


# --- cover ideal -----------------------------------------------------------

def hf_cover(n: int, gvec: Sequence[int], d: int) -> int:
    """
    HF(R/J(G), d) for d >= 1:
    C(n+d-1, n-1) - n C(d-1, n-2) - C(d-1, n-1) - sum_{j=2}^{n-1} g_j C(d-1, n-j-1)
    """
    if d <= 0:
        raise ValueError("hf_cover closed form holds for d >= 1; HF(0) = 1")
    g = lambda j: gvec[j] if j < len(gvec) else 0
    value = binom(n + d - 1, n - 1) - n * binom(d - 1, n - 2) - binom(d - 1, n - 1)
    value -= sum(g(j) * binom(d - 1, n - j - 1) for j in range(2, n))
    return value


def _dual_face_sizes(g: Graph) -> List[int]:
    """Number of F with [n] - F not independent, by |F| (the faces of the Alexander dual)"""
    if g.n > ORACLE_MAX_N:
        raise GuardExceededError(f"subset oracle limited to n <= {ORACLE_MAX_N}")
    full = g.full_mask
    sizes = [0] * (g.n + 1)
    for F in range(1 << g.n):
        rest = full ^ F
        if any(g.adj[v] & rest for v in bits(rest)):
            sizes[F.bit_count()] += 1
    return sizes


def _hf_from_face_sizes(sizes: Sequence[int], d: int) -> int:
    if d == 0:
        return 1 if any(sizes) else 0
    return sum(count * binom(d - 1, k - 1) for k, count in enumerate(sizes))


def hf_cover_oracle(g: Graph, d: int) -> int:
    """Count standard monomials of degree d: sum over dual faces F of C(d-1, |F|-1)"""
    if d <= 0:
        raise ValueError("hf_cover_oracle needs d >= 1")
    return _hf_from_face_sizes(_dual_face_sizes(g), d)


def hf_cover_series(g: Graph, D: int) -> List[int]:
    sizes = _dual_face_sizes(g)
    return [_hf_from_face_sizes(sizes, d) for d in range(D + 1)]


def h_cover(b: InvariantBundle) -> HilbertProfile:
    """
    sum_{k=0}^{n-alpha-1} (k+1) t^k + sum_{s=-1}^{alpha-3} E_{s+3} t^{n-s-3}, dim n-2.
    """
    if not b.has_edge:
        raise StructureError("h_cover needs at least one edge")
    n = b.n
    coeffs = [0] * (n - 1)
    for k in range(n - b.alpha):
        coeffs[k] += k + 1
    for s in range(-1, b.alpha - 2):
        coeffs[n - s - 3] += E_coeff(b, s)
    h = IntPoly(tuple(coeffs))
    result = profile(h, n - 2)
    if result.deg_h != n - 2 - b.M:
        raise InvariantViolation(f"deg h_J = {result.deg_h} but n-2-M = {n - 2 - b.M}")
    if result.a_invariant != -b.M:
        raise InvariantViolation(f"a-invariant {result.a_invariant} != -M = {-b.M}")
    return result


def h_cover_oracle(g: Graph) -> IntPoly:
    """h of R/J(G) by series extraction from the subset-scan Hilbert function"""
    return series_h_extract(hf_cover_series(g, 2 * g.n + 2), g.n - 2)


def degree_report(b: InvariantBundle) -> DegreeReport:
    if not b.has_edge:
        raise StructureError("degree_report needs at least one edge")
    n, alpha = b.n, b.alpha
    deg_cover = n - 2 - b.M
    report = DegreeReport(deg_h_edge=alpha - b.M, deg_h_cover=deg_cover, case="max")
    if b.gG != 1:
        expected = n - 2
    else:
        nonzero = [s for s in range(0, alpha - 2) if E_coeff(b, s) != 0]
        if not nonzero:
            report.case = "floor"
            expected = n - alpha - 1
        else:
            report.case = "intermediate"
            report.d = nonzero[0]
            expected = n - report.d - 3
    if expected != deg_cover:
        raise InvariantViolation(f"degree case {report.case} gives {expected}, n-2-M gives {deg_cover}")
    return report


# --- hypergraphs -----------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: Tuple[int, ...]

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build from vertex lists; non-minimal edges are dropped"""
        masks = set()
        for e in edges:
            m = mask_of(e)
            if not m:
                raise ValueError("hypergraph edges must be nonempty")
            if m >> n:
                raise ValueError(f"edge {sorted(e)} leaves vertex range 0..{n - 1}")
            masks.add(m)
        minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
        return cls(n, tuple(sorted(minimal)))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls.of(g.n, g.edges())

    @property
    def delta(self) -> int:
        return min(e.bit_count() for e in self.edges)

    def contains_edge(self, w: int) -> bool:
        return any(e & w == e for e in self.edges)


def hypergraph_gvec(h: Hypergraph) -> List[int]:
    """g_i = number of i-sets containing no edge"""
    if h.n > ORACLE_MAX_N:
        raise GuardExceededError(f"hypergraph scan limited to n <= {ORACLE_MAX_N}")
    counts = [0] * (h.n + 1)
    for w in range(1 << h.n):
        if not h.contains_edge(w):
            counts[w.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def h_dual_hypergraph(h: Hypergraph) -> HilbertProfile:
    """
    h-polynomial of R/I(H)^dual, dim n - delta:
    sum_{k<n-alpha} C(k+delta-1, delta-1) t^k
    + sum_{k=n-alpha}^{n-delta} [C(k+delta-1, delta-1)
        - sum_{j=n-k}^{alpha} C(j-delta, k-n+j) (-1)^(k-n+j) g_j] t^k
    """
    if not h.edges:
        raise StructureError("dual Hilbert series needs at least one edge")
    n, delta = h.n, h.delta
    g = hypergraph_gvec(h)
    alpha = len(g) - 1
    coeffs = [0] * (n - delta + 1)
    for k in range(n - delta + 1):
        value = binom(k + delta - 1, delta - 1)
        if k >= n - alpha:
            value -= sum(
                binom(j - delta, k - n + j) * (-1) ** (k - n + j) * g[j]
                for j in range(n - k, alpha + 1)
            )
        coeffs[k] = value
    return profile(IntPoly(tuple(coeffs)), n - delta)


def hf_dual_oracle(h: Hypergraph, d: int) -> int:
    """sum over F whose complement contains an edge of C(d-1, |F|-1)"""
    full = (1 << h.n) - 1
    sizes = [0] * (h.n + 1)
    for F in range(1 << h.n):
        if h.contains_edge(full ^ F):
            sizes[F.bit_count()] += 1
    return _hf_from_face_sizes(sizes, d)


def h_dual_oracle(h: Hypergraph) -> IntPoly:
    series = [hf_dual_oracle(h, d) for d in range(2 * h.n + 3)]
    return series_h_extract(series, h.n - h.delta)


def h_edge_hypergraph(h: Hypergraph) -> HilbertProfile:
    """h of R/I(H) from the hypergraph g-vector, via the D_s expansion; dim = alpha(H)"""
    b = bundle_from_poly(h.n, IntPoly(tuple(hypergraph_gvec(h))), has_edge=bool(h.edges))
    return profile(h_edge_Ds(b), b.alpha)


def h_edge_hypergraph_oracle(h: Hypergraph) -> IntPoly:
    """Stanley-Reisner Hilbert function of the no-edge complex, then series extraction"""
    g = hypergraph_gvec(h)
    alpha = len(g) - 1
    series = [1] + [sum(g[k] * binom(d - 1, k - 1) for k in range(1, alpha + 1)) for d in range(1, 2 * h.n + 3)]
    return series_h_extract(series, alpha)
