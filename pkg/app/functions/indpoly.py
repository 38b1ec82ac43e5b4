"""
Independence polynomial and the invariants derived from it:
g-vector, alpha, M (order of -1 as a root), c, g(G), D_s and E coefficients.
"""

from math import comb, factorial
from typing import Dict, List, Tuple

from app.errors import GuardExceededError, InvariantViolation
from app.functions.graph_core import Graph, bits
from app.functions.polyring import IntPoly, derivative_at, ord_at_minus1
from app.ingest.models.InvariantBundle import InvariantBundle

BRUTE_FORCE_MAX_N = 22


def _counts(adj: Tuple[int, ...], mask: int, memo: Dict[int, Tuple[int, ...]]) -> Tuple[int, ...]:
    hit = memo.get(mask)
    if hit is not None:
        return hit
    pivot, best = -1, 0
    for v in bits(mask):
        d = (adj[v] & mask).bit_count()
        if d > best:
            pivot, best = v, d
    if pivot < 0:
        k = mask.bit_count()
        result = tuple(comb(k, i) for i in range(k + 1))
    else:
        # P(S) = P(S - v) + x * P(S - N[v])
        without = _counts(adj, mask & ~(1 << pivot), memo)
        closed = _counts(adj, mask & ~(adj[pivot] | 1 << pivot), memo)
        size = max(len(without), len(closed) + 1)
        out = [0] * size
        for i, c in enumerate(without):
            out[i] += c
        for i, c in enumerate(closed):
            out[i + 1] += c
        result = tuple(out)
    memo[mask] = result
    return result


def independence_polynomial(g: Graph) -> IntPoly:
    return IntPoly(_counts(g.adj, g.full_mask, {}))


def independence_polynomial_of_mask(g: Graph, mask: int) -> IntPoly:
    """P of the subgraph induced on mask, without relabeling"""
    return IntPoly(_counts(g.adj, mask, {}))


def gvector_bruteforce(g: Graph) -> List[int]:
    """Independent-set counts by scanning all 2^n subsets"""
    if g.n > BRUTE_FORCE_MAX_N:
        raise GuardExceededError(f"brute-force g-vector limited to n <= {BRUTE_FORCE_MAX_N}")
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        if all(not (g.adj[v] & mask) for v in bits(mask)):
            counts[mask.bit_count()] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def bundle_from_poly(n: int, P: IntPoly, has_edge: bool = True) -> InvariantBundle:
    M, c = ord_at_minus1(P)
    gG = 1 - P(-1)
    return InvariantBundle(
        n=n, gvec=P.to_list(), alpha=P.degree, M=M, c=c, gG=gG, euler=gG, has_edge=has_edge,
    )


def bundle(g: Graph) -> InvariantBundle:
    return bundle_from_poly(g.n, independence_polynomial(g), has_edge=not g.is_edgeless())


def poly_of(b: InvariantBundle) -> IntPoly:
    return IntPoly(tuple(b.gvec))


def _g(b: InvariantBundle, j: int) -> int:
    return b.gvec[j] if 0 <= j < len(b.gvec) else 0


def D_coeff(b: InvariantBundle, s: int) -> int:
    """D_s = sum_{j=s+1}^{alpha} (-1)^{j-1-s} C(j, s+1) g_j"""
    if not 0 <= s <= b.alpha - 1:
        raise ValueError(f"D_s needs 0 <= s <= alpha-1 = {b.alpha - 1}, got s={s}")
    return sum((-1) ** (j - 1 - s) * comb(j, s + 1) * _g(b, j) for j in range(s + 1, b.alpha + 1))


def D_coeff_by_derivative(b: InvariantBundle, s: int) -> int:
    """D_s as P^{(s+1)}(-1)/(s+1)!"""
    value = derivative_at(poly_of(b), s + 1, -1)
    return value // factorial(s + 1)


def E_coeff(b: InvariantBundle, s: int) -> int:
    """E_{s+3} = (n-s-2) - sum_{j=s+3}^{alpha} C(j-2, s+1) (-1)^{j-s-1} g_j"""
    if not -1 <= s <= b.alpha - 3:
        raise ValueError(f"E_(s+3) needs -1 <= s <= alpha-3 = {b.alpha - 3}, got s={s}")
    total = sum(comb(j - 2, s + 1) * (-1) ** (j - s - 1) * _g(b, j) for j in range(s + 3, b.alpha + 1))
    return (b.n - s - 2) - total


def M_via_Ds(b: InvariantBundle) -> int:
    if 1 - b.gG != 0:
        return 0
    for s in range(b.alpha):
        if D_coeff(b, s) != 0:
            return s + 1
    raise InvariantViolation("P_G(-1) = 0 but every D_s vanishes")
