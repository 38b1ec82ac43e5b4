"""
Forest recursions (projective dimension and (alpha, M, c)) and the
leaf-clique recursion for block graphs.

Both forest recursions pick the same pivot: root each tree at its smallest
vertex and take the deepest vertex of degree >= 2 whose neighbors are all
leaves except at most one, smallest index on ties.
"""

from typing import Dict, List, Optional, Tuple

import networkx as nx

from app.errors import StructureError
from app.functions.betti import i_number
from app.functions.graph_core import Graph, bits, components, induced, is_block_graph, is_connected, is_forest
from app.functions.indpoly import independence_polynomial, independence_polynomial_of_mask
from app.functions.polyring import IntPoly, ord_at_minus1
from app.ingest.models.Recursions import AlphaMResult, BlockCheckReport, JKSplit, LeafCliqueSplit


def _tree_code(adj, mask: int) -> str:
    """AHU encoding rooted at the center (min over two centers); equal iff isomorphic"""
    deg = {v: (adj[v] & mask).bit_count() for v in bits(mask)}
    remaining = mask
    layer = [v for v in deg if deg[v] <= 1]
    while remaining.bit_count() > 2:
        nxt = []
        for v in layer:
            remaining &= ~(1 << v)
            for u in bits(adj[v] & remaining):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    centers = list(bits(remaining))

    def encode(v: int, parent: int) -> str:
        kids = sorted(encode(u, v) for u in bits(adj[v] & mask) if u != parent)
        return "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in centers)


def _pivot(g: Graph, mask: int) -> int:
    adj = g.adj
    root = (mask & -mask).bit_length() - 1
    depth = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(adj[v] & mask):
                if u not in depth:
                    depth[u] = depth[v] + 1
                    nxt.append(u)
        frontier = nxt
    best = None
    for v in sorted(depth):
        nb = adj[v] & mask
        if nb.bit_count() < 2:
            continue
        non_leaves = sum(1 for u in bits(nb) if (adj[u] & mask).bit_count() > 1)
        if non_leaves <= 1 and (best is None or depth[v] > depth[best]):
            best = v
    if best is None:
        raise StructureError("no pivot: component is not a tree with three or more vertices")
    return best


def jk_split(g: Graph, mask: int, convention: str = "pdim") -> JKSplit:
    """Pivot data for the tree on mask under either recursion convention"""
    v = _pivot(g, mask)
    nb = g.adj[v] & mask
    leaves = sorted(u for u in bits(nb) if (g.adj[u] & mask).bit_count() == 1)
    non_leaves = [u for u in bits(nb) if u not in leaves]
    if non_leaves:
        other = non_leaves[0]
    else:
        other = leaves.pop()
    closed = nb | 1 << v
    if convention == "pdim":
        f_prime = mask & ~(1 << leaves[0])
    else:
        f_prime = mask & ~(1 << v)
        for u in leaves:
            f_prime &= ~(1 << u)
    return JKSplit(
        v=v, leaves=leaves, other=other,
        f_prime=list(bits(f_prime)), f_double_prime=list(bits(mask & ~closed)),
        convention=convention,
    )


def _names(g: Graph, mask: int) -> str:
    return "{" + ",".join(str(g.labels[v]) for v in bits(mask)) + "}"


# --- projective dimension --------------------------------------------------

def _forest_pdim(g: Graph, mask: int, memo: Dict[str, int], trace: Optional[List[str]], depth: int) -> int:
    total = 0
    for comp in components(g.adj, mask):
        if comp.bit_count() >= 2:
            total += _tree_pdim(g, comp, memo, trace, depth)
    return total


def _tree_pdim(g: Graph, mask: int, memo: Dict[str, int], trace: Optional[List[str]], depth: int) -> int:
    pad = "  " * depth
    if mask.bit_count() == 2:
        if trace is not None:
            trace.append(f"{pad}edge {_names(g, mask)}: pdim 1")
        return 1
    code = _tree_code(g.adj, mask)
    if code in memo:
        if trace is not None:
            trace.append(f"{pad}tree {_names(g, mask)}: pdim {memo[code]} (cached)")
        return memo[code]
    split = jk_split(g, mask, "pdim")
    deg = (g.adj[split.v] & mask).bit_count()
    if trace is not None:
        trace.append(f"{pad}tree {_names(g, mask)}: pivot {g.labels[split.v]} (degree {deg}), drop leaf {g.labels[split.leaves[0]]}")
    a = _tree_pdim(g, sum(1 << u for u in split.f_prime), memo, trace, depth + 1)
    b = _forest_pdim(g, sum(1 << u for u in split.f_double_prime), memo, trace, depth + 1)
    value = max(a, b + deg)
    if trace is not None:
        trace.append(f"{pad}= max({a}, {b} + {deg}) = {value}")
    memo[code] = value
    return value


def jk_pdim(forest: Graph, trace: Optional[List[str]] = None) -> int:
    """
    pdim(R/I(F)) = max{pdim(F - v_1), pdim(F - N[v]) + deg v}.
    Additive over components; isolated vertices contribute nothing.
    """
    if not is_forest(forest):
        raise StructureError("jk_pdim needs a forest")
    return _forest_pdim(forest, forest.full_mask, {}, trace, 0)


# --- (alpha, M, c) ---------------------------------------------------------

def _forest_amc(g: Graph, mask: int, memo, trace: Optional[List[str]], depth: int) -> Tuple[int, int, int, bool]:
    alpha, M, c, fallback = 0, 0, 1, False
    for comp in components(g.adj, mask):
        if comp.bit_count() == 1:
            a, m, cc, fb = 1, 1, 1, False
        else:
            a, m, cc, fb = _tree_amc(g, comp, memo, trace, depth)
        alpha, M, c, fallback = alpha + a, M + m, c * cc, fallback or fb
    return alpha, M, c, fallback


def _tree_amc(g: Graph, mask: int, memo, trace: Optional[List[str]], depth: int) -> Tuple[int, int, int, bool]:
    pad = "  " * depth
    if mask.bit_count() == 2:
        return 1, 0, -1, False
    code = _tree_code(g.adj, mask)
    if code in memo:
        return memo[code]
    split = jk_split(g, mask, "alpha_M")
    n = (g.adj[split.v] & mask).bit_count()
    a1, m1, c1, fb1 = _forest_amc(g, sum(1 << u for u in split.f_prime), memo, trace, depth + 1)
    a2, m2, c2, fb2 = _forest_amc(g, sum(1 << u for u in split.f_double_prime), memo, trace, depth + 1)
    r1, r2 = (n - 1) + m1, m2
    fallback = fb1 or fb2
    if r1 < r2:
        M, c, rule = r1, c1, "r1 < r2"
    elif r2 < r1:
        M, c, rule = r2, -c2, "r2 < r1"
    elif c1 != c2:
        M, c, rule = r1, c1 - c2, "r1 = r2, leads differ"
    else:
        # tie with equal leads only bounds M from below; compute exactly
        M, c = ord_at_minus1(independence_polynomial_of_mask(g, mask))
        fallback, rule = True, "r1 = r2, leads equal: exact"
    alpha = max((n - 1) + a1, 1 + a2)
    if trace is not None:
        trace.append(
            f"{pad}tree {_names(g, mask)}: pivot {g.labels[split.v]}, r1={r1}, r2={r2} ({rule}) -> alpha={alpha}, M={M}, c={c}"
        )
    memo[code] = (alpha, M, c, fallback)
    return memo[code]


def jk_alpha_M(forest: Graph, trace: Optional[List[str]] = None) -> AlphaMResult:
    if not is_forest(forest):
        raise StructureError("jk_alpha_M needs a forest")
    steps: List[str] = [] if trace is None else trace
    alpha, M, c, fallback = _forest_amc(forest, forest.full_mask, {}, steps, 0)
    return AlphaMResult(alpha=alpha, M=M, c=c, fallback=fallback, trace=steps)


# --- block graphs ----------------------------------------------------------

def _is_clique(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def leaf_clique_decompose(g: Graph) -> LeafCliqueSplit:
    if not is_connected(g) or not is_block_graph(g):
        raise StructureError("leaf-clique decomposition needs a connected block graph")
    if _is_clique(g):
        raise StructureError("graph is a clique, nothing to split")
    G = g.to_networkx()
    cut = set(nx.articulation_points(G))
    leaf_blocks = sorted(sorted(b) for b in nx.biconnected_components(G) if len(set(b) & cut) == 1)
    K = leaf_blocks[0]
    s = next(v for v in K if v in cut)
    K_mask = sum(1 << v for v in K)
    closed_s = g.adj[s] | 1 << s
    return LeafCliqueSplit(
        K=K, s=s, C=[v for v in K if v != s], r=len(K) - 1,
        H=list(bits(g.full_mask & ~K_mask)), L=list(bits(g.full_mask & ~closed_s)),
    )


def _i_of_mask(g: Graph, mask: int) -> int:
    return i_number(induced(g, mask)) if mask else 0


def _block_rec(g: Graph, trace: List[str], depth: int, flags: Dict[str, bool]):
    pad = "  " * depth
    if _is_clique(g):
        trace.append(f"{pad}clique K_{g.n} {_names(g, g.full_mask)}: M=0, i=1")
        return
    split = leaf_clique_decompose(g)
    H = sum(1 << v for v in split.H)
    L = sum(1 << v for v in split.L)
    P_G = independence_polynomial(g)
    P_H = independence_polynomial_of_mask(g, H)
    P_L = independence_polynomial_of_mask(g, L)
    identity = P_G == IntPoly.of(1, split.r) * P_H + P_L.shift(1)
    i_G, i_H, i_L = i_number(g), _i_of_mask(g, H), _i_of_mask(g, L)
    i_rec = i_G == 1 + min(i_H, i_L)
    M, _ = ord_at_minus1(P_G)
    flags["identity"] &= identity
    flags["i_rec"] &= i_rec
    trace.append(
        f"{pad}K={_names(g, sum(1 << v for v in split.K))} s={g.labels[split.s]} r={split.r}: "
        f"P identity {'ok' if identity else 'FAILED'}; i={i_G} vs 1+min({i_H},{i_L}) "
        f"{'ok' if i_rec else 'FAILED'}; M={M}"
    )
    for part in (H, L):
        for comp in components(g.adj, part):
            if comp.bit_count() > 1:
                _block_rec(induced(g, comp), trace, depth + 1, flags)


def block_check(g: Graph) -> BlockCheckReport:
    """
    Walk the leaf-clique recursion, checking P_G = (1+rx)P_H + xP_L and
    i(G) = 1 + min{i(H), i(L)} at every step, then report M <= i.
    """
    if not is_connected(g) or not is_block_graph(g):
        raise StructureError("block_check needs a connected block graph")
    trace: List[str] = []
    flags = {"identity": True, "i_rec": True}
    _block_rec(g, trace, 0, flags)
    M, _ = ord_at_minus1(independence_polynomial(g))
    i = i_number(g)
    return BlockCheckReport(
        M=M, i=i, trace=trace, identity_ok=flags["identity"], i_recursion_ok=flags["i_rec"],
        satisfied=M <= i, reg_minus_deg=M - i + 1,
    )
