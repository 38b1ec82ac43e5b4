"""
Named graph families: constructors, closed-form predictions, realizable-pair
generators with witnesses, and the measurement side used to check them.

Every prediction records in `provenance` which result produced each field.
"""

from typing import Iterable, Iterator, List, Optional, Tuple

from app.errors import FamilyParameterError, PairNotRealizedError, StructureError
from app.config import get_config
from app.functions.betti import CoefficientField, i_number, projective_dimension
from app.functions.graph_core import Graph, classify, from_edge_list, induced, is_chordal, is_connected, is_forest
from app.functions.indpoly import bundle, independence_polynomial
from app.functions.polyring import ONE, X, IntPoly, ord_at_minus1
from app.functions.recursions import jk_pdim
from app.ingest.models.FamilySpecs import Radius2Spec, SplitSpec
from app.ingest.models.PairSet import PairSet
from app.ingest.models.Prediction import PREDICTED_FIELDS, FieldCheck, Measurement, Prediction


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _one_plus_x(k: int) -> IntPoly:
    return IntPoly.binomial_power(k)


def _finish(pred: Prediction, P: Optional[IntPoly] = None) -> Prediction:
    """Fill deg_h_edge / deg_h_cover from alpha, M when not set explicitly"""
    if P is not None:
        pred.P = P.to_list()
    if pred.deg_h_edge is None and pred.alpha is not None and pred.M is not None:
        pred.deg_h_edge = pred.alpha - pred.M
        pred.provenance.setdefault("deg_h_edge", "deg h_I = alpha - M")
    if pred.deg_h_cover is None and pred.M is not None:
        pred.deg_h_cover = pred.n - 2 - pred.M
        pred.provenance.setdefault("deg_h_cover", "deg h_J = n - 2 - M")
    if pred.reg_cover is None and pred.pdim is not None:
        pred.reg_cover = pred.pdim - 1
        pred.provenance.setdefault("reg_cover", "reg(R/J) = pdim(R/I) - 1")
    return pred


# --- radius-2 trees --------------------------------------------------------

def build_radius2(spec: Radius2Spec) -> Graph:
    """Center 0, then its L1 leaves, then each child v_i followed by its t_i leaves"""
    edges = []
    nxt = 1
    for _ in range(spec.L1):
        edges.append((0, nxt))
        nxt += 1
    for t in spec.ts:
        v = nxt
        edges.append((0, v))
        nxt += 1
        for _ in range(t):
            edges.append((v, nxt))
            nxt += 1
    return from_edge_list(spec.n, edges)


def _radius2_case(spec: Radius2Spec) -> str:
    if spec.L2 == 0:
        return "L2=0"
    if spec.L1 == 0:
        return "L1=0"
    if spec.L1 != spec.L2:
        return "L1!=L2"
    return "L1=L2,m odd" if spec.m % 2 else "L1=L2,m even"


def predict_radius2(spec: Radius2Spec) -> Prediction:
    L1, L2, B, m, n = spec.L1, spec.L2, spec.B, spec.m, spec.n
    case = _radius2_case(spec)
    pred = Prediction(family="radius2", params={"L1": L1, "ts": spec.ts}, n=n)

    if L2 > 0:
        P = _one_plus_x(L1)
        for t in spec.ts:
            P = P * (X + _one_plus_x(t))
        P = P + (X * _one_plus_x(L2))
        pred.provenance["P"] = "radius-2 tree polynomial (1+x)^L1 prod(x+(1+x)^t_i) + x(1+x)^L2"
    else:
        P = _one_plus_x(B) + X
        pred.provenance["P"] = "star polynomial (1+x)^B + x"

    pred.alpha = {"L2=0": B, "L1=0": L2 + 1}.get(case, L1 + L2)
    pred.provenance["alpha"] = f"radius-2 alpha, case {case}"

    M = {
        "L2=0": 0,
        "L1=0": 0,
        "L1!=L2": min(L1, L2),
        "L1=L2,m odd": L1,
        "L1=L2,m even": L1 + 1,
    }[case]
    pred.M = M
    pred.provenance["M"] = f"radius-2 M lemma, case {case}"

    pred.pdim = max(B, L2 + 1)
    pred.provenance["pdim"] = "radius-2 pdim theorem max{B, L2+1}"

    pred.deg_h_cover = {
        "L2=0": B - 1,
        "L1=0": B + L2 - 1,
        "L1!=L2": m + max(L1, L2) - 1,
        "L1=L2,m odd": B - 1,
        "L1=L2,m even": B - 2,
    }[case]
    pred.provenance["deg_h_cover"] = f"radius-2 degree corollary, case {case}"
    return _finish(pred, P)


def radius2_specs(n: int) -> Iterator[Radius2Spec]:
    """Every canonical Radius2Spec on n vertices"""
    def partitions(total: int, parts: int, largest: int) -> Iterator[List[int]]:
        if parts == 0:
            if total == 0:
                yield []
            return
        for first in range(min(total - (parts - 1), largest), 0, -1):
            for rest in partitions(total - first, parts - 1, first):
                yield [first] + rest

    for m in range(0, n):
        for L1 in range(0, n):
            L2 = n - 1 - L1 - m
            if L2 < 0 or L1 + m == 0 or (m == 0 and L2 > 0) or (m > 0 and L2 < m):
                continue
            for ts in partitions(L2, m, L2):
                yield Radius2Spec(L1=L1, ts=ts)


def _radius2_A(n: int) -> List[Tuple[int, int]]:
    out = []
    for r in range(_ceil_div(n - 2, 2), n - 1):
        for d in range(r, min(n - 2, 2 * r - 1) + 1):
            out.append((r, d))
    return out


def _radius2_B(n: int) -> List[Tuple[int, int]]:
    if n % 2 == 0:
        return []
    return [(r, r - 1) for r in range(_ceil_div(n - 2, 2), (2 * n - 5) // 3 + 1)]


def radius2_pairs(n: int) -> PairSet:
    """Predicted (reg, deg h) pairs of radius-2 trees on n vertices"""
    if n < 4:
        raise FamilyParameterError("radius2_pairs needs n >= 4")
    pairs = PairSet(n=n)
    for r, d in _radius2_A(n) + _radius2_B(n):
        pairs.add(r, d)
    return pairs


def radius2_witness(n: int, r: int, d: int) -> Radius2Spec:
    if (r, d) not in radius2_pairs(n):
        raise PairNotRealizedError(f"({r}, {d}) is not a radius-2 tree pair for n={n}")
    if (r, d) in _radius2_B(n):
        L = n - 2 - r
        m = 2 * r - n + 3
        return Radius2Spec(L1=L, ts=[L - m + 1] + [1] * (m - 1))
    if r == n - 2 and d == n - 2:
        return Radius2Spec(L1=n - 1, ts=[])
    m = d - r + 1
    return Radius2Spec(L1=n - 2 - d, ts=[2 * r - d] + [1] * (m - 1))


# --- split graphs ----------------------------------------------------------

def build_split(spec: SplitSpec) -> Graph:
    c = spec.c
    edges = [(a, b) for a in range(c) for b in range(a + 1, c)]
    nxt = c
    for j, s in enumerate(spec.sizes):
        for _ in range(s):
            edges.append((j, nxt))
            nxt += 1
    return from_edge_list(spec.n, edges)


def predict_split(g: Graph) -> Prediction:
    flags = classify(g)
    if not flags.split:
        raise StructureError("graph is not split")
    if not flags.connected or g.is_edgeless():
        raise StructureError("split prediction needs a connected graph with an edge")
    C, I = flags.clique_part, flags.independent_part
    I_mask = sum(1 << v for v in I)
    m = len(I)
    deg_I = [(g.adj[c] & I_mask).bit_count() for c in C]
    Delta, delta = max(deg_I), min(deg_I)

    P = _one_plus_x(m)
    for d in deg_I:
        P = P + (X * _one_plus_x(m - d))

    pred = Prediction(family="split", params={"C": C, "I": I}, n=g.n)
    pred.provenance["P"] = "split polynomial (1+x)^m + x sum_c (1+x)^a(c)"
    pred.alpha = max(m, 1 + m - delta)
    pred.provenance["alpha"] = "split alpha = max(m, 1+m-delta_I)"
    pred.M = m - Delta
    pred.provenance["M"] = "split M = m - Delta_I"
    pred.i = m - Delta + 1
    pred.provenance["i"] = "split i = m - Delta_I + 1"
    pred.reg_cover = Delta + len(C) - 2
    pred.provenance["reg_cover"] = "split reg = Delta_I + |C| - 2"
    pred.deg_h_cover = Delta + len(C) - 2
    pred.provenance["deg_h_cover"] = "split diagonal: deg h_J = reg"
    pred.pdim = pred.reg_cover + 1
    pred.provenance["pdim"] = "pdim = reg + 1"
    pred.deg_h_edge = Delta + 1 if delta == 0 else Delta
    pred.provenance["deg_h_edge"] = "split deg h_I: Delta_I + 1 if delta_I = 0 else Delta_I"
    return _finish(pred, P)


def split_specs(n: int) -> Iterator[SplitSpec]:
    """Every canonical SplitSpec with at least one edge on n vertices"""
    def groups(total: int, parts: int, largest: int) -> Iterator[List[int]]:
        if parts == 0:
            if total == 0:
                yield []
            return
        for first in range(min(total, largest), -1, -1):
            for rest in groups(total - first, parts - 1, first):
                yield [first] + rest

    for c in range(1, n + 1):
        for sizes in groups(n - c, c, n - c):
            if c == 1 and sizes[0] == 0:
                continue
            yield SplitSpec(sizes=sizes)


def q_min(n: int) -> int:
    return min(c + _ceil_div(n, c) - 3 for c in range(1, n))


def split_witness(n: int, q: int) -> SplitSpec:
    if not q_min(n) <= q <= n - 2:
        raise PairNotRealizedError(f"({q}, {q}) is not a split-graph pair for n={n}")
    if q == n - 2:
        return SplitSpec(sizes=[n - 1])
    for c in range(2, n):
        if c + _ceil_div(n, c) - 3 <= q:
            m = n - c
            Delta = q - c + 2
            sizes = [Delta]
            rest = m - Delta
            for _ in range(c - 1):
                take = min(Delta, rest)
                sizes.append(take)
                rest -= take
            return SplitSpec(sizes=sizes)
    raise PairNotRealizedError(f"no clique size realizes q={q} at n={n}")


def split_pairs(n: int) -> PairSet:
    if n < 2:
        raise FamilyParameterError("split_pairs needs n >= 2")
    pairs = PairSet(n=n)
    for q in range(q_min(n), n - 1):
        pairs.add(q, q)
    return pairs


# --- B_k and G_{k,r} -------------------------------------------------------

def build_Bk(k: int) -> Graph:
    """Clique c_1..c_{k+1} on 0..k, z_j on k+j adjacent to c_1..c_j"""
    if k < 1:
        raise FamilyParameterError("B_k needs k >= 1")
    edges = [(a, b) for a in range(k + 1) for b in range(a + 1, k + 1)]
    for j in range(1, k):
        edges.extend((c, k + j) for c in range(j))
    return from_edge_list(2 * k, edges)


def predict_Bk(k: int) -> Prediction:
    n = 2 * k
    pred = Prediction(family="Bk", params={"k": k}, n=n)
    P = _one_plus_x(k).scale(2) - ONE
    pred.provenance["P"] = "B_k polynomial 2(1+x)^k - 1"
    pred.alpha = k
    pred.provenance["alpha"] = "deg P_{B_k} = k"
    pred.M = 0
    pred.provenance["M"] = "P_{B_k}(-1) = -1"
    pred.i = 1
    pred.provenance["i"] = "c_1 dominates B_k"
    pred.pdim = n - 1
    pred.provenance["pdim"] = "split reg = Delta_I + |C| - 2 = n - 2"
    return _finish(pred, P)


def build_Gkr(k: int, r: int) -> Graph:
    """Cone over B_k + K_{1,r}; star center 2k, cone vertex 2k+r+1"""
    if k < 1 or r < k:
        raise FamilyParameterError("G_{k,r} needs k >= 1 and r >= k")
    base = build_Bk(k)
    edges = list(base.edges())
    center = 2 * k
    edges.extend((center, center + 1 + j) for j in range(r))
    apex = 2 * k + r + 1
    edges.extend((v, apex) for v in range(apex))
    return from_edge_list(apex + 1, edges)


def predict_Gkr(k: int, r: int) -> Prediction:
    if k < 1 or r < k:
        raise FamilyParameterError("G_{k,r} needs k >= 1 and r >= k")
    n = 2 * k + r + 2
    pred = Prediction(family="Gkr", params={"k": k, "r": r}, n=n)
    P = (_one_plus_x(k).scale(2) - ONE) * (_one_plus_x(r) + X) + X
    pred.provenance["P"] = "cone: P_H + x with P_H = P_{B_k} P_{K_{1,r}}"
    pred.alpha = k + r
    pred.provenance["alpha"] = "alpha(B_k) + alpha(K_{1,r})"
    pred.M = k
    pred.provenance["M"] = "M(G_{k,r}) = k"
    pred.i = 1
    pred.provenance["i"] = "the cone vertex dominates"
    pred.pdim = n - 1
    pred.provenance["pdim"] = "cone forces pdim(R/I) = n - 1"
    return _finish(pred, P)


def gkr_degree_bounds(n: int) -> Tuple[int, int]:
    """Range of deg h_J over the G_{k,r} on n vertices"""
    return _ceil_div(2 * (n - 2), 3), n - 3


def gkr_params(n: int) -> List[Tuple[int, int]]:
    return [(k, n - 2 - 2 * k) for k in range(1, n) if n - 2 - 2 * k >= k]


def gkr_pairs(n: int) -> PairSet:
    pairs = PairSet(n=n)
    for k, _ in gkr_params(n):
        pairs.add(n - 2, n - 2 - k)
    return pairs


# --- H_{n,p} ---------------------------------------------------------------

def _check_Hnp(n: int, p: int):
    if p >= 3 and n >= 2 * p + 1:
        return
    if p == 2 and n >= 6:
        return
    raise FamilyParameterError("H_{n,p} needs p >= 3 with n >= 2p+1, or p = 2 with n >= 6")


def build_Hnp(n: int, p: int) -> Graph:
    """
    c, v1, v2, u_1..u_{p-1}, y_1..y_{p-2}, z, x_1..x_k with k = n-2p-1:
    c joined to v1, v2, every u and x; v1 to every y and x; v2 to z.
    """
    _check_Hnp(n, p)
    k = n - 2 * p - 1
    c, v1, v2 = 0, 1, 2
    us = list(range(3, 3 + p - 1))
    ys = list(range(us[-1] + 1 if us else 3, (us[-1] + 1 if us else 3) + p - 2))
    z = 2 + (p - 1) + (p - 2) + 1
    xs = list(range(z + 1, z + 1 + k))
    edges = [(c, v1), (c, v2), (v2, z)]
    edges += [(c, u) for u in us]
    edges += [(v1, y) for y in ys]
    edges += [(c, x) for x in xs] + [(v1, x) for x in xs]
    return from_edge_list(n, edges)


def predict_Hnp(n: int, p: int) -> Prediction:
    _check_Hnp(n, p)
    k = n - 2 * p - 1
    pred = Prediction(family="Hnp", params={"n": n, "p": p}, n=n)
    P = _one_plus_x(p) * (X.scale(2) + X * _one_plus_x(p + k - 3) + _one_plus_x(p + k - 2))
    pred.provenance["P"] = "H_{n,p} polynomial (1+x)^p (2x + x(1+x)^(p+k-3) + (1+x)^(p+k-2))"
    pred.alpha = P.degree
    pred.provenance["alpha"] = "deg of the predicted P"
    pred.i = p
    pred.provenance["i"] = "i(H_{n,p}) = p"
    pred.M = p
    pred.provenance["M"] = "M(H_{n,p}) = p"
    pred.pdim = n - p
    pred.provenance["pdim"] = "chordal: pdim = n - i"
    return _finish(pred, P)


def hnp_params(n: int) -> List[int]:
    out = []
    for p in range(2, n):
        try:
            _check_Hnp(n, p)
        except FamilyParameterError:
            continue
        out.append(p)
    return out


def hnp_pairs(n: int) -> PairSet:
    pairs = PairSet(n=n)
    for p in hnp_params(n):
        pairs.add(n - p - 1, n - p - 2)
    return pairs


# --- whiskers and cones ----------------------------------------------------

def whisker_all(g: Graph, q: int) -> Graph:
    """Attach q pendant vertices to every vertex"""
    if q < 1:
        raise FamilyParameterError("whisker_all needs q >= 1")
    edges = list(g.edges())
    nxt = g.n
    for v in range(g.n):
        for _ in range(q):
            edges.append((v, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def predict_whisker_all(g: Graph, q: int) -> Prediction:
    b = bundle(g)
    n = g.n
    pred = Prediction(family="whisker", params={"q": q, "base_n": n}, n=(q + 1) * n)
    P = IntPoly()
    for k, g_k in enumerate(b.gvec):
        P = P + (_one_plus_x(q * (n - k)) * g_k).shift(k)
    pred.provenance["P"] = "sum_k g_k x^k (1+x)^(q(n-k))"
    pred.alpha = q * n
    pred.provenance["alpha"] = "alpha(G_q) = qn"
    pred.M = q * (n - b.alpha)
    pred.provenance["M"] = "M(G_q) = q(n - alpha)"
    pred.deg_h_edge = q * b.alpha
    pred.provenance["deg_h_edge"] = "deg h_I(G_q) = q alpha"
    pred.deg_h_cover = n - 2 + q * b.alpha
    pred.provenance["deg_h_cover"] = "deg h_J(G_q) = n - 2 + q alpha"
    return _finish(pred, P)


def build_Hpq(p: int, q: int) -> Graph:
    if p < 2 or q < 1:
        raise FamilyParameterError("H_{p,q} needs p >= 2 and q >= 1")
    clique = from_edge_list(p, [(a, b) for a in range(p) for b in range(a + 1, p)])
    return whisker_all(clique, q)


def predict_Hpq(p: int, q: int) -> Prediction:
    if p < 2 or q < 1:
        raise FamilyParameterError("H_{p,q} needs p >= 2 and q >= 1")
    pred = Prediction(family="Hpq", params={"p": p, "q": q}, n=p * (q + 1))
    P = _one_plus_x(p * q) + (X * _one_plus_x(q * (p - 1))).scale(p)
    pred.provenance["P"] = "q-whisker of K_p: (1+x)^(pq) + p x (1+x)^(q(p-1))"
    pred.alpha = p * q
    pred.provenance["alpha"] = "alpha(G_q) = qn"
    pred.M = (p - 1) * q
    pred.provenance["M"] = "M(H_{p,q}) = (p-1)q"
    pred.i = 1 + (p - 1) * q
    pred.provenance["i"] = "one clique vertex plus every other pendant"
    pred.reg_cover = p + q - 2
    pred.provenance["reg_cover"] = "H_{p,q} pair (p+q-2, p+q-2)"
    pred.pdim = p + q - 1
    pred.provenance["pdim"] = "pdim(R/I(H_{p,q})) = p + q - 1"
    return _finish(pred, P)


def whisker_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise FamilyParameterError(f"vertex {v} not in graph")
    return from_edge_list(g.n + 1, list(g.edges()) + [(v, g.n)])


def predict_whisker_vertex(g: Graph, v: int) -> Prediction:
    if not 0 <= v < g.n:
        raise FamilyParameterError(f"vertex {v} not in graph")
    P_G = independence_polynomial(g)
    rest = induced(g, g.full_mask & ~(1 << v))
    P_rest = independence_polynomial(rest)
    a, _ = ord_at_minus1(P_G)
    b, _ = ord_at_minus1(P_rest)
    P = P_G + P_rest.shift(1)
    pred = Prediction(family="whisker1", params={"v": v, "base_n": g.n}, n=g.n + 1)
    pred.provenance["P"] = "P_G + x P_{G-v}"
    pred.alpha = max(P_G.degree, 1 + P_rest.degree)
    pred.provenance["alpha"] = "max{alpha(G), 1 + alpha(G-v)}"
    if a != b:
        pred.M = min(a, b)
        pred.provenance["M"] = f"one-vertex whisker lemma, min(M(G)={a}, M(G-v)={b})"
    else:
        M, _ = ord_at_minus1(P)
        pred.M = M
        pred.provenance["M"] = "tie M(G) = M(G-v): computed from P_{G^v}"
        pred.notes.append(f"tie at {a}: {'saturated' if M == a else f'cancellation, M = {M} > {a}'}")
    return _finish(pred, P)


def cone(g: Graph) -> Graph:
    apex = g.n
    return from_edge_list(g.n + 1, list(g.edges()) + [(v, apex) for v in range(apex)])


def predict_cone(g: Graph) -> Prediction:
    if g.n < 1:
        raise FamilyParameterError("cone needs a nonempty base graph")
    P_H = independence_polynomial(g)
    n = g.n + 1
    pred = Prediction(family="cone", params={"base_n": g.n}, n=n)
    P = P_H + X
    pred.provenance["P"] = "cone: P_H + x"
    pred.alpha = max(P_H.degree, 1)
    pred.provenance["alpha"] = "alpha of the base"
    pred.i = 1
    pred.provenance["i"] = "the cone vertex dominates"
    pred.pdim = n - 1
    pred.provenance["pdim"] = "cone forces pdim(R/I) = n - 1"
    return _finish(pred, P)


# --- measurement -----------------------------------------------------------

def reference_pdim_method(g: Graph, max_n: Optional[int] = None) -> str:
    """'hochster' within the Hochster guard, 'auto' beyond it"""
    cap = max_n if max_n is not None else get_config().guards.hochster_max_n
    return "hochster" if g.n <= cap else "auto"


def measure_graph(g: Graph, fields: Iterable[str] = PREDICTED_FIELDS, pdim_method: str = "auto",
                  field: Optional[CoefficientField] = None) -> Measurement:
    """
    Compute the requested invariants directly.

    pdim_method 'auto' uses the forest recursion for forests, n - i for
    connected chordal graphs and Hochster otherwise. `field` applies to Hochster.
    """
    fields = set(fields)
    out = Measurement(n=g.n)
    b = bundle(g)
    out.P = b.gvec
    out.alpha = b.alpha
    out.M = b.M
    out.deg_h_edge = b.alpha - b.M
    if b.has_edge:
        out.deg_h_cover = g.n - 2 - b.M
    if fields & {"i", "pdim", "reg_cover"}:
        if "i" in fields or pdim_method in ("auto", "chordal"):
            out.i = i_number(g)
    if fields & {"pdim", "reg_cover"}:
        method = pdim_method
        if method == "auto":
            if is_forest(g):
                method = "jk"
            elif is_chordal(g) and is_connected(g) and b.has_edge:
                method = "chordal"
            else:
                method = "hochster"
        if method == "jk":
            out.pdim = jk_pdim(g)
        elif method == "chordal":
            out.pdim = g.n - out.i
        else:
            out.pdim = projective_dimension(g, field)
        out.pdim_method = method
        out.reg_cover = out.pdim - 1
    return out


def compare(pred: Prediction, measured: Measurement) -> List[FieldCheck]:
    checks = []
    for name in pred.filled():
        p, m = getattr(pred, name), getattr(measured, name)
        checks.append(FieldCheck(
            field=name, predicted=p, measured=m, match=p == m, provenance=pred.provenance.get(name, ""),
        ))
    return checks


def check_prediction(g: Graph, pred: Prediction, pdim_method: str = "auto",
                     field: Optional[CoefficientField] = None) -> List[FieldCheck]:
    return compare(pred, measure_graph(g, pred.filled(), pdim_method, field))
