"""
Graph representation, graph6 / edge-list I/O, structural predicates and
small-n connected graph enumeration.

Vertices are 0..n-1 and vertex sets are int bitmasks, so n is capped at 64.
"""

from dataclasses import dataclass, field
from itertools import chain, permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from app.errors import GraphFormatError, GraphValueError, GuardExceededError, UnsupportedError
from app.ingest.models.GraphFlags import GraphFlags

MAX_VERTICES = 64
ENUMERATE_MAX_N = 7
GRAPH6_HEADER = b">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Vertex indices in a mask, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]
    labels: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GuardExceededError(f"graph has {self.n} vertices, cap is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphValueError(f"adjacency not symmetric at {v}-{u}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        nodes = sorted(G.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in G.edges()]
        return from_edge_list(len(nodes), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GuardExceededError(f"graph has {n} vertices, cap is {MAX_VERTICES}")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValueError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_edge_list_text(text: str) -> Graph:
    """
    Parse the "n: u-v,u-v,..." format.

    Raises:
        GraphFormatError: naming the offending token
    """
    head, sep, body = text.partition(":")
    if not sep:
        raise GraphFormatError(f"missing ':' in edge list {text!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise GraphFormatError(f"bad vertex count {head.strip()!r}")
    edges = []
    for token in body.split(","):
        token = token.strip()
        if not token:
            continue
        left, dash, right = token.partition("-")
        try:
            if not dash:
                raise ValueError
            edges.append((int(left), int(right)))
        except ValueError:
            raise GraphFormatError(f"bad edge token {token!r}")
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    return f"{g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges())


def from_graph6(line: Union[str, bytes], line_number: Optional[int] = None) -> Graph:
    """
    Decode one graph6 line.

    The byte layout is validated here so errors carry an offset; decoding
    itself is done by networkx.
    """
    if isinstance(line, str):
        for i, ch in enumerate(line):
            if ord(ch) > 126:
                raise GraphFormatError(f"non-ASCII character {ch!r} in graph6 line", offset=i, line=line_number)
        line = line.encode("ascii")
    data = bytes(line).rstrip(b"\r\n \t")
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("empty graph6 line", offset=base, line=line_number)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside the graph6 range 63..126", offset=base + i, line=line_number)

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GuardExceededError(f"graph6 8-byte size header: graph exceeds {MAX_VERTICES} vertices")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size header", offset=base + len(data), line=line_number)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        start = 4
    else:
        n = data[0] - 63
        start = 1
    if n > MAX_VERTICES:
        raise GuardExceededError(f"graph6 line encodes {n} vertices, cap is {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[start:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated graph6 line: expected {nbytes} data bytes, got {len(body)}",
            offset=base + len(data), line=line_number,
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after graph6 data", offset=base + start + nbytes, line=line_number)
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise GraphFormatError("nonzero graph6 padding bits", offset=base + len(data) - 1, line=line_number)

    G = nx.from_graph6_bytes(data)
    adj = [0] * n
    for u, v in G.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False).decode("ascii").strip()


def induced(g: Graph, w: int) -> Graph:
    """
    Induced subgraph on the vertex mask w, relabeled 0..|w|-1 in ascending order.

    labels keeps the original vertex of each new index.
    """
    if w & ~g.full_mask:
        raise GraphValueError("vertex set is not contained in the graph")
    verts = list(bits(w))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        nb = 0
        for u in bits(g.adj[v] & w):
            nb |= 1 << pos[u]
        adj.append(nb)
    return Graph(len(verts), tuple(adj), tuple(g.labels[v] for v in verts))


def components(adj: Sequence[int], mask: int) -> List[int]:
    """Connected components of the subgraph induced on mask, as masks"""
    out = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def eccentricities(g: Graph) -> List[Optional[int]]:
    """BFS eccentricity of every vertex, None when the graph is disconnected"""
    out: List[Optional[int]] = []
    full = g.full_mask
    for v in range(g.n):
        seen = 1 << v
        frontier = seen
        depth = 0
        while True:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            depth += 1
        out.append(depth if seen == full else None)
    return out


def radius(g: Graph) -> Optional[int]:
    if g.n == 0:
        return None
    ecc = eccentricities(g)
    if any(e is None for e in ecc):
        return None
    return min(ecc)


def is_connected(g: Graph) -> bool:
    return len(components(g.adj, g.full_mask)) <= 1


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g.adj, g.full_mask))


def mcs_order(g: Graph) -> List[int]:
    """Maximum cardinality search visiting order; ties go to the smallest index"""
    weight = [0] * g.n
    numbered = 0
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not numbered >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        numbered |= 1 << best
        for u in bits(g.adj[best] & ~numbered):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """
    Reverse MCS order is a perfect elimination ordering iff g is chordal.
    For each vertex, its earlier-visited neighbors minus the latest one must
    all be adjacent to that latest one.
    """
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    visited = 0
    for v in order:
        earlier = g.adj[v] & visited
        if earlier:
            parent = max(bits(earlier), key=lambda u: pos[u])
            if (earlier & ~(1 << parent)) & ~g.adj[parent]:
                return False
        visited |= 1 << v
    return True


def split_partition(g: Graph) -> Optional[Tuple[List[int], List[int]]]:
    """
    Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i. The top m vertices
    are then a maximum clique and the rest an independent set.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if d[i - 1] >= i - 1:
            m = i
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    return sorted(order[:m]), sorted(order[m:])


def split_q(g: Graph, clique: Sequence[int], independent: Sequence[int]) -> int:
    """Delta_I + |C| for a split partition"""
    ind = mask_of(independent)
    delta_i = max(((g.adj[c] & ind).bit_count() for c in clique), default=0)
    return delta_i + len(clique)


def is_block_graph(g: Graph) -> bool:
    G = g.to_networkx()
    for comp in nx.biconnected_components(G):
        k = len(comp)
        if G.subgraph(comp).number_of_edges() != k * (k - 1) // 2:
            return False
    return True


def classify(g: Graph) -> GraphFlags:
    partition = split_partition(g)
    return GraphFlags(
        n=g.n,
        edge_count=g.edge_count,
        connected=is_connected(g),
        forest=is_forest(g),
        chordal=is_chordal(g),
        split=partition is not None,
        clique_part=partition[0] if partition else None,
        independent_part=partition[1] if partition else None,
        split_q=split_q(g, *partition) if partition else None,
        block_graph=is_block_graph(g),
        radius=radius(g),
        max_degree=max((g.degree(v) for v in range(g.n)), default=0),
    )


# --- canonical forms and enumeration -------------------------------------

def _refined_cells(g: Graph) -> List[List[int]]:
    """Vertices grouped by (degree, sorted neighbor degrees); the groups are isomorphism invariant"""
    deg = [g.degree(v) for v in range(g.n)]
    key = {v: (deg[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))) for v in range(g.n)}
    cells: Dict[tuple, List[int]] = {}
    for v in range(g.n):
        cells.setdefault(key[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def _encode(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for i in range(len(order)):
        row = g.adj[order[i]]
        for j in range(i + 1, len(order)):
            code = code << 1 | (row >> order[j] & 1)
    return code


def canonical_form(g: Graph) -> Tuple[int, int]:
    """
    (n, code) where code is the minimum upper-triangle adjacency encoding over
    every vertex ordering that lists the invariant cells in a fixed order.
    Exhaustive within the cells, so two graphs are isomorphic iff their
    forms agree.
    """
    if g.n > ENUMERATE_MAX_N:
        raise UnsupportedError(f"canonical_form is exhaustive and limited to n <= {ENUMERATE_MAX_N}")
    cells = _refined_cells(g)
    best = None
    for parts in product(*(permutations(cell) for cell in cells)):
        code = _encode(g, list(chain.from_iterable(parts)))
        if best is None or code < best:
            best = code
    return g.n, best or 0


def graph_from_code(n: int, code: int) -> Graph:
    adj = [0] * n
    shift = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            shift -= 1
            if code >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """
    One representative per isomorphism class of connected graphs on n vertices,
    n <= 7, grown by adding a vertex to every connected graph on n-1 vertices.
    Output is sorted by canonical code and uses the canonical labeling.
    """
    if n < 1:
        raise UnsupportedError("enumerate_connected needs n >= 1")
    if n > ENUMERATE_MAX_N:
        raise UnsupportedError(
            f"built-in enumeration stops at n={ENUMERATE_MAX_N}; feed larger censuses as graph6 (e.g. geng -c {n})"
        )
    level = {canonical_form(Graph(1, (0,))): None}
    for k in range(2, n + 1):
        nxt = {}
        for (m, code) in level:
            base = graph_from_code(m, code)
            for attach in range(1, 1 << m):
                adj = list(base.adj)
                for u in bits(attach):
                    adj[u] |= 1 << m
                adj.append(attach)
                nxt.setdefault(canonical_form(Graph(k, tuple(adj))), None)
        level = nxt
    for (m, code) in sorted(level):
        yield graph_from_code(m, code)
