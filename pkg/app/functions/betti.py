"""
Simplicial homology, Hochster's formula for the graded Betti numbers of
R/I(G), projective dimension, reg of the cover ideal, and the independent
domination number.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx
from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from app.config import get_config
from app.errors import GuardExceededError, InvariantViolation, StructureError
from app.functions.graph_core import (
    ENUMERATE_MAX_N, Graph, bits, canonical_form, components, induced, is_chordal, is_connected, mask_of,
)
from app.ingest.models.BettiTable import BettiTable


@dataclass(frozen=True)
class CoefficientField:
    characteristic: int = 0
    confirm_over_q: bool = False

    @classmethod
    def parse(cls, text: str, confirm_over_q: bool = False) -> "CoefficientField":
        """'q' for the rationals, 'p:PRIME' for a prime field"""
        text = text.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(0)
        if text.startswith("p:"):
            try:
                p = int(text[2:])
            except ValueError:
                raise ValueError(f"bad field {text!r}, expected p:PRIME")
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            return cls(p, confirm_over_q)
        raise ValueError(f"bad field {text!r}, expected 'q' or 'p:PRIME'")

    @classmethod
    def default(cls) -> "CoefficientField":
        cfg = get_config().homology
        return cls.parse(cfg.field, cfg.confirm_over_q)

    @property
    def domain(self):
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"p:{self.characteristic}"


RATIONALS = CoefficientField(0)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: Tuple[int, ...]

    def is_void(self) -> bool:
        return not self.facets

    def faces_by_dim(self, max_faces: Optional[int] = None) -> Dict[int, List[int]]:
        """dim -> sorted face masks; the empty face sits at dim -1"""
        if max_faces is None:
            max_faces = get_config().guards.max_faces
        if any((1 << f.bit_count()) > max_faces for f in self.facets):
            raise GuardExceededError(f"a single facet already spans more than {max_faces} faces")
        faces = set()
        for f in self.facets:
            verts = list(bits(f))
            for k in range(len(verts) + 1):
                for sub in combinations(verts, k):
                    faces.add(mask_of(sub))
            if len(faces) > max_faces:
                raise GuardExceededError(f"complex exceeds {max_faces} faces")
        out: Dict[int, List[int]] = {}
        for face in faces:
            out.setdefault(face.bit_count() - 1, []).append(face)
        for k in out:
            out[k].sort()
        return out

    @property
    def dim(self) -> int:
        return max((f.bit_count() for f in self.facets), default=0) - 1


def independence_complex(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets (maximal cliques of the complement)"""
    cap = get_config().guards.complex_max_n
    if g.n > cap:
        raise GuardExceededError(f"independence complex limited to n <= {cap}")
    if g.n == 0:
        return SimplicialComplex(0, (0,))
    facets = sorted(mask_of(c) for c in nx.find_cliques(nx.complement(g.to_networkx())))
    return SimplicialComplex(g.n, tuple(facets))


def _rank(entries: Dict[int, Dict[int, int]], shape: Tuple[int, int], field: CoefficientField) -> int:
    if not shape[0] or not shape[1] or not entries:
        return 0
    dm = DomainMatrix({i: {j: ZZ(v) for j, v in row.items()} for i, row in entries.items()}, shape, ZZ)
    return dm.convert_to(field.domain).rank()


def _boundary(lower: List[int], upper: List[int]) -> Dict[int, Dict[int, int]]:
    index = {f: i for i, f in enumerate(lower)}
    entries: Dict[int, Dict[int, int]] = {}
    for col, face in enumerate(upper):
        for pos, v in enumerate(bits(face)):
            row = index[face & ~(1 << v)]
            entries.setdefault(row, {})[col] = -1 if pos & 1 else 1
    return entries


def _ranks_over(c: SimplicialComplex, field: CoefficientField) -> Dict[int, int]:
    if c.is_void():
        return {}
    faces = c.faces_by_dim()
    top = max(faces)
    boundary_rank = {}
    for k in range(0, top + 1):
        boundary_rank[k] = _rank(_boundary(faces[k - 1], faces[k]), (len(faces[k - 1]), len(faces[k])), field)
    out = {}
    for k in range(-1, top + 1):
        out[k] = len(faces[k]) - boundary_rank.get(k, 0) - boundary_rank.get(k + 1, 0)
    return out


def reduced_homology_ranks(c: SimplicialComplex, field: CoefficientField = RATIONALS) -> Dict[int, int]:
    """
    dim -> rank of reduced homology, dims -1..dim(c). The void complex maps to {}.

    Over GF(p) with confirm_over_q, any nonzero rank is recomputed over QQ;
    a zero mod p forces a zero over QQ.
    """
    ranks = _ranks_over(c, field)
    if field.characteristic and field.confirm_over_q and any(ranks.values()):
        ranks = _ranks_over(c, RATIONALS)
    return ranks


def euler_characteristic(c: SimplicialComplex) -> int:
    """Unreduced: sum over k >= 0 of (-1)^k f_k"""
    faces = c.faces_by_dim() if not c.is_void() else {}
    return sum((-1) ** k * len(fs) for k, fs in faces.items() if k >= 0)


# --- Hochster --------------------------------------------------------------

_CONNECTED_CACHE: Dict[Tuple[CoefficientField, int, int], Dict[int, int]] = {}


def clear_homology_cache():
    """Drop the per-process cache of connected-piece homology"""
    _CONNECTED_CACHE.clear()


def homology_cache_size() -> int:
    return len(_CONNECTED_CACHE)


def _join(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    """Kunneth over a field: H~_{i+j+1}(A*B) = sum H~_i(A) (x) H~_j(B)"""
    out: Dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            if x and y:
                out[i + j + 1] = out.get(i + j + 1, 0) + x * y
    return out


def _connected_homology(g: Graph, w: int, field: CoefficientField) -> Dict[int, int]:
    sub = induced(g, w)
    if sub.n <= ENUMERATE_MAX_N:
        key = (field, *canonical_form(sub))
        hit = _CONNECTED_CACHE.get(key)
        if hit is None:
            hit = reduced_homology_ranks(independence_complex(sub), field)
            _CONNECTED_CACHE[key] = hit
        return hit
    return reduced_homology_ranks(independence_complex(sub), field)


def induced_homology(g: Graph, w: int, field: CoefficientField = RATIONALS,
                     memo: Optional[Dict[int, Dict[int, int]]] = None) -> Dict[int, int]:
    """
    Reduced homology of the independence complex of G[w].

    An isolated vertex makes the complex a cone. Components multiply as joins.
    """
    if memo is not None and w in memo:
        return memo[w]
    if w == 0:
        result = {-1: 1}
    elif any(not (g.adj[v] & w) for v in bits(w)):
        result = {}
    else:
        parts = components(g.adj, w)
        if len(parts) == 1:
            result = _connected_homology(g, w, field)
        else:
            result = {-1: 1}
            for part in parts:
                result = _join(result, induced_homology(g, part, field, memo))
    if memo is not None:
        memo[w] = result
    return result


def hochster_table(g: Graph, field: Optional[CoefficientField] = None, max_n: Optional[int] = None) -> BettiTable:
    """
    beta_{i,j}(R/I(G)) = sum over |W| = j of rank H~_{j-i-1}(Delta(G)[W]).
    Subsets are visited by size.
    """
    field = field or CoefficientField.default()
    cap = max_n if max_n is not None else get_config().guards.hochster_max_n
    if g.n > cap:
        raise GuardExceededError(f"Hochster table limited to n <= {cap} ({1 << g.n} subsets requested)")
    counts: Dict[Tuple[int, int], int] = {}
    memo: Dict[int, Dict[int, int]] = {}
    for j in range(g.n + 1):
        for combo in combinations(range(g.n), j):
            for k, rank in induced_homology(g, mask_of(combo), field, memo).items():
                if rank:
                    key = (j - k - 1, j)
                    counts[key] = counts.get(key, 0) + rank
    return BettiTable.from_counts(g.n, str(field), counts)


def projective_dimension(g: Graph, field: Optional[CoefficientField] = None) -> int:
    return hochster_table(g, field).pdim


def reg_cover(g: Graph, field: Optional[CoefficientField] = None) -> int:
    """reg(R/J(G)) = pdim(R/I(G)) - 1"""
    if g.is_edgeless():
        raise StructureError("reg of the cover ideal needs at least one edge")
    return projective_dimension(g, field) - 1


# --- independent domination ------------------------------------------------

def i_number(g: Graph) -> int:
    """Minimum size of a maximal independent set, by branch and bound"""
    cap = get_config().guards.i_number_max_n
    if g.n > cap:
        raise GuardExceededError(f"i_number limited to n <= {cap}")
    adj = g.adj
    best = g.n + 1

    def search(chosen: int, undominated: int):
        nonlocal best
        if not undominated:
            best = min(best, chosen)
            return
        if chosen + 1 >= best:
            return
        # some vertex of N[v] must join; branch on the tightest v
        v = min(bits(undominated), key=lambda x: ((adj[x] | 1 << x) & undominated).bit_count())
        for u in bits((adj[v] | 1 << v) & undominated):
            search(chosen + 1, undominated & ~(adj[u] | 1 << u))

    search(0, g.full_mask)
    return best


def chordal_reg_cover(g: Graph, cross_check: bool = False) -> int:
    """
    reg(R/J(G)) = n - i(G) - 1 for connected chordal G with an edge.

    With cross_check the value is compared to Hochster (n within the Hochster guard).
    """
    if not is_chordal(g):
        raise StructureError("graph is not chordal")
    if not is_connected(g):
        raise StructureError("graph is not connected")
    if g.is_edgeless():
        raise StructureError("graph has no edges")
    value = g.n - i_number(g) - 1
    if cross_check and g.n <= get_config().guards.hochster_max_n:
        measured = reg_cover(g, RATIONALS)
        if measured != value:
            raise InvariantViolation(f"chordal formula gives reg {value}, Hochster gives {measured}")
    return value
