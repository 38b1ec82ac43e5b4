"""
Pairs API
Predicted (reg, deg h) pair sets of a family class with one witness per pair.
"""

from typing import List

from pydantic import BaseModel, Field

from app.errors import UnsupportedError
from app.functions import families as fam
from app.functions.graph_core import to_edge_list_text, to_graph6


class PairsParams(BaseModel):
    """Parameters for a pair table"""
    pair_class: str = Field(..., description="trees2, split, gkr or hnp")
    n: int = Field(..., ge=1)


class PairRow(BaseModel):
    reg: int
    deg: int
    witness: str = Field(..., description="Family parameters of the witness")
    graph6: str
    edges: str


class PairsResponse(BaseModel):
    pair_class: str
    n: int
    rows: List[PairRow]


def _trees2(n: int) -> List[PairRow]:
    rows = []
    for r, d in fam.radius2_pairs(n).pairs():
        spec = fam.radius2_witness(n, r, d)
        g = fam.build_radius2(spec)
        rows.append(PairRow(reg=r, deg=d, witness=f"radius2 L1={spec.L1} ts={spec.ts}",
                            graph6=to_graph6(g), edges=to_edge_list_text(g)))
    return rows


def _split(n: int) -> List[PairRow]:
    rows = []
    for q, _ in fam.split_pairs(n).pairs():
        spec = fam.split_witness(n, q)
        g = fam.build_split(spec)
        rows.append(PairRow(reg=q, deg=q, witness=f"split sizes={spec.sizes}",
                            graph6=to_graph6(g), edges=to_edge_list_text(g)))
    return rows


def _gkr(n: int) -> List[PairRow]:
    rows = []
    for k, r in fam.gkr_params(n):
        g = fam.build_Gkr(k, r)
        rows.append(PairRow(reg=n - 2, deg=n - 2 - k, witness=f"Gkr k={k} r={r}",
                            graph6=to_graph6(g), edges=to_edge_list_text(g)))
    return sorted(rows, key=lambda row: (row.reg, row.deg))


def _hnp(n: int) -> List[PairRow]:
    rows = []
    for p in fam.hnp_params(n):
        g = fam.build_Hnp(n, p)
        rows.append(PairRow(reg=n - p - 1, deg=n - p - 2, witness=f"Hnp n={n} p={p}",
                            graph6=to_graph6(g), edges=to_edge_list_text(g)))
    return sorted(rows, key=lambda row: (row.reg, row.deg))


PAIR_CLASSES = {
    "trees2": _trees2,
    "split": _split,
    "gkr": _gkr,
    "hnp": _hnp,
}


def get_pairs(params: PairsParams) -> PairsResponse:
    builder = PAIR_CLASSES.get(params.pair_class)
    if builder is None:
        raise UnsupportedError(f"unsupported pair class {params.pair_class!r}; known: {', '.join(PAIR_CLASSES)}")
    return PairsResponse(pair_class=params.pair_class, n=params.n, rows=builder(params.n))


def render_pairs(r: PairsResponse) -> str:
    lines = [f"{r.pair_class} pairs at n={r.n}: {len(r.rows)}"]
    for row in r.rows:
        lines.append(f"  ({row.reg}, {row.deg})  {row.witness}  {row.graph6}")
    return "\n".join(lines)
