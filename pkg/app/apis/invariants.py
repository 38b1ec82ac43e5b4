"""
Invariants API
Full invariant report for one graph: flags, independence polynomial data,
both h-polynomials, pdim/reg and optionally the Betti table and recursion traces.
"""

import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field

from app.config import get_config
from app.errors import GraphFormatError, StructureError
from app.functions.betti import CoefficientField, hochster_table, i_number
from app.functions.graph_core import Graph, classify, from_graph6, parse_edge_list_text, to_edge_list_text, to_graph6
from app.functions.hilbert import degree_report, h_cover, h_edge
from app.functions.indpoly import bundle
from app.functions.polyring import IntPoly
from app.functions.recursions import block_check, jk_alpha_M, jk_pdim
from app.ingest.models import (
    AlphaMResult, BettiTable, BlockCheckReport, DegreeReport, GraphFlags, HilbertProfile, InvariantBundle,
)


def read_graph_input(graph6: Optional[str] = None, edges: Optional[str] = None) -> Graph:
    """
    Resolve --g6 / --edges into a Graph.

    --g6 takes a literal graph6 string, a file (first non-blank line) or '-' for stdin.
    """
    if (graph6 is None) == (edges is None):
        raise GraphFormatError("give exactly one of --g6 or --edges")
    if edges is not None:
        return parse_edge_list_text(edges)
    if graph6 == "-":
        lines = sys.stdin
    elif Path(graph6).is_file():
        lines = Path(graph6).read_text(encoding="ascii").splitlines()
    else:
        return from_graph6(graph6.strip())
    for number, line in enumerate(lines, start=1):
        if line.strip():
            return from_graph6(line.strip(), line_number=number)
    raise GraphFormatError("graph6 input is empty")


class InvariantsParams(BaseModel):
    """Parameters for an invariants report"""
    graph6: Optional[str] = None
    edges: Optional[str] = None
    field: Optional[str] = Field(None, description="'q' or 'p:PRIME'; defaults to the config")
    betti: bool = Field(True, description="Include the Hochster Betti table when n is within the guard")
    trace: bool = Field(False, description="Include recursion traces for forests and block graphs")


class InvariantsResponse(BaseModel):
    """Response model for one graph"""
    graph6: str
    edges: str
    flags: GraphFlags
    bundle: InvariantBundle
    P: str = Field(..., description="Independence polynomial in x")
    h_edge: HilbertProfile
    h_cover: Optional[HilbertProfile] = None
    degree: Optional[DegreeReport] = None
    i: int
    pdim: Optional[int] = None
    reg_cover: Optional[int] = None
    pdim_method: Optional[str] = None
    betti: Optional[BettiTable] = None
    recursion: Optional[AlphaMResult] = None
    pdim_trace: List[str] = Field(default_factory=list)
    block: Optional[BlockCheckReport] = None
    notes: List[str] = Field(default_factory=list)


def get_invariants(params: InvariantsParams) -> InvariantsResponse:
    """
    Compute the invariant report.

    Args:
        params: Graph input and report options

    Returns:
        InvariantsResponse; pdim falls back to n - i for connected chordal
        graphs and to the forest recursion for forests when Hochster is out of range
    """
    g = read_graph_input(params.graph6, params.edges)
    flags = classify(g)
    b = bundle(g)
    field = CoefficientField.parse(params.field) if params.field else CoefficientField.default()
    response = InvariantsResponse(
        graph6=to_graph6(g),
        edges=to_edge_list_text(g),
        flags=flags,
        bundle=b,
        P=IntPoly(tuple(b.gvec)).render("x"),
        h_edge=h_edge(b),
        i=i_number(g),
    )
    if b.has_edge:
        response.h_cover = h_cover(b)
        response.degree = degree_report(b)
    else:
        response.notes.append("edgeless graph: R/J(G) is not defined, h_J omitted")

    if params.betti and g.n <= get_config().guards.hochster_max_n:
        table = hochster_table(g, field)
        response.betti = table
        response.pdim, response.pdim_method = table.pdim, "hochster"
    elif flags.forest:
        response.pdim, response.pdim_method = jk_pdim(g), "jk"
    elif flags.chordal and flags.connected and b.has_edge:
        response.pdim, response.pdim_method = g.n - response.i, "chordal"
    else:
        response.notes.append("pdim skipped: graph exceeds the Hochster guard and has no fast path")
    if response.pdim is not None and b.has_edge:
        response.reg_cover = response.pdim - 1

    if params.trace:
        if flags.forest:
            response.recursion = jk_alpha_M(g)
            jk_pdim(g, trace=response.pdim_trace)
        if flags.block_graph and flags.connected:
            try:
                response.block = block_check(g)
            except StructureError as e:
                response.notes.append(str(e))
    return response


def render_invariants(r: InvariantsResponse) -> str:
    """Plain-text report"""
    lines = [
        f"graph6: {r.graph6}",
        f"edges: {r.edges}",
        f"flags: {', '.join(r.flags.labels()) or '-'}"
        f" (connected={r.flags.connected}, radius={r.flags.radius}, max_degree={r.flags.max_degree})",
        f"P(x) = {r.P}",
        f"alpha={r.bundle.alpha} M={r.bundle.M} c={r.bundle.c} g(G)={r.bundle.gG} i={r.i}",
        f"h_I(t) = {IntPoly(tuple(r.h_edge.h)).render()}  (dim {r.h_edge.dim}, deg {r.h_edge.deg_h})",
    ]
    if r.h_cover is not None:
        lines.append(
            f"h_J(t) = {IntPoly(tuple(r.h_cover.h)).render()}  "
            f"(dim {r.h_cover.dim}, deg {r.h_cover.deg_h}, a-invariant {r.h_cover.a_invariant})"
        )
    if r.degree is not None:
        lines.append(f"degree case: {r.degree.case}" + (f" (d={r.degree.d})" if r.degree.d is not None else ""))
    if r.pdim is not None:
        lines.append(f"pdim(R/I)={r.pdim} reg(R/J)={r.reg_cover} [{r.pdim_method}]")
    if r.reg_cover is not None and r.h_cover is not None:
        lines.append(f"pair (reg, deg h_J) = ({r.reg_cover}, {r.h_cover.deg_h})")
    if r.betti is not None:
        lines.append(f"Betti table over {r.betti.field}:")
        lines.append(r.betti.render())
    if r.recursion is not None:
        lines.append(f"(alpha, M, c) recursion: {(r.recursion.alpha, r.recursion.M, r.recursion.c)}"
                     + (" [fallback used]" if r.recursion.fallback else ""))
        lines.extend(r.recursion.trace)
    if r.pdim_trace:
        lines.append("pdim recursion:")
        lines.extend(r.pdim_trace)
    if r.block is not None:
        lines.append(f"block check: M={r.block.M} i={r.block.i} satisfied={r.block.satisfied}")
        lines.extend(r.block.trace)
    lines.extend(f"note: {n}" for n in r.notes)
    return "\n".join(lines)
