"""
Family API
Builds a named family member, predicts its invariants in closed form and
measures them on the constructed graph.
"""

from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from app.errors import FamilyParameterError
from app.functions import families as fam
from app.functions.betti import CoefficientField
from app.functions.graph_core import Graph, to_edge_list_text, to_graph6
from app.functions.polyring import IntPoly
from app.ingest.models import FieldCheck, Measurement, Prediction, Radius2Spec, SplitSpec
from app.apis.invariants import read_graph_input


class FamilyParams(BaseModel):
    """Parameters for a family report"""
    name: str = Field(..., description="radius2, split, Bk, Gkr, Hnp, Hpq, whisker, whisker1 or cone")
    values: List[int] = Field(default_factory=list, description="Positional integer parameters")
    L1: Optional[int] = Field(None, description="radius2: leaves at the center")
    ts: Optional[List[int]] = Field(None, description="radius2: t_1..t_m")
    graph6: Optional[str] = Field(None, description="Base graph for split, whisker, whisker1, cone")
    edges: Optional[str] = None
    pdim_method: str = "auto"
    field: Optional[str] = Field(None, description="Hochster field: 'q' or 'p:PRIME'; defaults to the config")


class FamilyResponse(BaseModel):
    """Response model for one constructed family member"""
    name: str
    graph6: str
    edges: str
    n: int
    prediction: Prediction
    measurement: Measurement
    checks: List[FieldCheck]
    all_match: bool


def _need(values: List[int], count: int, usage: str) -> List[int]:
    if len(values) != count:
        raise FamilyParameterError(f"expected {usage}")
    return values


def _base(params: FamilyParams) -> Graph:
    if params.graph6 is None and params.edges is None:
        raise FamilyParameterError(f"family {params.name} needs a base graph via --g6 or --edges")
    return read_graph_input(params.graph6, params.edges)


def _radius2(p: FamilyParams) -> Tuple[Graph, Prediction]:
    if p.L1 is not None or p.ts is not None:
        spec = Radius2Spec(L1=p.L1 or 0, ts=p.ts or [])
    elif p.values:
        spec = Radius2Spec(L1=p.values[0], ts=p.values[1:])
    else:
        raise FamilyParameterError("expected radius2 L1 [t_1 ... t_m] or --L1/--ts")
    return fam.build_radius2(spec), fam.predict_radius2(spec)


def _split(p: FamilyParams) -> Tuple[Graph, Prediction]:
    g = fam.build_split(SplitSpec(sizes=p.values)) if p.values else _base(p)
    return g, fam.predict_split(g)


def _bk(p: FamilyParams):
    (k,) = _need(p.values, 1, "Bk k")
    return fam.build_Bk(k), fam.predict_Bk(k)


def _gkr(p: FamilyParams):
    k, r = _need(p.values, 2, "Gkr k r")
    return fam.build_Gkr(k, r), fam.predict_Gkr(k, r)


def _hnp(p: FamilyParams):
    n, q = _need(p.values, 2, "Hnp n p")
    return fam.build_Hnp(n, q), fam.predict_Hnp(n, q)


def _hpq(p: FamilyParams):
    a, q = _need(p.values, 2, "Hpq p q")
    return fam.build_Hpq(a, q), fam.predict_Hpq(a, q)


def _whisker(p: FamilyParams):
    (q,) = _need(p.values, 1, "whisker q with a base graph")
    base = _base(p)
    return fam.whisker_all(base, q), fam.predict_whisker_all(base, q)


def _whisker1(p: FamilyParams):
    (v,) = _need(p.values, 1, "whisker1 v with a base graph")
    base = _base(p)
    return fam.whisker_vertex(base, v), fam.predict_whisker_vertex(base, v)


def _cone(p: FamilyParams):
    _need(p.values, 0, "cone with a base graph and no parameters")
    base = _base(p)
    return fam.cone(base), fam.predict_cone(base)


FAMILIES: Dict[str, Callable[[FamilyParams], Tuple[Graph, Prediction]]] = {
    "radius2": _radius2,
    "split": _split,
    "Bk": _bk,
    "Gkr": _gkr,
    "Hnp": _hnp,
    "Hpq": _hpq,
    "whisker": _whisker,
    "whisker1": _whisker1,
    "cone": _cone,
}


def get_family(params: FamilyParams) -> FamilyResponse:
    """
    Construct, predict, measure and compare.

    Raises:
        FamilyParameterError: unknown family or bad parameters
    """
    builder = FAMILIES.get(params.name)
    if builder is None:
        raise FamilyParameterError(f"unknown family {params.name!r}; known: {', '.join(FAMILIES)}")
    try:
        g, prediction = builder(params)
    except ValidationError as e:
        raise FamilyParameterError(str(e))
    field = CoefficientField.parse(params.field) if params.field else CoefficientField.default()
    measurement = fam.measure_graph(g, prediction.filled(), params.pdim_method, field)
    checks = fam.compare(prediction, measurement)
    return FamilyResponse(
        name=params.name,
        graph6=to_graph6(g),
        edges=to_edge_list_text(g),
        n=g.n,
        prediction=prediction,
        measurement=measurement,
        checks=checks,
        all_match=all(c.match for c in checks),
    )


def render_family(r: FamilyResponse) -> str:
    lines = [
        f"family {r.name} {r.prediction.params}",
        f"graph6: {r.graph6}",
        f"edges: {r.edges}",
    ]
    for c in r.checks:
        shown_p = IntPoly(tuple(c.predicted)).render("x") if c.field == "P" else c.predicted
        shown_m = IntPoly(tuple(c.measured)).render("x") if c.field == "P" and c.measured else c.measured
        lines.append(f"  {c.field:<12} predicted={shown_p}  measured={shown_m}  "
                     f"{'MATCH' if c.match else 'MISMATCH'}  [{c.provenance}]")
    pair = r.prediction.pair()
    if pair is not None:
        lines.append(f"pair (reg, deg h_J) = {pair}")
    lines.extend(f"note: {n}" for n in r.prediction.notes)
    lines.append("ALL MATCH" if r.all_match else "MISMATCH FOUND")
    return "\n".join(lines)
