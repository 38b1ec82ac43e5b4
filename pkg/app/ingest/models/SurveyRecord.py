from typing import Dict, List, Optional, Tuple
from pydantic import BaseModel, Field

from app.ingest.models.PairSet import PairSet

CSV_COLUMNS = ("graph6", "n", "alpha", "M", "gG", "i", "pdim", "reg", "degJ", "degI", "aInv", "flags")


class SurveyRecord(BaseModel):
    """One surveyed graph"""
    graph6: str = Field(..., description="graph6 encoding as read or generated")
    line: Optional[int] = Field(None, description="Input line number, None for generated graphs")
    n: int = Field(..., description="Vertex count")
    alpha: int = Field(..., description="Independence number")
    M: int = Field(..., description="Multiplicity of -1 as a root of P_G")
    gG: int = Field(..., description="Alternating sum of the g-vector")
    i: int = Field(..., description="Independent domination number")
    pdim: int = Field(..., description="pdim(R/I(G))")
    reg_cover: int = Field(..., description="reg(R/J(G)) = pdim - 1")
    deg_h_cover: int = Field(..., description="deg h of R/J(G) = n - 2 - M")
    deg_h_edge: int = Field(..., description="deg h of R/I(G) = alpha - M")
    a_invariant: int = Field(..., description="a-invariant of R/J(G) = -M")
    flags: str = Field("", description="'|'-joined structure labels")
    pdim_method: str = Field(..., description="'jk', 'chordal' or 'hochster'")

    @property
    def pair(self) -> Tuple[int, int]:
        return self.reg_cover, self.deg_h_cover

    def csv_row(self) -> List:
        return [
            self.graph6, self.n, self.alpha, self.M, self.gG, self.i, self.pdim,
            self.reg_cover, self.deg_h_cover, self.deg_h_edge, self.a_invariant, self.flags,
        ]


class SkippedGraph(BaseModel):
    """Dead letter for a graph the survey could not process"""
    graph6: Optional[str] = Field(None, description="Raw input, when it could be read")
    line: Optional[int] = Field(None, description="Input line number")
    reason: str = Field(..., description="Why the graph was skipped")


class UnrealizableReport(BaseModel):
    """Lemma and conjecture checks over a pair set"""
    n: int
    lemma_violations: List[Tuple[int, int]] = Field(
        default_factory=list, description="Observed (1, d) pairs with d >= 2; a hard failure"
    )
    conjecture_conflicts: List[Tuple[int, int]] = Field(
        default_factory=list, description="Observed pairs the conjecture predicate calls unrealizable"
    )

    @property
    def lemma_ok(self) -> bool:
        return not self.lemma_violations


class SurveySummary(BaseModel):
    """Aggregate of one survey run; pair sets and lemma reports are kept per vertex count"""
    processed: int = 0
    pairs: Dict[int, PairSet] = Field(default_factory=dict, description="n -> observed (reg, deg h) pairs")
    skipped: List[SkippedGraph] = Field(default_factory=list)
    band_violations: List[str] = Field(default_factory=list, description="graph6 of graphs outside the band")
    corollary_violations: List[str] = Field(default_factory=list)
    unrealizable: List[UnrealizableReport] = Field(default_factory=list)
    spot_checks: int = Field(0, description="Chordal graphs re-checked by Hochster")
    oracle_samples: int = Field(0, description="Graphs re-checked against the series oracles")
    hard_failures: List[str] = Field(default_factory=list)

    def pair_count(self) -> int:
        return sum(len(p) for p in self.pairs.values())

    def conjecture_conflicts(self) -> int:
        return sum(len(r.conjecture_conflicts) for r in self.unrealizable)

    @property
    def ok(self) -> bool:
        return not self.hard_failures and all(r.lemma_ok for r in self.unrealizable)
