from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

PREDICTED_FIELDS = ("P", "alpha", "M", "i", "pdim", "reg_cover", "deg_h_cover", "deg_h_edge")


class Prediction(BaseModel):
    """Closed-form invariants for a family member, each with the result it comes from"""
    family: str = Field(..., description="Family name, e.g. 'radius2', 'Gkr'")
    params: Dict[str, Any] = Field(default_factory=dict, description="Constructor parameters")
    n: int = Field(..., description="Vertex count of the constructed graph")
    P: Optional[List[int]] = Field(None, description="Independence polynomial coefficients")
    alpha: Optional[int] = None
    M: Optional[int] = None
    i: Optional[int] = None
    pdim: Optional[int] = Field(None, description="pdim(R/I(G))")
    reg_cover: Optional[int] = Field(None, description="reg(R/J(G))")
    deg_h_cover: Optional[int] = Field(None, description="deg h of R/J(G)")
    deg_h_edge: Optional[int] = Field(None, description="deg h of R/I(G)")
    provenance: Dict[str, str] = Field(default_factory=dict, description="Field -> result that predicts it")
    notes: List[str] = Field(default_factory=list)

    def filled(self) -> List[str]:
        return [f for f in PREDICTED_FIELDS if getattr(self, f) is not None]

    def pair(self) -> Optional[tuple]:
        if self.reg_cover is None or self.deg_h_cover is None:
            return None
        return self.reg_cover, self.deg_h_cover


class Measurement(BaseModel):
    """Invariants computed directly on a graph"""
    n: int
    P: Optional[List[int]] = None
    alpha: Optional[int] = None
    M: Optional[int] = None
    i: Optional[int] = None
    pdim: Optional[int] = None
    reg_cover: Optional[int] = None
    deg_h_cover: Optional[int] = None
    deg_h_edge: Optional[int] = None
    pdim_method: Optional[str] = Field(None, description="'jk', 'chordal' or 'hochster'")


class FieldCheck(BaseModel):
    field: str
    predicted: Any
    measured: Any
    match: bool
    provenance: str = ""
