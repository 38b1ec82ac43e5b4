from typing import List, Optional
from pydantic import BaseModel, Field


class HilbertProfile(BaseModel):
    """Hilbert series data of a graded quotient R/I"""
    dim: int = Field(..., description="Krull dimension")
    h: List[int] = Field(..., description="h-polynomial coefficients, index = degree")
    deg_h: int = Field(..., description="Degree of the h-polynomial")
    a_invariant: int = Field(..., description="deg h - dim")


class DegreeReport(BaseModel):
    """Degrees of both h-polynomials and which degree case applies to the cover ideal"""
    deg_h_edge: int = Field(..., description="deg h of R/I(G), equals alpha - M")
    deg_h_cover: int = Field(..., description="deg h of R/J(G), equals n - 2 - M")
    case: str = Field(..., description="'max' when g(G) != 1, 'floor' when every E vanishes, else 'intermediate'")
    d: Optional[int] = Field(None, description="min{s : E_(s+3) != 0} in the intermediate case")
