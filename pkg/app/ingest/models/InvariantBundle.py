from typing import List
from pydantic import BaseModel, Field


class InvariantBundle(BaseModel):
    """Invariants read off the independence polynomial of one graph"""
    n: int = Field(..., description="Vertex count")
    gvec: List[int] = Field(..., description="g_0..g_alpha, g_i = number of independent sets of size i")
    alpha: int = Field(..., description="Independence number, deg P_G")
    M: int = Field(..., description="Multiplicity of -1 as a root of P_G")
    c: int = Field(..., description="First nonzero Taylor coefficient of P_G at -1")
    gG: int = Field(..., description="Alternating sum of g_1, g_2, ...")
    euler: int = Field(..., description="Unreduced Euler characteristic of the independence complex")
    has_edge: bool = Field(True, description="Graph has at least one edge")
