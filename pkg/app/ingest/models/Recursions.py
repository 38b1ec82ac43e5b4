from typing import List, Optional
from pydantic import BaseModel, Field


class JKSplit(BaseModel):
    """One pivot step of a forest recursion"""
    v: int = Field(..., description="Pivot vertex")
    leaves: List[int] = Field(..., description="Leaf neighbors v_1..v_(n-1) of the pivot")
    other: Optional[int] = Field(None, description="The remaining neighbor v_n")
    f_prime: List[int] = Field(..., description="Vertices of F'")
    f_double_prime: List[int] = Field(..., description="Vertices of F'' = F - N[v]")
    convention: str = Field(..., description="'pdim' (F' = F - v_1) or 'alpha_M' (F' = F - {v, v_1..v_(n-1)})")


class AlphaMResult(BaseModel):
    alpha: int = Field(..., description="Independence number")
    M: int = Field(..., description="Order of -1 as a root of P_F")
    c: int = Field(..., description="First nonzero Taylor coefficient at -1")
    fallback: bool = Field(False, description="A tie with equal leads forced exact computation somewhere")
    trace: List[str] = Field(default_factory=list, description="Recursion tree, one indented line per step")


class LeafCliqueSplit(BaseModel):
    K: List[int] = Field(..., description="Leaf maximal clique")
    s: int = Field(..., description="Cut vertex shared with the rest of the graph")
    C: List[int] = Field(..., description="K - {s}")
    r: int = Field(..., description="|C|")
    H: List[int] = Field(..., description="Vertices of G - K")
    L: List[int] = Field(..., description="Vertices of G - N[s]")


class BlockCheckReport(BaseModel):
    M: int
    i: int
    trace: List[str] = Field(default_factory=list)
    identity_ok: bool = Field(..., description="P_G = (1+rx)P_H + xP_L held at every step")
    i_recursion_ok: bool = Field(..., description="i(G) = 1 + min{i(H), i(L)} held at every step")
    satisfied: bool = Field(..., description="M <= i")
    reg_minus_deg: int = Field(..., description="reg(R/J) - deg h_J = M - i + 1")
