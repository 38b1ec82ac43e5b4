from typing import List, Optional
from pydantic import BaseModel, Field


class GraphFlags(BaseModel):
    """Structural classification of one graph"""
    n: int = Field(..., description="Vertex count")
    edge_count: int = Field(..., description="Number of edges")
    connected: bool = Field(..., description="Connected (the empty graph counts as connected)")
    forest: bool = Field(..., description="Acyclic")
    chordal: bool = Field(..., description="No induced cycle of length >= 4")
    split: bool = Field(..., description="Vertex set splits into a clique and an independent set")
    clique_part: Optional[List[int]] = Field(None, description="C of the reported split partition (a maximum clique)")
    independent_part: Optional[List[int]] = Field(None, description="I of the reported split partition")
    split_q: Optional[int] = Field(None, description="Delta_I + |C|, independent of the chosen split partition")
    block_graph: bool = Field(..., description="Every biconnected component is a clique")
    radius: Optional[int] = Field(None, description="Radius, None when disconnected or empty")
    max_degree: int = Field(..., description="Maximum vertex degree")

    @property
    def radius_at_most_2(self) -> bool:
        return self.radius is not None and self.radius <= 2

    def labels(self) -> List[str]:
        """Short flag names for survey output"""
        out = []
        if self.chordal:
            out.append("chordal")
        if self.split:
            out.append("split")
        if self.block_graph:
            out.append("block")
        if self.forest:
            out.append("forest")
        if self.forest and self.connected and self.radius_at_most_2:
            out.append("radius2")
        return out
