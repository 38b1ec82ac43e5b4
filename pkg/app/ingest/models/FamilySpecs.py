from typing import List
from pydantic import BaseModel, Field, field_validator, model_validator


class Radius2Spec(BaseModel):
    """Tree of radius at most 2: a center with L1 leaves and m children v_i carrying t_i leaves each"""
    L1: int = Field(..., ge=0, description="Leaves attached to the center")
    ts: List[int] = Field(default_factory=list, description="t_1..t_m, leaves below each non-leaf child")

    @field_validator("ts")
    @classmethod
    def _canonical(cls, ts: List[int]) -> List[int]:
        if any(t < 1 for t in ts):
            raise ValueError("every t_i must be >= 1")
        return sorted(ts, reverse=True)

    @model_validator(mode="after")
    def _has_edge(self):
        if self.L1 + len(self.ts) == 0:
            raise ValueError("radius-2 spec needs at least one edge (L1 + m >= 1)")
        return self

    @property
    def m(self) -> int:
        return len(self.ts)

    @property
    def B(self) -> int:
        return self.L1 + self.m

    @property
    def L2(self) -> int:
        return sum(self.ts)

    @property
    def n(self) -> int:
        return 1 + self.B + self.L2


class SplitSpec(BaseModel):
    """Clique x_1..x_c where x_j carries s_j pendant independent vertices"""
    sizes: List[int] = Field(..., min_length=1, description="s_1..s_c")

    @field_validator("sizes")
    @classmethod
    def _canonical(cls, sizes: List[int]) -> List[int]:
        if any(s < 0 for s in sizes):
            raise ValueError("group sizes must be >= 0")
        return sorted(sizes, reverse=True)

    @model_validator(mode="after")
    def _has_edge(self):
        if len(self.sizes) == 1 and self.sizes[0] == 0:
            raise ValueError("split spec needs at least one edge")
        return self

    @property
    def c(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return self.c + sum(self.sizes)

    @property
    def delta_I(self) -> int:
        return max(self.sizes)
