from typing import Dict, List, Set, Tuple
from pydantic import BaseModel, Field, field_serializer


class PairSet(BaseModel):
    """Multiset of (reg, deg h) pairs with the number of graphs realizing each"""
    n: int = Field(..., description="Vertex count the pairs belong to")
    counts: Dict[Tuple[int, int], int] = Field(default_factory=dict)

    def add(self, reg: int, deg: int, count: int = 1):
        self.counts[(reg, deg)] = self.counts.get((reg, deg), 0) + count

    def merge(self, other: "PairSet"):
        for (r, d), c in other.counts.items():
            self.add(r, d, c)

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.counts)

    def as_set(self) -> Set[Tuple[int, int]]:
        return set(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.counts

    @field_serializer("counts")
    def _rows(self, counts: Dict[Tuple[int, int], int]):
        return [{"reg": r, "deg": d, "count": c} for (r, d), c in sorted(counts.items())]
