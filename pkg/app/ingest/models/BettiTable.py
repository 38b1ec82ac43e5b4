from typing import Dict, List, Tuple
from pydantic import BaseModel, Field


class BettiEntry(BaseModel):
    i: int = Field(..., description="Homological degree")
    j: int = Field(..., description="Internal degree")
    count: int = Field(..., description="Graded Betti number beta_{i,j}, always >= 1 when stored")


class BettiTable(BaseModel):
    """Graded Betti numbers of R/I(G) from Hochster's formula"""
    n: int = Field(..., description="Vertex count of the graph")
    field: str = Field("q", description="Coefficient field used for homology")
    entries: List[BettiEntry] = Field(default_factory=list, description="Nonzero beta_{i,j}, sorted by (i, j)")

    @classmethod
    def from_counts(cls, n: int, field: str, counts: Dict[Tuple[int, int], int]) -> "BettiTable":
        entries = [BettiEntry(i=i, j=j, count=c) for (i, j), c in sorted(counts.items()) if c]
        return cls(n=n, field=field, entries=entries)

    def get(self, i: int, j: int) -> int:
        for e in self.entries:
            if e.i == i and e.j == j:
                return e.count
        return 0

    @property
    def pdim(self) -> int:
        return max((e.i for e in self.entries), default=0)

    @property
    def reg(self) -> int:
        return max((e.j - e.i for e in self.entries), default=0)

    def totals(self) -> List[int]:
        out = [0] * (self.pdim + 1)
        for e in self.entries:
            out[e.i] += e.count
        return out

    def render(self) -> str:
        """Macaulay2-style table: columns i, rows j - i, dots for zeros"""
        cols = self.pdim + 1
        grid = [[0] * cols for _ in range(self.reg + 1)]
        for e in self.entries:
            grid[e.j - e.i][e.i] = e.count
        totals = self.totals()
        width = max([len(str(x)) for x in totals] + [len(str(cols - 1))])
        lines = ["       " + " ".join(f"{i:>{width}}" for i in range(cols)),
                 "total: " + " ".join(f"{t:>{width}}" for t in totals)]
        for row, values in enumerate(grid):
            cells = " ".join(f"{(str(v) if v else '.'):>{width}}" for v in values)
            lines.append(f"{str(row) + ':':>6} {cells}")
        return "\n".join(lines)
