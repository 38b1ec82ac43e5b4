from typing import List
from pydantic import BaseModel, Field


class SuiteResult(BaseModel):
    """Outcome of one cross-check suite"""
    name: str = Field(..., description="Suite name, e.g. 'oracles'")
    checked: int = Field(0, description="Number of individual comparisons made")
    failures: List[str] = Field(default_factory=list, description="One line per failed comparison")

    @property
    def ok(self) -> bool:
        return not self.failures


class VerifyReport(BaseModel):
    level: str = Field(..., description="'quick' or 'full'")
    suites: List[SuiteResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)
