"""
Verification reports and their JSON form.
Field order is fixed so identical runs render byte-identical JSON.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class DegreeResidual(BaseModel):
    """LHS - RHS for one compared quantity; '0' when it vanishes."""

    model_config = ConfigDict(frozen=True)

    label: str
    degree: int
    value: str = "0"
    sample: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.value == "0"


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: str
    params: Dict[str, str] = Field(default_factory=dict)
    n: int
    passed: bool = Field(alias='pass')
    residual_degree: int
    elapsed_ms: Optional[float] = None
    seed: int
    residuals: List[DegreeResidual] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)

    @classmethod
    def from_json(cls, text: str) -> 'VerificationReport':
        return cls.model_validate_json(text)

    def failures(self) -> List[DegreeResidual]:
        return [r for r in self.residuals if not r.is_zero]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.id} n={self.n} t^{self.residual_degree} seed={self.seed}"
        if self.elapsed_ms is not None:
            line += f" ({self.elapsed_ms:.1f} ms)"
        return line
