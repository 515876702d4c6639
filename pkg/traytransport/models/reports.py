from typing import List, Optional

from pydantic import BaseModel, Field

from traytransport.core.config import TOL_COP


class StabilityReport(BaseModel):
    """
    Pressure-center audit of a trajectory.

    cop_offset is measured from the base center toward the trailing edge of
    the current motion (the edge the object would tip over). Samples whose
    normal contact force vanishes are listed in singular_times and count as
    violations.
    """

    cop_offset: List[float] = Field(default_factory=list, description="Per-sample offset, m")
    margin: List[float] = Field(default_factory=list, description="r - |cop_offset|, m")
    min_margin: float
    min_margin_t: Optional[float] = None
    stable: bool
    first_violation_t: Optional[float] = None
    singular_times: List[float] = Field(default_factory=list)
    tolerance: float = Field(TOL_COP, description="Discretization tolerance on the margin, m")


class LimitCheck(BaseModel):
    """Worst observed value of one motion limit."""

    name: str
    observed: float
    limit: float
    slack: float
    passed: bool
    worst_t: Optional[float] = None


class ConstraintAudit(BaseModel):
    checks: List[LimitCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> LimitCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    @property
    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]


class EndpointCheck(BaseModel):
    name: str
    observed: float
    expected: float
    tolerance: float
    passed: bool


class EndpointAudit(BaseModel):
    checks: List[EndpointCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]


class ValidationReport(BaseModel):
    """All three audits of one trajectory."""

    stability: StabilityReport
    constraints: ConstraintAudit
    endpoint: EndpointAudit

    @property
    def passed(self) -> bool:
        return self.stability.stable and self.constraints.passed and self.endpoint.passed
