from traytransport.models.limits import MotionLimits, ProfileCaps
from traytransport.models.physical import (
    AccelLimit,
    ForceBalance,
    GravityConstant,
    ObjectParams,
    TrayState,
)
from traytransport.models.profile import JerkSegment, RotationProfile, ScalarProfile1D
from traytransport.models.reports import (
    ConstraintAudit,
    EndpointAudit,
    EndpointCheck,
    LimitCheck,
    StabilityReport,
    ValidationReport,
)
from traytransport.models.run_config import RunConfig
from traytransport.models.trajectory import (
    TRAJECTORY_COLUMNS,
    ComparisonReport,
    KinematicSample,
    PhaseMarks,
    PlanRequest,
    SweepResult,
    SweepRow,
    Trajectory,
    TrajectorySummary,
)

# Export all models
__all__ = [
    "AccelLimit",
    "ComparisonReport",
    "ConstraintAudit",
    "EndpointAudit",
    "EndpointCheck",
    "ForceBalance",
    "GravityConstant",
    "JerkSegment",
    "KinematicSample",
    "LimitCheck",
    "MotionLimits",
    "ObjectParams",
    "PhaseMarks",
    "PlanRequest",
    "ProfileCaps",
    "RotationProfile",
    "RunConfig",
    "ScalarProfile1D",
    "StabilityReport",
    "SweepResult",
    "SweepRow",
    "TRAJECTORY_COLUMNS",
    "Trajectory",
    "TrajectorySummary",
    "TrayState",
    "ValidationReport",
]
