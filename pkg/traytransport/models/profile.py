"""
Analytic jerk-limited profiles.

A profile is an ordered list of constant-jerk segments starting at rest. The
knot states (time, position, velocity, acceleration at each segment start)
are stored with the profile so sampling is a closed-form cubic evaluation.
"""

from typing import List, Tuple

from pydantic import BaseModel, Field, field_validator


class JerkSegment(BaseModel):
    """A stretch of constant jerk."""

    duration: float = Field(ge=0, description="Segment duration in seconds")
    jerk: float = Field(description="Constant jerk (units/s³)")

    model_config = {"frozen": True}


class ScalarProfile1D(BaseModel):
    """Rest-to-rest jerk-limited motion of a single coordinate."""

    segments: List[JerkSegment] = Field(default_factory=list)
    knots: List[Tuple[float, float, float, float]] = Field(
        default_factory=list,
        description="(t, p, v, a) at the start of each segment plus the final state",
    )
    total_time: float = Field(ge=0, description="Duration in seconds")
    peak_velocity: float = Field(ge=0, description="Largest velocity reached")
    distance: float = Field(ge=0, description="Covered displacement")

    model_config = {"frozen": True}


class RotationProfile(BaseModel):
    """
    Tray-tilt profile of the acceleration phase.

    Seven segments with jerk +j_rm, 0, -j_rm, 0, -j_rm, 0, +j_rm; breakpoints
    are the cumulative ends t1..t6 and t_a. After t_a the tray holds
    terminal_tilt.
    """

    profile: ScalarProfile1D
    breakpoints: Tuple[float, float, float, float, float, float, float] = Field(
        description="t1, t2, t3, t4, t5, t6, t_a in seconds"
    )
    terminal_tilt: float = Field(ge=0, description="φ_rm in radians")
    direction_sign: int = Field(1, description="+1 tilts into the motion, -1 against it")

    model_config = {"frozen": True}

    @field_validator("direction_sign")
    def validate_sign(cls, v):
        if v not in (1, -1):
            raise ValueError("direction_sign must be +1 or -1")
        return v

    @property
    def segments(self) -> List[JerkSegment]:
        return self.profile.segments

    @property
    def t_a(self) -> float:
        return self.breakpoints[-1]
