"""
Schema of the JSON run configuration read by the command line.

Every block rejects unknown keys so that a misspelt unit suffix fails loudly
instead of silently falling back to a default.
"""

import math
from typing import Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from traytransport.core.config import DEFAULT_LIMITS, DEFAULT_OBJECT, DEFAULT_SAMPLE_DT

STRICT = {"extra": "forbid", "frozen": True}


def _require_finite(v):
    if v is not None and not math.isfinite(v):
        raise ValueError("Numeric fields must be finite")
    return v


class ObjectBlock(BaseModel):
    mass_kg: float = Field(DEFAULT_OBJECT["mass_kg"], gt=0)
    radius_m: float = Field(DEFAULT_OBJECT["radius_m"], gt=0)
    height_m: float = Field(DEFAULT_OBJECT["height_m"], gt=0)

    model_config = STRICT

    @field_validator("mass_kg", "radius_m", "height_m")
    def validate_finite(cls, v):
        return _require_finite(v)


class LimitsBlock(BaseModel):
    j_max: float = Field(DEFAULT_LIMITS["j_max"], gt=0)
    a_max: float = Field(DEFAULT_LIMITS["a_max"], gt=0)
    v_max: float = Field(DEFAULT_LIMITS["v_max"], gt=0)
    j_rm: float = Field(DEFAULT_LIMITS["j_rm"], gt=0)
    alpha_rm: float = Field(DEFAULT_LIMITS["alpha_rm"], gt=0)
    omega_rm: float = Field(DEFAULT_LIMITS["omega_rm"], gt=0)

    model_config = STRICT

    @field_validator("j_max", "a_max", "v_max", "j_rm", "alpha_rm", "omega_rm")
    def validate_finite(cls, v):
        return _require_finite(v)


class TargetBlock(BaseModel):
    """Either (distance, elevation, azimuth) or a Cartesian displacement."""

    distance_m: Optional[float] = None
    theta_rad: Optional[float] = None
    psi_rad: Optional[float] = None
    x_m: Optional[float] = None
    y_m: Optional[float] = None
    z_m: Optional[float] = None

    model_config = STRICT

    @field_validator("distance_m", "theta_rad", "psi_rad", "x_m", "y_m", "z_m")
    def validate_finite(cls, v):
        return _require_finite(v)

    @model_validator(mode="after")
    def validate_single_form(self):
        polar = self.distance_m is not None
        cartesian = any(v is not None for v in (self.x_m, self.y_m, self.z_m))
        if polar == cartesian:
            raise ValueError(
                "Target must give exactly one of {distance_m, theta_rad, psi_rad} or {x_m, y_m, z_m}"
            )
        if polar and self.distance_m <= 0:
            raise ValueError(f"Target distance_m must be > 0, got {self.distance_m}")
        if cartesian and (self.theta_rad is not None or self.psi_rad is not None):
            raise ValueError("Angles cannot be combined with a Cartesian target")
        return self

    def resolve(self) -> Tuple[float, float, float]:
        """Return (distance, theta, psi)."""
        if self.distance_m is not None:
            return self.distance_m, self.theta_rad or 0.0, self.psi_rad or 0.0
        x, y, z = self.x_m or 0.0, self.y_m or 0.0, self.z_m or 0.0
        horizontal = math.hypot(x, y)
        distance = math.sqrt(horizontal * horizontal + z * z)
        if distance <= 0:
            raise ValueError("Cartesian target coincides with the start point")
        psi = math.atan2(y, x) if horizontal > 0 else 0.0
        return distance, math.atan2(z, horizontal), psi


class OutputBlock(BaseModel):
    trajectory_csv: Optional[str] = None
    summary_json: Optional[str] = None
    report_json: Optional[str] = None

    model_config = STRICT


class RunConfig(BaseModel):
    """A complete run: object, limits, target, sampling period, outputs."""

    object: ObjectBlock = Field(default_factory=ObjectBlock)
    baseline_object: Optional[ObjectBlock] = Field(
        None, description="Object used by the no-rotation arm of compare (defaults to object)"
    )
    limits: LimitsBlock = Field(default_factory=LimitsBlock)
    target: Optional[TargetBlock] = None
    sample_dt_s: float = Field(DEFAULT_SAMPLE_DT, gt=0)
    grid: Optional[str] = Field(None, description="Sweep grid x0:x1:n,y0:y1:n")
    output: OutputBlock = Field(default_factory=OutputBlock)

    model_config = STRICT

    @field_validator("sample_dt_s")
    def validate_finite(cls, v):
        return _require_finite(v)
