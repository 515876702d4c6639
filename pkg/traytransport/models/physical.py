"""
Physical value types for the tray-object contact model.

All quantities are SI. The motion plane is the vertical plane that contains
the straight transport line; moments are scalars about the axis through the
base center R perpendicular to that plane.
"""

import math
from typing import Tuple

from pydantic import BaseModel, Field, field_validator


class ObjectParams(BaseModel):
    """
    The transported cylinder.

    inertia is taken about a transverse axis through the base center R.
    Build instances with physics_service.make_cylinder to get the uniform
    solid-cylinder inertia.
    """

    mass: float = Field(gt=0, description="Mass m in kilograms")
    radius: float = Field(gt=0, description="Base radius r in meters")
    height: float = Field(gt=0, description="Height h in meters")
    inertia: float = Field(gt=0, description="Moment of inertia I about R in kg·m²")

    model_config = {"frozen": True}

    @property
    def inertia_per_mass(self) -> float:
        """I/m, the only way mass enters the tipping limit."""
        return self.inertia / self.mass

    def with_radius(self, radius: float) -> "ObjectParams":
        """Same mass density model with another base radius."""
        from traytransport.services.physics_service import make_cylinder

        return make_cylinder(self.mass, radius, self.height)


class TrayState(BaseModel):
    """Tilt of the tray and its first two derivatives."""

    phi: float = Field(description="Tilt φ in radians, positive leans into the motion direction")
    omega: float = Field(0.0, description="Angular velocity ω in rad/s")
    alpha: float = Field(0.0, description="Angular acceleration α in rad/s²")

    model_config = {"frozen": True}

    @field_validator("phi")
    def validate_phi(cls, v):
        """Tilt must lie in [-π/2, π/2]."""
        if not math.isfinite(v) or abs(v) > math.pi / 2:
            raise ValueError(f"Tilt phi must lie in [-pi/2, pi/2], got {v}")
        return v

    @field_validator("omega", "alpha")
    def validate_finite(cls, v):
        """Rates must be finite."""
        if not math.isfinite(v):
            raise ValueError("Tray rates must be finite")
        return v


class ForceBalance(BaseModel):
    """
    Forces acting on the object in the tray frame.

    Vectors are (tangential, normal) pairs: tangential points along the tray
    surface toward the motion direction, normal points out of the tray.
    """

    f_obj: Tuple[float, float] = Field(description="Gravity plus inertial force, N")
    f_tray: Tuple[float, float] = Field(description="Contact force from the tray, N")
    f_centrifugal: Tuple[float, float] = Field(description="Centrifugal term about R, N")
    torque: float = Field(description="Required moment I·|α| about R, N·m")

    model_config = {"frozen": True}


class AccelLimit(BaseModel):
    """
    Tipping-limited translational acceleration.

    constrained is False when the tipping constraint is inactive (the
    denominator of the limit is not positive); value is then meaningless and
    callers clamp to a_max through capped().
    """

    value: float = Field(0.0, description="Acceleration limit in m/s² when constrained")
    constrained: bool = Field(True, description="False when tipping cannot occur")
    clamped_to_zero: bool = Field(False, description="True when the raw quotient was negative")

    model_config = {"frozen": True}

    @classmethod
    def unconstrained(cls) -> "AccelLimit":
        return cls(value=0.0, constrained=False)

    def capped(self, a_max: float) -> float:
        """Acceleration allowed by both the tipping limit and a_max."""
        if not self.constrained:
            return a_max
        return min(self.value, a_max)


class GravityConstant(BaseModel):
    """Magnitude of gravitational acceleration, pointing down."""

    g: float = Field(9.81, description="m/s²")

    model_config = {"frozen": True}

    @field_validator("g")
    def validate_g(cls, v):
        if v != 9.81:
            raise ValueError("Gravity is fixed at 9.81 m/s²")
        return v
