from pydantic import BaseModel, Field

from traytransport.core.config import DEFAULT_LIMITS


class ProfileCaps(BaseModel):
    """Jerk, acceleration and velocity caps of a single jerk-limited axis."""

    jerk: float = Field(gt=0, description="Jerk cap (units/s³)")
    accel: float = Field(gt=0, description="Acceleration cap (units/s²)")
    velocity: float = Field(gt=0, description="Velocity cap (units/s)")

    model_config = {"frozen": True}


class MotionLimits(BaseModel):
    """
    Translational and rotational motion limits of the robot.

    The bounds are symmetric and apply along the whole trajectory; speeds are
    non-negative along the line and tray rates are bounded in magnitude.
    """

    j_max: float = Field(gt=0, description="Translational jerk limit, m/s³")
    a_max: float = Field(gt=0, description="Translational acceleration limit, m/s²")
    v_max: float = Field(gt=0, description="Translational velocity limit, m/s")
    j_rm: float = Field(gt=0, description="Tray jerk limit, rad/s³")
    alpha_rm: float = Field(gt=0, description="Tray angular acceleration limit, rad/s²")
    omega_rm: float = Field(gt=0, description="Tray angular velocity limit, rad/s")

    model_config = {"frozen": True}

    @classmethod
    def default(cls) -> "MotionLimits":
        """Limits used in the hardware experiment."""
        return cls(**DEFAULT_LIMITS)

    @property
    def rotation_caps(self) -> ProfileCaps:
        return ProfileCaps(jerk=self.j_rm, accel=self.alpha_rm, velocity=self.omega_rm)

    @property
    def translation_caps(self) -> ProfileCaps:
        return ProfileCaps(jerk=self.j_max, accel=self.a_max, velocity=self.v_max)
