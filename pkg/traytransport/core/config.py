import math
from typing import Optional

# In Pydantic v2, BaseSettings is moved to pydantic_settings
from pydantic_settings import BaseSettings

# Physical and numerical constants. These are fixed project values and are
# deliberately not configurable, so planning output never depends on the
# environment.
GRAVITY: float = 9.81
DENOMINATOR_EPS: float = 1e-6
PHI_CAP: float = math.pi / 3
PHI_FIT_TOL: float = 1e-6
DEFAULT_SAMPLE_DT: float = 1e-3
TOL_COP: float = 1e-4
ENDPOINT_TOL: float = 1e-6
INTEGRATION_TOL: float = 1e-9
LIMIT_SLACK: float = 1e-9

# Motion constraints and test object used in the hardware experiment
DEFAULT_LIMITS = {
    "j_max": 6500.0,
    "a_max": 13.0,
    "v_max": 0.6,
    "j_rm": 6000.0,
    "alpha_rm": 9.0,
    "omega_rm": 2.61,
}
DEFAULT_OBJECT = {
    "mass_kg": 1.0,
    "radius_m": 0.008,
    "height_m": 0.2,
}

# Default domain for the theoretical efficiency map (meters)
DEFAULT_SWEEP_GRID = "0.5:2.0:20,0.5:2.0:20"


class Settings(BaseSettings):
    """
    Operational settings.

    These settings can be configured using environment variables prefixed
    with TRAYTRANSPORT_. None of them influences the numbers a planner
    produces.
    """
    PROJECT_NAME: str = "TrayTransport"
    VERSION: str = "0.1.0"

    # Logging settings
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # Number of worker processes for efficiency sweeps (1 = serial)
    SWEEP_WORKERS: int = 1

    model_config = {
        "case_sensitive": True,
        "env_prefix": "TRAYTRANSPORT_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore"
    }


# Create global settings object
settings = Settings()
