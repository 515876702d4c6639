import math

import pytest

from traytransport.core.config import DEFAULT_OBJECT
from traytransport.models.limits import MotionLimits
from traytransport.models.trajectory import PlanRequest
from traytransport.services.physics_service import make_cylinder


@pytest.fixture
def limits():
    """Limits used in the hardware experiment."""
    return MotionLimits.default()


@pytest.fixture
def cylinder():
    """1 kg cylinder, 4 mm radius, 0.2 m tall."""
    return make_cylinder(DEFAULT_OBJECT["mass_kg"], 0.004, DEFAULT_OBJECT["height_m"])


@pytest.fixture
def wide_cylinder():
    """The default 8 mm cylinder."""
    return make_cylinder(DEFAULT_OBJECT["mass_kg"], DEFAULT_OBJECT["radius_m"], DEFAULT_OBJECT["height_m"])


@pytest.fixture
def request_pi8(cylinder, limits):
    """0.5 m along a line inclined by π/8."""
    return PlanRequest(target_distance=0.5, theta=math.pi / 8, object=cylinder, limits=limits)
