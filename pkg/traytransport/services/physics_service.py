"""
Tray-object contact model.

The object is rigidly attached to the tray by a virtual joint at the base
center R and rotates with the tray about R. Working in the tray frame, the
object carries F_obj = -m·a + m·g at its center of gravity O, the tray
pushes back with F_tray = -F_obj at the pressure center C, and the tray
rotation adds a centrifugal term of magnitude m·ω²·h/2. The moment balance
about R,

    τ = RO × F_obj + RC × F_tray + RC × F_r,    τ = I·|α|,

rearranged with C on the base boundary gives the largest translational
acceleration the object tolerates at the current tray state.

Frame conventions (planar, in the vertical plane containing the motion):
    tangential axis: along the tray surface, toward the motion direction
    normal axis:     out of the tray surface
    moments:         positive from the tangential toward the normal axis
    cop_offset:      distance of C from R toward the trailing edge
    φ > 0:           tray leaning into the motion direction
The centrifugal term acts along the negative normal and the rotational term
uses |α|, which is the form whose rearrangement is the closed-form limit
used by the planner.
"""

import logging
import math
from typing import Tuple, Union

import numpy as np

from traytransport.core.config import DENOMINATOR_EPS, GRAVITY
from traytransport.core.exceptions import InvalidParameterError, SingularConfigurationError
from traytransport.models.physical import (
    AccelLimit,
    ForceBalance,
    GravityConstant,
    ObjectParams,
    TrayState,
)

# Setup logging
logger = logging.getLogger(__name__)

GRAVITY_CONSTANT = GravityConstant(g=GRAVITY)

ArrayLike = Union[float, np.ndarray]

# Normal load below this fraction of m·g is treated as loss of contact
_SINGULAR_LOAD_FRACTION = 1e-9


def cylinder_inertia(mass: float, radius: float, height: float) -> float:
    """
    Moment of inertia of a uniform solid cylinder about a transverse axis
    through the center of its base: m·(h²/3 + r²/4).

    Raises:
        InvalidParameterError: If any dimension or the mass is not positive
    """
    for name, value in (("mass", mass), ("radius", radius), ("height", height)):
        if not math.isfinite(value) or value <= 0:
            raise InvalidParameterError(f"Cylinder {name} must be a positive finite number, got {value}")
    return mass * (height * height / 3.0 + radius * radius / 4.0)


def make_cylinder(mass: float, radius: float, height: float) -> ObjectParams:
    """Build ObjectParams for a uniform solid cylinder."""
    return ObjectParams(
        mass=mass,
        radius=radius,
        height=height,
        inertia=cylinder_inertia(mass, radius, height),
    )


def tipping_numerator(phi: ArrayLike, omega: ArrayLike, alpha: ArrayLike, obj: ObjectParams) -> ArrayLike:
    g = GRAVITY_CONSTANT.g
    r, h = obj.radius, obj.height
    return (
        obj.inertia_per_mass * np.abs(alpha)
        + 0.5 * h * g * np.sin(phi)
        + r * g * np.cos(phi)
        - 0.5 * r * np.square(omega) * h
    )


def tipping_denominator(theta: ArrayLike, phi: ArrayLike, obj: ObjectParams) -> ArrayLike:
    """(h/2)·cos(θ+φ) - r·sin(θ+φ)."""
    return 0.5 * obj.height * np.cos(theta + phi) - obj.radius * np.sin(theta + phi)


def expanded_denominator(theta: ArrayLike, phi: ArrayLike, obj: ObjectParams) -> ArrayLike:
    """The same denominator written as four separate products."""
    h2, r = 0.5 * obj.height, obj.radius
    return (
        h2 * np.cos(theta) * np.cos(phi)
        - h2 * np.sin(phi) * np.sin(theta)
        - r * np.sin(phi) * np.cos(theta)
        - r * np.cos(phi) * np.sin(theta)
    )


def max_translational_accel(tray: TrayState, theta: float, obj: ObjectParams) -> AccelLimit:
    """
    Largest acceleration along a line of elevation theta that keeps the
    pressure center inside the base at the given tray state.

    Returns an unconstrained AccelLimit when the denominator is at or below
    DENOMINATOR_EPS (the acceleration pushes the object into the tray and
    cannot tip it), and a zero limit flagged clamped_to_zero when the
    quotient is negative.
    """
    _validate_theta(theta)
    if not isinstance(obj, ObjectParams):
        raise InvalidParameterError("obj must be an ObjectParams instance")

    denominator = float(tipping_denominator(theta, tray.phi, obj))
    if denominator <= DENOMINATOR_EPS:
        return AccelLimit.unconstrained()

    numerator = float(tipping_numerator(tray.phi, tray.omega, tray.alpha, obj))
    quotient = numerator / denominator
    if quotient < 0:
        logger.debug(f"Negative tipping limit {quotient:.6g} at phi={tray.phi:.6g}, omega={tray.omega:.6g}")
        return AccelLimit(value=0.0, constrained=True, clamped_to_zero=True)
    return AccelLimit(value=quotient, constrained=True)


def tipping_accel_array(
    phi: np.ndarray,
    omega: np.ndarray,
    alpha: np.ndarray,
    theta: float,
    obj: ObjectParams,
    a_max: float,
) -> np.ndarray:
    """
    Vectorised max_translational_accel already clamped to [0, a_max].

    Samples where the constraint is inactive map to a_max.
    """
    phi = np.asarray(phi, dtype=float)
    denominator = tipping_denominator(theta, phi, obj)
    active = denominator > DENOMINATOR_EPS
    safe = np.where(active, denominator, 1.0)
    quotient = tipping_numerator(phi, omega, alpha, obj) / safe
    bounded = np.where(active, np.maximum(quotient, 0.0), a_max)
    return np.minimum(bounded, a_max)


def static_tipping_accel(theta: float, obj: ObjectParams, phi: float = 0.0) -> AccelLimit:
    """Tipping limit with the tray held still at tilt phi."""
    return max_translational_accel(TrayState(phi=phi), theta, obj)


def contact_forces(
    phi: ArrayLike, omega: ArrayLike, a: ArrayLike, theta: float, obj: ObjectParams
) -> Tuple[ArrayLike, ArrayLike, ArrayLike]:
    """
    Tray-frame components of F_obj and the normal component of F_r.

    Returns (f_obj_tangential, f_obj_normal, f_centrifugal_normal).
    """
    g = GRAVITY_CONSTANT.g
    m = obj.mass
    f_t = m * (-a * np.cos(theta + phi) + g * np.sin(phi))
    f_n = m * (-a * np.sin(theta + phi) - g * np.cos(phi))
    f_r = -m * np.square(omega) * 0.5 * obj.height
    return f_t, f_n, f_r


def force_balance(tray: TrayState, a: float, theta: float, obj: ObjectParams) -> ForceBalance:
    """Forces on the object for an acceleration a along the line."""
    f_t, f_n, f_r = contact_forces(tray.phi, tray.omega, a, theta, obj)
    return ForceBalance(
        f_obj=(float(f_t), float(f_n)),
        f_tray=(float(-f_t), float(-f_n)),
        f_centrifugal=(0.0, float(f_r)),
        torque=obj.inertia * abs(tray.alpha),
    )


def _cross(p: Tuple[float, float], f: Tuple[float, float]) -> float:
    return p[0] * f[1] - p[1] * f[0]


def torque_residual(
    tray: TrayState, a: float, theta: float, cop_offset: float, obj: ObjectParams
) -> float:
    """
    τ - [RO × F_obj + RC × F_tray + RC × F_r] for the pressure center at
    cop_offset. Zero when the balance holds.

    Raises:
        InvalidParameterError: If |cop_offset| exceeds the base radius
    """
    if abs(cop_offset) > obj.radius * (1 + 1e-12):
        raise InvalidParameterError(
            f"Pressure center offset {cop_offset} lies outside the base of radius {obj.radius}"
        )
    balance = force_balance(tray, a, theta, obj)
    ro = (0.0, 0.5 * obj.height)
    rc = (-cop_offset, 0.0)
    moment = (
        _cross(ro, balance.f_obj)
        + _cross(rc, balance.f_tray)
        + _cross(rc, balance.f_centrifugal)
    )
    return balance.torque - moment


def cop_offset_array(
    phi: ArrayLike, omega: ArrayLike, alpha: ArrayLike, a: ArrayLike, theta: float, obj: ObjectParams
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised required_cop_offset.

    Returns (offsets, singular) where singular flags samples whose normal
    load vanishes; their offsets are NaN.
    """
    f_t, f_n, f_r = contact_forces(phi, omega, a, theta, obj)
    # F_r enters the balance with the opposite sign of F_tray = -F_obj
    load = np.asarray(f_n - f_r, dtype=float)
    moment = obj.inertia * np.abs(alpha) + 0.5 * obj.height * f_t
    singular = np.abs(load) <= _SINGULAR_LOAD_FRACTION * obj.mass * GRAVITY_CONSTANT.g
    safe = np.where(singular, 1.0, load)
    offsets = np.where(singular, np.nan, moment / safe)
    return np.atleast_1d(offsets), np.atleast_1d(singular)


def required_cop_offset(tray: TrayState, a: float, theta: float, obj: ObjectParams) -> float:
    """
    Pressure-center offset that balances the object for acceleration a.

    The result may exceed the base radius, which means the object tips.

    Raises:
        SingularConfigurationError: If the contact force normal to the tray vanishes
    """
    offsets, singular = cop_offset_array(tray.phi, tray.omega, tray.alpha, a, theta, obj)
    if singular[0]:
        raise SingularConfigurationError(
            f"No normal contact force at phi={tray.phi}, omega={tray.omega}, a={a}, theta={theta}"
        )
    return float(offsets[0])


def _validate_theta(theta: float) -> None:
    if not math.isfinite(theta) or abs(theta) > math.pi / 2 + 1e-12:
        raise InvalidParameterError(f"Elevation theta must lie in [-pi/2, pi/2], got {theta}")
