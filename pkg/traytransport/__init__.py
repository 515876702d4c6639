"""
TrayTransport: time-optimized straight-line transport of an unstable cylinder
on a robot-held tray.

The package plans jerk-limited trajectories that tilt the tray to raise the
tipping-limited acceleration, and audits every plan against an independent
torque-balance oracle and the robot's motion limits.
"""

__version__ = "0.1.0"
