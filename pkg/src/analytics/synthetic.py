"""
Synthetic trajectories for evaluation and benchmarks: smooth hand-tracking
style motion, a square traced by hand, and a city GPS track
"""
import logging

import numpy as np

from ..core.trajectory import Trajectory, validate_trajectory

logger = logging.getLogger(__name__)

HAND_TRACKING_RATE_HZ = 30.0


def smooth_hand_trajectory(n: int = 250, seed: int = 0, noise: float = 1e-5,
                           dimension: int = 3, cycles: float = None) -> Trajectory:
    """
    Smooth motion sampled uniformly, like a tracked hand

    Each coordinate is the sum of two sinusoids with random amplitude and phase
    plus a slow drift, so the curve is C-infinity; Gaussian noise is added on top.

    Args:
        n: number of samples
        seed: random generator seed
        noise: standard deviation of the position noise (meters)
        dimension: 2 or 3
        cycles: oscillations of the slower component over the whole run;
            random in [1, 2] when omitted

    Returns:
        Trajectory in meters, sampled at 30 Hz
    """
    rng = np.random.default_rng(seed)
    t = np.arange(n) / HAND_TRACKING_RATE_HZ
    phase = np.linspace(0.0, 1.0, n)

    coords = []
    for _ in range(dimension):
        base = cycles if cycles is not None else rng.uniform(1.0, 2.0)
        slow = rng.uniform(0.08, 0.2) * np.sin(2 * np.pi * base * phase + rng.uniform(0, 2 * np.pi))
        fast = rng.uniform(0.002, 0.006) * np.sin(2 * np.pi * 2.1 * base * phase + rng.uniform(0, 2 * np.pi))
        drift = rng.uniform(-0.05, 0.05) * phase
        coords.append(slow + fast + drift)
    points = np.column_stack(coords) + rng.normal(0.0, noise, size=(n, dimension))
    return validate_trajectory(points, t)


def square_trajectory(n: int = 207, seed: int = 0, side: float = 0.3,
                      noise: float = 1e-3) -> Trajectory:
    """
    A square traced at constant speed with hand jitter, 2D

    Returns:
        Trajectory starting and ending at a corner, sampled at 30 Hz
    """
    rng = np.random.default_rng(seed)
    corners = np.array([[0.0, 0.0], [side, 0.0], [side, side], [0.0, side], [0.0, 0.0]])
    arc = np.linspace(0.0, 4.0, n)
    edge = np.minimum(arc.astype(int), 3)
    frac = (arc - edge)[:, None]
    points = corners[edge] + frac * (corners[edge + 1] - corners[edge])
    points = points + rng.normal(0.0, noise, size=points.shape)
    return validate_trajectory(points, np.arange(n) / HAND_TRACKING_RATE_HZ)


def gps_like_track(n: int = 3189, seed: int = 0, speed: float = 8.0,
                   interval: float = 2.0, noise: float = 3.0) -> Trajectory:
    """
    A vehicle track through a street grid: straight runs, right-angle turns,
    slowly varying speed and GPS position noise

    Args:
        n: number of fixes
        speed: mean speed in m/s
        interval: seconds between fixes
        noise: standard deviation of the fix error (meters)

    Returns:
        2D Trajectory in local meters
    """
    rng = np.random.default_rng(seed)
    heading = rng.uniform(0, 2 * np.pi)
    position = np.zeros(2)
    points = np.empty((n, 2))
    run_left = rng.integers(15, 60)
    current_speed = speed
    for i in range(n):
        points[i] = position
        run_left -= 1
        if run_left <= 0:
            heading += rng.choice([-np.pi / 2, np.pi / 2]) + rng.normal(0, 0.05)
            run_left = rng.integers(15, 60)
        heading += rng.normal(0, 0.01)
        current_speed = float(np.clip(current_speed + rng.normal(0, 0.3), 0.5 * speed, 1.5 * speed))
        position = position + current_speed * interval * np.array([np.cos(heading), np.sin(heading)])
    points = points + rng.normal(0.0, noise, size=points.shape)
    return validate_trajectory(points, np.arange(n) * interval)
