"""Radar-method measurement of an event from one position.

A record holds the medium times of emission, reflection and return; a
consistent record obeys the geometric-mean law t2 = sqrt(t1*t3) and maps to a
rapidity through exp(omega/c) = sqrt(t3/t1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .clocks import EinsteinMeasures


@dataclass(frozen=True)
class RadarRecord:
    """Emission, reflection and return times, all in medium time (s)."""

    t1: float
    t2: float
    t3: float

    def __post_init__(self):
        if self.t1 <= 0:
            raise ValueError("invalid medium time: t1 must be positive")
        if not (self.t1 <= self.t2 <= self.t3):
            raise ValueError("radar record requires t1 <= t2 <= t3")


@dataclass(frozen=True)
class Rapidity:
    """Unsigned medium scalar velocity (additive for collinear motion)."""

    omega: float  # m/s
    c: float  # m/s

    def __post_init__(self):
        if self.omega < 0:
            raise ValueError("medium velocity must be non-negative")
        if self.c <= 0:
            raise ValueError("c must be positive")


def einstein_measures(rec: RadarRecord, c: float) -> EinsteinMeasures:
    """t_E = (t3+t1)/2, r_E = c(t3−t1)/2, v_E = r_E/t_E, plus the splits
    t3 = (1+v_E/c)t_E, t1 = (1−v_E/c)t_E and t2_pred = sqrt(1−v_E²/c²)·t_E.

    When r_E = 0 the result is flagged degenerate: t_E = t1 = t3 is then a
    coincidence time, not an Einstein measure.
    """
    t_E = 0.5 * (rec.t3 + rec.t1)
    r_E = 0.5 * c * (rec.t3 - rec.t1)
    degenerate = r_E == 0.0
    v_E = 0.0 if degenerate else r_E / t_E
    K = v_E / c
    return EinsteinMeasures(
        t_E=t_E,
        r_E=r_E,
        v_E=v_E,
        K=K,
        t1_split=(1.0 - K) * t_E,
        t3_split=(1.0 + K) * t_E,
        t2_pred=math.sqrt(1.0 - K * K) * t_E,
        degenerate=degenerate,
    )


def check_geometric_mean(rec: RadarRecord, tol: float = 1e-12) -> bool:
    """True iff |t2 − sqrt(t1·t3)| ≤ tol·t2."""
    return abs(rec.t2 - math.sqrt(rec.t1 * rec.t3)) <= tol * rec.t2


def rapidity_from_vE(v_E: float, c: float) -> Rapidity:
    """omega = c·artanh(|v_E|/c)."""
    if abs(v_E) >= c:
        raise ValueError("superluminal Einstein velocity")
    return Rapidity(omega=c * math.atanh(abs(v_E) / c), c=c)


def record_from_rapidity(omega: float, c: float, t1: float) -> RadarRecord:
    """Record (t1, t1·e^{omega/c}, t1·e^{2omega/c}); satisfies the
    geometric-mean law by construction."""
    if t1 <= 0:
        raise ValueError("invalid medium time: t1 must be positive")
    if omega < 0:
        raise ValueError("medium velocity must be non-negative")
    q = math.exp(omega / c)
    return RadarRecord(t1=t1, t2=t1 * q, t3=t1 * q * q)
