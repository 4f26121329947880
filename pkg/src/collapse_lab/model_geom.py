"""Trigonometry of the simply-connected model surface of constant curvature.

All angles are computed from sidelengths alone via the law of cosines of the
model surface of curvature ``kappa`` (spherical for kappa > 0, Euclidean for
kappa = 0, hyperbolic for kappa < 0).  A triangle that cannot be realized in
the model yields ``None`` rather than raising, so callers can decide whether
to apply the zero-angle convention for degenerate set configurations.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "KAPPA_EUCLIDEAN_CUTOFF",
    "CLAMP_SLACK",
    "triangle_valid",
    "comparison_angle",
    "comparison_side",
    "tilde_angle",
    "tilde_angle_sets",
    "comparison_angle_many",
]

# |kappa| below this is routed to the Euclidean branch: sin(sqrt(kappa)*x)
# cancels catastrophically for tiny kappa.
KAPPA_EUCLIDEAN_CUTOFF = 1e-12

# arccos arguments within this distance outside [-1, 1] are clamped;
# anything further out marks a genuinely unrealizable triangle.
CLAMP_SLACK = 1e-9


def _clamped_acos(t: float) -> Optional[float]:
    if t > 1.0:
        if t - 1.0 <= CLAMP_SLACK:
            return 0.0
        return None
    if t < -1.0:
        if -1.0 - t <= CLAMP_SLACK:
            return math.pi
        return None
    return math.acos(t)


def triangle_valid(kappa: float, a: float, b: float, c: float) -> bool:
    """Whether a triangle with sidelengths (a, b, c) exists in the kappa-model.

    Requires nonnegative sides and the triangle inequality; for kappa > 0
    additionally each side at most pi/sqrt(kappa) and perimeter at most
    2*pi/sqrt(kappa).  Total function: never raises.
    """
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
        return False
    if a < 0 or b < 0 or c < 0:
        return False
    if a + b < c or b + c < a or c + a < b:
        return False
    if kappa > KAPPA_EUCLIDEAN_CUTOFF:
        bound = math.pi / math.sqrt(kappa)
        if a > bound or b > bound or c > bound:
            return False
        if a + b + c > 2.0 * bound:
            return False
    return True


def comparison_angle(kappa: float, a: float, b: float, c: float) -> Optional[float]:
    """Angle at the vertex between sides a and b, opposite side c.

    Returns a value in [0, pi], or ``None`` when the triangle is not
    realizable in the model or when a or b vanishes (the vertex is not
    separated from an endpoint).
    """
    if not triangle_valid(kappa, a, b, c):
        return None
    if a == 0.0 or b == 0.0:
        return None
    if abs(kappa) <= KAPPA_EUCLIDEAN_CUTOFF:
        t = (a * a + b * b - c * c) / (2.0 * a * b)
        return _clamped_acos(t)
    s = math.sqrt(abs(kappa))
    if kappa > 0:
        sa, sb = math.sin(s * a), math.sin(s * b)
        if sa == 0.0 or sb == 0.0:
            # side of exactly pi/sqrt(kappa): vertex angle is ill-defined
            return None
        t = (math.cos(s * c) - math.cos(s * a) * math.cos(s * b)) / (sa * sb)
    else:
        sa, sb = math.sinh(s * a), math.sinh(s * b)
        t = (math.cosh(s * a) * math.cosh(s * b) - math.cosh(s * c)) / (sa * sb)
    return _clamped_acos(t)


def comparison_side(kappa: float, a: float, b: float, gamma: float) -> float:
    """Side opposite the angle gamma enclosed by sides a and b (forward law).

    Inverse of :func:`comparison_angle` in the third side: the round trip
    ``comparison_angle(kappa, a, b, comparison_side(kappa, a, b, gamma))``
    recovers gamma on valid inputs.

    Raises ``ValueError`` outside the domain (negative sides, gamma outside
    [0, pi], or sides exceeding pi/sqrt(kappa) when kappa > 0).
    """
    if a < 0 or b < 0:
        raise ValueError(f"sides must be nonnegative, got a={a}, b={b}")
    if not 0.0 <= gamma <= math.pi:
        raise ValueError(f"gamma must lie in [0, pi], got {gamma}")
    if abs(kappa) <= KAPPA_EUCLIDEAN_CUTOFF:
        c2 = a * a + b * b - 2.0 * a * b * math.cos(gamma)
        return math.sqrt(max(c2, 0.0))
    s = math.sqrt(abs(kappa))
    if kappa > 0:
        bound = math.pi / s
        if a > bound or b > bound:
            raise ValueError(f"sides must be at most pi/sqrt(kappa)={bound}, got a={a}, b={b}")
        t = math.cos(s * a) * math.cos(s * b) + math.sin(s * a) * math.sin(s * b) * math.cos(gamma)
        t = min(1.0, max(-1.0, t))
        return math.acos(t) / s
    t = math.cosh(s * a) * math.cosh(s * b) - math.sinh(s * a) * math.sinh(s * b) * math.cos(gamma)
    return math.acosh(max(t, 1.0)) / s


def tilde_angle(space, kappa: float, p: int, q: int, r: int) -> Optional[float]:
    """Comparison angle at p of the triple (p, q, r) read off a distance table."""
    d = space.dist
    return comparison_angle(kappa, float(d[p, q]), float(d[p, r]), float(d[q, r]))


def tilde_angle_sets(space, kappa: float, p: int, a_set: Iterable[int], b_set: Iterable[int]) -> float:
    """Comparison angle at p between two point sets, with the zero convention.

    Sidelengths are dist(p, A), dist(p, B) and dist(A, B) (set distances as
    minima over members).  A degenerate or unrealizable triangle gives 0.
    """
    a_idx = np.asarray(list(a_set), dtype=np.intp)
    b_idx = np.asarray(list(b_set), dtype=np.intp)
    if a_idx.size == 0 or b_idx.size == 0:
        raise ValueError("point sets must be nonempty")
    d = space.dist
    da = float(d[p, a_idx].min())
    db = float(d[p, b_idx].min())
    dab = float(d[np.ix_(a_idx, b_idx)].min())
    angle = comparison_angle(kappa, da, db, dab)
    return 0.0 if angle is None else angle


def comparison_angle_many(kappa: float, a, b, c) -> np.ndarray:
    """Vectorized :func:`comparison_angle`; undefined entries become NaN.

    Inputs broadcast against each other.  Used by the strainer search, which
    scans all candidate anchor pairs at a basepoint at once.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    a, b, c = np.broadcast_arrays(a, b, c)
    out = np.full(a.shape, np.nan)
    valid = (a >= 0) & (b >= 0) & (c >= 0)
    valid &= (a + b >= c) & (b + c >= a) & (c + a >= b)
    valid &= (a > 0) & (b > 0)
    if kappa > KAPPA_EUCLIDEAN_CUTOFF:
        bound = math.pi / math.sqrt(kappa)
        valid &= (a <= bound) & (b <= bound) & (c <= bound)
        valid &= a + b + c <= 2.0 * bound
    if abs(kappa) <= KAPPA_EUCLIDEAN_CUTOFF:
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(valid, (a * a + b * b - c * c) / (2.0 * a * b), 0.0)
    else:
        s = math.sqrt(abs(kappa))
        with np.errstate(divide="ignore", invalid="ignore"):
            if kappa > 0:
                den = np.sin(s * a) * np.sin(s * b)
                valid &= den != 0.0
                t = np.where(valid, (np.cos(s * c) - np.cos(s * a) * np.cos(s * b)) / den, 0.0)
            else:
                den = np.sinh(s * a) * np.sinh(s * b)
                t = np.where(valid, (np.cosh(s * a) * np.cosh(s * b) - np.cosh(s * c)) / den, 0.0)
    over = valid & (t > 1.0)
    under = valid & (t < -1.0)
    valid &= (t <= 1.0 + CLAMP_SLACK) & (t >= -1.0 - CLAMP_SLACK)
    t = np.where(over, 1.0, np.where(under, -1.0, t))
    out[valid] = np.arccos(np.clip(t[valid], -1.0, 1.0))
    return out
