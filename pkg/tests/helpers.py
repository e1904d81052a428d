"""Independent oracles shared by the test modules.

Everything here recomputes expected values by a route different from the
implementation under test: bisection on the front-membership predicate,
chord-length quadrature for circle/rectangle overlap, and the textbook
two-circle lens formula.
"""

import math
import warnings

from scipy import integrate

from firewatch.geometry import ellipse_axis_rates


def front_member(rate, hb, lb, heading, ign, tgt, t):
    """Membership of ``tgt`` in the elliptical burned set at time ``t``."""
    if t <= 0:
        return tgt.x == ign.x and tgt.y == ign.y
    a, b, c = ellipse_axis_rates(rate, hb, lb)
    dx, dy = tgt.x - ign.x, tgt.y - ign.y
    ch, sh = math.cos(heading), math.sin(heading)
    x = dx * ch + dy * sh
    y = -dx * sh + dy * ch
    return ((x - c * t) / (a * t)) ** 2 + (y / (b * t)) ** 2 <= 1.0


def bisect_reach_time(rate, hb, lb, heading, ign, tgt):
    """Reach time by doubling + bisection on the membership predicate."""
    d = math.hypot(tgt.x - ign.x, tgt.y - ign.y)
    if d == 0:
        return 0.0
    hi = d / rate  # the head is the fastest direction, so this lower-bounds t
    for _ in range(200):
        if front_member(rate, hb, lb, heading, ign, tgt, hi):
            break
        hi *= 2.0
    lo = hi / 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if front_member(rate, hb, lb, heading, ign, tgt, mid):
            hi = mid
        else:
            lo = mid
    return hi


def quad_disk_rect(cx, cy, r, width, height):
    """Disk/rectangle overlap via chord-length quadrature."""

    def chord(x):
        dy = r * r - (x - cx) ** 2
        if dy <= 0:
            return 0.0
        dy = math.sqrt(dy)
        return max(0.0, min(cy + dy, height) - max(cy - dy, 0.0))

    lo, hi = max(0.0, cx - r), min(width, cx + r)
    if lo >= hi:
        return 0.0
    with warnings.catch_warnings():
        # sqrt endpoints keep quad from hitting 1e-12; its ~1e-5 result is
        # still far tighter than the tolerances asserted against it
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(
            chord,
            lo,
            hi,
            limit=400,
            epsabs=1e-12,
            epsrel=1e-12,
            points=[p for p in (cx - r, cx, cx + r) if lo < p < hi],
        )
    return val


def lens_union_area(r, d):
    """Union area of two radius-r disks with centers ``d`` apart (d < 2r)."""
    lens = 2 * r * r * math.acos(d / (2 * r)) - 0.5 * d * math.sqrt(4 * r * r - d * d)
    return 2 * math.pi * r * r - lens
