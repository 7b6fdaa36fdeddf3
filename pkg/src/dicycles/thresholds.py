"""Closed-form threshold algebra for long-cycle resilience.

Central objects: the piecewise function w(alpha) = 1 - (1-alpha)*floor(1/(1-alpha)),
the edge-count bound guaranteeing an undirected cycle of length >= ell, the
asymptotic edge-fraction threshold, and the directed resilience curve
2*gamma = 1 - (1 - w(alpha)) * (alpha + w(alpha)) together with its inversion.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational

from .errors import DomainError

log = logging.getLogger(__name__)

# Floor guard for float inputs near piece boundaries of w(alpha); all floor
# computations go through exact rationals, so this only matters for values a
# caller *intends* as a boundary but passes as an inexact float.
BOUNDARY_GUARD = 1e-12


@dataclass(frozen=True)
class ResilienceCurvePoint:
    """One point linking the deleted-fraction parameter gamma to the
    predicted surviving cycle fraction 1 - alpha."""

    alpha: float
    w_alpha: float
    gamma: float
    predicted_fraction: float


def _as_fraction(alpha) -> Fraction:
    if isinstance(alpha, Rational):
        return Fraction(alpha)
    return Fraction(alpha)  # exact for floats: Fraction(0.5) == 1/2


def w(alpha):
    """w(alpha) = 1 - (1-alpha) * floor(1/(1-alpha)), for 0 <= alpha < 1.

    Evaluated on exact rationals (floats are converted exactly), so the floor
    never misclassifies a representable boundary value. Returns a Fraction
    for Rational input and a float otherwise.
    """
    a = _as_fraction(alpha)
    if not (0 <= a < 1):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    m = math.floor(1 / (1 - a))
    val = 1 - (1 - a) * m
    return val if isinstance(alpha, Rational) and not isinstance(alpha, int) else float(val)


def woodall_bound(n: int, ell: int) -> int:
    """Minimum edge count forcing an undirected cycle of length >= ell in a
    graph on n vertices: q * C(ell-1, 2) + C(r+1, 2) + 1 with
    q = (n-1) // (ell-2) and r = (n-1) % (ell-2).

    The floor form of q is the one consistent with the extremal construction
    (q disjoint cliques of size ell-2, one clique of size r, one universal
    vertex); the ceiling variant is logged when the two differ.
    """
    if not (3 <= ell <= n):
        raise DomainError(f"need 3 <= ell <= n, got ell={ell}, n={n}")
    q = (n - 1) // (ell - 2)
    r = (n - 1) % (ell - 2)
    value = q * comb(ell - 1, 2) + comb(r + 1, 2) + 1
    ceil_variant = -(-(n - 1) // (ell - 2)) * comb(ell - 1, 2) + comb(r + 1, 2) + 1
    if ceil_variant != value:
        log.debug(
            "woodall_bound(n=%d, ell=%d): floor form %d, ceiling form %d",
            n, ell, value, ceil_variant,
        )
    return value


def asymptotic_threshold(alpha: float) -> float:
    """Edge-fraction threshold 1 - (1 - w(alpha)) * (alpha + w(alpha))."""
    wa = float(w(alpha))
    a = float(alpha)
    return 1 - (1 - wa) * (a + wa)


def gamma_for_alpha(alpha: float) -> float:
    """The gamma on the resilience curve at a given alpha."""
    return asymptotic_threshold(alpha) / 2


def solve_alpha(gamma: float, tol: float = 1e-12) -> ResilienceCurvePoint:
    """Minimal alpha >= 0 with 2*gamma = 1 - (1 - w(alpha)) * (alpha + w(alpha)).

    On each piece where m = floor(1/(1-alpha)) is constant, substituting
    u = 1 - alpha turns the curve into the quadratic
    m(m+1) u^2 - 2m u + (1 - 2*gamma) = 0, solved in closed form. Pieces are
    scanned in increasing alpha (m = 1, 2, ...), so the first in-range root
    is the minimal solution.
    """
    if not (0 < gamma < 0.5):
        raise DomainError(f"gamma must lie in (0, 1/2), got {gamma}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    c = 1 - 2 * gamma
    m = 1
    while m <= 10**6:
        disc = m * m - m * (m + 1) * c
        if disc >= -tol:
            sq = math.sqrt(max(disc, 0.0))
            lo, hi = 1 / (m + 1), 1 / m
            # larger root first: larger u means smaller alpha
            for u in ((m + sq) / (m * (m + 1)), (m - sq) / (m * (m + 1))):
                if lo - tol <= u <= hi + tol:
                    u = min(max(u, lo), hi)
                    alpha = 1 - u
                    # re-evaluate w exactly: a root on a piece boundary
                    # belongs to the higher piece (e.g. w(1/2) = 0)
                    wa = float(w(alpha))
                    return ResilienceCurvePoint(alpha, wa, gamma, 1 - alpha)
        m += 1
    raise DomainError(f"no solution found for gamma={gamma}")


def predicted_cycle_length(n: int, gamma: float, tol: float = 1e-12) -> int:
    """floor((1 - alpha) * n) for the minimal alpha on the curve at gamma."""
    point = solve_alpha(gamma, tol)
    return math.floor(point.predicted_fraction * n + 1e-9)
