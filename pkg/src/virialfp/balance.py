"""Per-order balance bookkeeping and the hard-sphere B3 Monte Carlo check.

Each of the eight cascade orders carries the same exact pair (3/8, 5/8)
summing to 1.  The 5/8 is checked independently: for hard spheres of
diameter sigma the triple-overlap Mayer integral reduces to

    B3 / b0^2 = (4/3) * P(|r2 - r3| < sigma),

with r2, r3 uniform in the sigma-ball around the origin and b0 half the
sphere volume of radius sigma.  The two-point distance density integrates
to P = 15/32 on [0, sigma], hence B3* = (4/3)(15/32) = 5/8.

Sampling draws radii by cube-root inversion and, exploiting isotropy, the
cosine of the angle between the two directions uniformly on [-1, 1] (the
second direction is measured in the frame whose pole is the first); the
induced distance distribution is identical to sampling two full points but
needs half the random draws.  Streams come from numpy's PCG64, so identical
(seed, samples) reproduce the estimate bit-exactly on any platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

B2_STAR = Fraction(3, 8)
B3_STAR = Fraction(5, 8)
N_ORDERS = 8
_MIN_SAMPLES = 1000
_CHUNK = 1_000_000  # part of the determinism contract: fixed RNG consumption order


@dataclass(frozen=True)
class CascadeOrder:
    """One of the eight cluster orders with its exact reduced coefficients."""

    i: int
    b2: Fraction = B2_STAR
    b3: Fraction = B3_STAR

    def __post_init__(self):
        if not 1 <= self.i <= N_ORDERS:
            raise DomainError(f"order index must be in 1..{N_ORDERS}, got {self.i}")
        if self.b2 != B2_STAR:
            raise DomainError(f"b2 is fixed at {B2_STAR} for every order, got {self.b2}")
        if self.b3 != B3_STAR:
            raise DomainError(f"b3 is fixed at {B3_STAR} for every order, got {self.b3}")


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int


def virial_sum(order: CascadeOrder) -> Fraction:
    """b2 + b3 for the given order; exactly 1."""
    return order.b2 + order.b3


def hs_b2() -> Fraction:
    """Reduced hard-sphere B2: exactly 1 (that is what the b0 scale means)."""
    return Fraction(1)


def hs_b3_mc(samples: int, seed: int) -> McEstimate:
    """Monte Carlo estimate of the reduced hard-sphere B3 (target 5/8).

    Returns the estimate, its binomial standard error, and the seed; the
    result is a pure function of (samples, seed).
    """
    if samples < _MIN_SAMPLES:
        raise DomainError(f"need at least {_MIN_SAMPLES} samples, got {samples}")
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    remaining = samples
    while remaining:
        m = min(remaining, _CHUNK)
        u = rng.random((3, m))
        a = np.cbrt(u[0])
        b = np.cbrt(u[1])
        cos_rel = 1.0 - 2.0 * u[2]
        dist_sq = a * a + b * b - 2.0 * a * b * cos_rel
        hits += int(np.count_nonzero(dist_sq < 1.0))
        remaining -= m
    p_hat = hits / samples
    # Half-count floor keeps the reported error positive even at degenerate p.
    variance = max(p_hat * (1.0 - p_hat), 0.25 / samples)
    std_error = (4.0 / 3.0) * math.sqrt(variance / samples)
    return McEstimate((4.0 / 3.0) * p_hat, std_error, samples, seed)
