"""Exact-rational analysis of the fugacity recursion K' = K^2/2 + K^3/3 + K^4/6.

The polynomial is stored together with its track-term decomposition (the
recursion is stated on K'/2, whose terms are K^2/4 + K^3/6 + K^4/12).  Every
operation runs in Fraction arithmetic; nothing here touches floating point.

Fixed-point structure: K (f(K) - K) factors as

    K * (K - 1) * (c4 K^2 + (c3 + c4) K + 1) / 1

where the quadratic factor has negative discriminant for the canonical
coefficients, so the finite fixed points are exactly {0, 1}; the point at
infinity attracts everything above 1 (quartic growth) and is reported as
divergent.  The repelling finite point K = 1 is the critical fugacity; the
reciprocal of the multiplier there is the reduced two-body coefficient 3/8.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DivergenceError, DomainError, PrecisionOverflowError

DEFAULT_COEFFICIENTS = {2: Fraction(1, 2), 3: Fraction(1, 3), 4: Fraction(1, 6)}
DEFAULT_TRACK_TERMS = ((2, Fraction(1, 4)), (3, Fraction(1, 6)), (4, Fraction(1, 12)))


class Stability(enum.Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    NEUTRAL = "neutral"
    DIVERGENT = "divergent"


@dataclass(frozen=True)
class MapFixedPoint:
    """A fixed point; location None encodes the point at infinity."""

    location: Fraction | None
    multiplier: Fraction | None
    stability: Stability

    @property
    def is_infinite(self) -> bool:
        return self.location is None


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError(
            f"exact rational required, got float {value!r}; pass Fraction or int"
        )
    if not isinstance(value, Rational):
        raise DomainError(f"exact rational required, got {type(value).__name__}")
    return Fraction(value)


class ScalingMap:
    """The degree-4 fugacity map with exact coefficients and track terms."""

    def __init__(self, coefficients=None, track_terms=None):
        coefficients = DEFAULT_COEFFICIENTS if coefficients is None else coefficients
        track_terms = DEFAULT_TRACK_TERMS if track_terms is None else track_terms
        self.coefficients = {int(d): _as_fraction(c) for d, c in coefficients.items()}
        self.track_terms = tuple((int(d), _as_fraction(w)) for d, w in track_terms)
        if sum(self.coefficients.values()) != 1:
            raise DomainError("coefficients must sum to 1 so that K = 1 is a fixed point")
        weight_by_degree: dict[int, Fraction] = {}
        for degree, weight in self.track_terms:
            weight_by_degree[degree] = weight_by_degree.get(degree, Fraction(0)) + weight
        if {d: 2 * w for d, w in weight_by_degree.items()} != self.coefficients:
            raise DomainError(
                "track weights are stated on the half-map: doubling their "
                "degree sums must reproduce the coefficients"
            )

    @property
    def degree(self) -> int:
        return max(self.coefficients)

    @property
    def chemical_potential(self) -> Fraction:
        """log of the critical fugacity: the repelling point sits at K = 1."""
        critical = self._critical_point()
        if critical != 1:
            raise DomainError("chemical potential readout requires K_c = 1")
        return Fraction(0)

    def apply(self, k) -> Fraction:
        """One map step, exactly."""
        k = _as_fraction(k)
        if k < 0:
            raise DomainError(f"fugacity must be non-negative, got {k}")
        return sum((c * k**d for d, c in self.coefficients.items()), Fraction(0))

    def derivative(self, k) -> Fraction:
        """f'(k), exactly."""
        k = _as_fraction(k)
        if k < 0:
            raise DomainError(f"fugacity must be non-negative, got {k}")
        return sum((d * c * k ** (d - 1) for d, c in self.coefficients.items()), Fraction(0))

    def fixed_points(self) -> list[MapFixedPoint]:
        """All fixed points: the finite rationals plus the divergent infinity."""
        c2 = self.coefficients.get(2, Fraction(0))
        c3 = self.coefficients.get(3, Fraction(0))
        c4 = self.coefficients.get(4, Fraction(0))
        locations = [Fraction(0), Fraction(1)]
        # Residual quadratic after peeling off K and (K - 1).
        disc = (c3 + c4) ** 2 - 4 * c4
        if disc >= 0:
            raise NotImplementedError(
                "non-canonical coefficients with extra real fixed points"
            )
        points = []
        for loc in locations:
            m = self.derivative(loc)
            if abs(m) < 1:
                stability = Stability.ATTRACTING
            elif abs(m) > 1:
                stability = Stability.REPELLING
            else:
                stability = Stability.NEUTRAL
            points.append(MapFixedPoint(loc, m, stability))
        points.append(MapFixedPoint(None, None, Stability.DIVERGENT))
        return points

    def _critical_point(self) -> Fraction:
        repelling = [
            p for p in self.fixed_points() if p.stability is Stability.REPELLING
        ]
        if len(repelling) != 1:
            raise DomainError("expected exactly one repelling finite fixed point")
        return repelling[0].location

    def b2_star(self) -> Fraction:
        """Reduced two-body coefficient at the critical point: 1/f'(K_c).

        The multiplier measures dK'/dK; the coefficient is the inverse
        sensitivity dK/dK', evaluated at the repelling point K_c = 1.
        """
        return Fraction(1) / self.derivative(self._critical_point())

    def iterate(self, k0, n: int, max_value=Fraction(10**9), max_bits: int = 1_000_000) -> list[Fraction]:
        """Orbit [k0, f(k0), ..., f^n(k0)] in exact arithmetic.

        Raises DivergenceError when a value exceeds max_value (orbits above
        K = 1 escape to infinity with quartic growth) and
        PrecisionOverflowError when the next step would push the exact
        representation past max_bits; both carry the step index and the
        partial orbit.
        """
        k = _as_fraction(k0)
        if k < 0:
            raise DomainError(f"fugacity must be non-negative, got {k}")
        if n < 1:
            raise DomainError(f"need n >= 1 iterations, got {n}")
        max_value = _as_fraction(max_value)
        orbit = [k]
        for step in range(1, n + 1):
            bits = k.numerator.bit_length() + k.denominator.bit_length()
            if self.degree * bits + 64 > max_bits:
                raise PrecisionOverflowError(
                    f"exact orbit representation would exceed {max_bits} bits at step {step}",
                    step=step,
                    orbit=orbit,
                )
            k = self.apply(k)
            orbit.append(k)
            if k > max_value:
                raise DivergenceError(
                    f"orbit exceeded {max_value} at step {step}", step=step, orbit=orbit
                )
        return orbit
