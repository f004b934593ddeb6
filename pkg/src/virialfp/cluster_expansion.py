"""Exact-rational fugacity series and the cluster-to-virial inversion.

Pressure and density are formal power series in the dimensionless activity
z (all physical prefactors are absorbed into z):

    P-series:  sum_l  b_l z^l          (coefficient of z^l is b_l)
    n-series:  sum_l  l b_l z^l

Matching P(z) = sum_l' B_l' n(z)^l' order by order is a triangular solve
(B_l' first appears at order l'), which recovers the virial coefficients;
in particular B2 = -b2 when b1 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, NormalizationError


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise DomainError(
            f"exact rational required, got float {value!r}; pass Fraction or int"
        )
    if not isinstance(value, Rational):
        raise DomainError(f"exact rational required, got {type(value).__name__}")
    return Fraction(value)


@dataclass(frozen=True)
class FormalSeries:
    """Dense truncated power series; coefficients[k] multiplies z^k."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(_as_fraction(c) for c in self.coefficients)
        )
        if not self.coefficients:
            raise DomainError("a series needs at least its constant coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if not 0 <= power <= self.truncation:
            raise IndexError(
                f"coefficient of z^{power} not tracked (truncation {self.truncation})"
            )
        return self.coefficients[power]

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        trunc = min(self.truncation, other.truncation)
        return FormalSeries(
            tuple(self.coefficients[k] + other.coefficients[k] for k in range(trunc + 1))
        )

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        trunc = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (trunc + 1)
        for i, ci in enumerate(self.coefficients[: trunc + 1]):
            if ci == 0:
                continue
            for j in range(trunc + 1 - i):
                cj = other.coefficients[j]
                if cj:
                    out[i + j] += ci * cj
        return FormalSeries(tuple(out))

    def scale(self, factor) -> "FormalSeries":
        factor = _as_fraction(factor)
        return FormalSeries(tuple(factor * c for c in self.coefficients))

    def scale_argument(self, factor) -> "FormalSeries":
        """z -> factor * z."""
        factor = _as_fraction(factor)
        return FormalSeries(
            tuple(c * factor**k for k, c in enumerate(self.coefficients))
        )

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """self(inner(z)) for inner with zero constant term (Horner form)."""
        if inner.coefficient(0) != 0:
            raise DomainError("composition requires a zero constant term")
        trunc = min(self.truncation, inner.truncation)
        inner = FormalSeries(inner.coefficients[: trunc + 1])
        acc = FormalSeries((self.coefficients[trunc],) + (Fraction(0),) * trunc)
        for k in range(trunc - 1, -1, -1):
            acc = acc * inner
            acc = FormalSeries(
                (acc.coefficients[0] + self.coefficients[k],) + acc.coefficients[1:]
            )
        return acc


@dataclass(frozen=True)
class ClusterIntegralVector:
    """Thermodynamic-limit cluster integrals (b_1, ..., b_L), b_1 = 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_as_fraction(v) for v in self.values))
        if self.order < 2:
            raise DomainError(f"need at least order 2, got {self.order}")
        if self.values[0] != 1:
            raise NormalizationError(
                f"leading cluster integral must be 1, got {self.values[0]}"
            )

    @property
    def order(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class VirialVector:
    """Virial coefficients (B_1, ..., B_L) with the ideal-gas head B_1 = 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_as_fraction(v) for v in self.values))
        if self.values[0] != 1:
            raise DomainError(f"B_1 must be 1, got {self.values[0]}")


def _coerce_clusters(b) -> ClusterIntegralVector:
    if isinstance(b, ClusterIntegralVector):
        return b
    return ClusterIntegralVector(tuple(b))


def pressure_series(b) -> FormalSeries:
    """P/kT as a series in z: coefficient of z^l is b_l."""
    b = _coerce_clusters(b)
    return FormalSeries((Fraction(0),) + b.values)


def density_series(b) -> FormalSeries:
    """<N>/V as a series in z: coefficient of z^l is l * b_l."""
    b = _coerce_clusters(b)
    return FormalSeries(
        (Fraction(0),) + tuple(l * v for l, v in enumerate(b.values, start=1))
    )


def _virial_from_series(p: FormalSeries, n: FormalSeries) -> list[Fraction]:
    """Triangular solve of p(z) = sum_l B_l n(z)^l for B_1..B_L.

    Requires n to have zero constant term and invertible linear term; does
    not require any normalization, so it also certifies that rescaling
    z -> c z leaves the recovered coefficients unchanged.
    """
    trunc = min(p.truncation, n.truncation)
    if n.coefficient(0) != 0:
        raise DomainError("density series must have zero constant term")
    if n.coefficient(1) == 0:
        raise DomainError("density series must have an invertible linear term")
    powers: list[FormalSeries | None] = [None, FormalSeries(n.coefficients[: trunc + 1])]
    for _ in range(2, trunc + 1):
        powers.append(powers[-1] * powers[1])
    virials = [Fraction(0)] * (trunc + 1)
    for order in range(1, trunc + 1):
        acc = p.coefficient(order)
        for l in range(1, order):
            acc -= virials[l] * powers[l].coefficient(order)
        virials[order] = acc / powers[order].coefficient(order)
    return virials[1:]


def virial_from_clusters(b) -> VirialVector:
    """Recover (B_1, ..., B_L) from cluster integrals; B_2 = -b_2 exactly."""
    b = _coerce_clusters(b)
    return VirialVector(tuple(_virial_from_series(pressure_series(b), density_series(b))))
