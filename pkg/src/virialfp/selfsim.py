"""Self-similarity condition dB2/dT = B2/T and its fixed point.

The residual r(T) = dB2/dT - B2/T vanishes exactly where B2/T is extremal
(d(B2/T)/dT = r/T), which pins the temperature around T* ~ 20/3 where the
reduced curve is self-similar.  The Boyle root B2 = 0 is located with the
same bracketed refinement as a sanity anchor for the curve.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lj_virial
from .errors import BracketError, ConvergenceError, DomainError

DEFAULT_SELFSIM_BRACKET = (4.0, 12.0)
DEFAULT_BOYLE_BRACKET = (2.0, 5.0)
_QUAD_TOL = 1e-12


@dataclass(frozen=True)
class FixedPointResult:
    t_star: float
    b2_at_t: float
    residual: float
    bracket: tuple[float, float]
    iterations: int
    converged: bool


def residual(t_star: float, quad_tol: float = _QUAD_TOL) -> float:
    """r(T*) = dB2/dT* - B2/T*, with B2 from the quadrature route."""
    return lj_virial.db2_dt(t_star) - lj_virial.b2_integral(t_star, quad_tol).value / t_star


def _bracketed_root(f, lo, hi, f_tol, x_tol, max_iter=200):
    """Illinois-accelerated regula falsi with bisection fallback.

    Stops at |f| <= f_tol or bracket width <= x_tol * |x|.  Returns
    (root, f(root), iterations).
    """
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo, f_lo, 0
    if f_hi == 0.0:
        return hi, f_hi, 0
    if f_lo * f_hi > 0.0:
        raise BracketError(
            f"no sign change over [{lo}, {hi}]: f = {f_lo:.6g} and {f_hi:.6g}"
        )
    side = 0
    x, fx = lo, f_lo
    for iteration in range(1, max_iter + 1):
        denom = f_hi - f_lo
        if denom != 0.0:
            x = (lo * f_hi - hi * f_lo) / denom
        if denom == 0.0 or not (lo < x < hi):
            x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) <= f_tol or (hi - lo) <= x_tol * abs(x):
            return x, fx, iteration
        if f_lo * fx < 0.0:
            hi, f_hi = x, fx
            if side == -1:
                f_lo *= 0.5
            side = -1
        else:
            lo, f_lo = x, fx
            if side == 1:
                f_hi *= 0.5
            side = 1
    raise ConvergenceError(
        f"root refinement exceeded {max_iter} iterations; best bracket [{lo}, {hi}]",
        best_estimate=x,
        est_error=abs(fx),
    )


def _validate_bracket(bracket, tol):
    lo, hi = bracket
    if not (0.0 < lo < hi):
        raise DomainError(f"bracket must satisfy 0 < low < high, got {bracket!r}")
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    return lo, hi


def find_selfsim_fixpoint(
    bracket: tuple[float, float] = DEFAULT_SELFSIM_BRACKET, tol: float = 1e-10
) -> FixedPointResult:
    """Locate the root of the self-similarity residual inside the bracket."""
    lo, hi = _validate_bracket(bracket, tol)
    root, f_root, iterations = _bracketed_root(residual, lo, hi, tol, tol)
    b2 = lj_virial.b2_integral(root, _QUAD_TOL).value
    return FixedPointResult(root, b2, f_root, (lo, hi), iterations, True)


def find_boyle(
    bracket: tuple[float, float] = DEFAULT_BOYLE_BRACKET, tol: float = 1e-10
) -> FixedPointResult:
    """Locate the Boyle root B2(T*) = 0 inside the bracket."""
    lo, hi = _validate_bracket(bracket, tol)

    def f(t):
        return lj_virial.b2_integral(t, _QUAD_TOL).value

    root, f_root, iterations = _bracketed_root(f, lo, hi, tol, tol)
    return FixedPointResult(root, f_root, residual(root), (lo, hi), iterations, True)


def localized_energy(eps0: float, fixpoint: FixedPointResult | None = None) -> float:
    """Temperature-independent kinetic-energy scale T_g* * eps0.

    Computes the default-window fixed point when none is supplied.
    """
    if eps0 <= 0.0:
        raise DomainError(f"eps0 must be positive, got {eps0!r}")
    if fixpoint is None:
        fixpoint = find_selfsim_fixpoint()
    if not fixpoint.converged:
        raise DomainError("localized energy requires a converged fixed point")
    return fixpoint.t_star * eps0
