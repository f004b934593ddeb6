"""Reduced Lennard-Jones second virial coefficient by three routes.

All quantities are dimensionless: temperatures are T* = kT/eps0 (eps0 the
well depth), lengths are x = q/sigma, and B2 is in units of the hard-core
volume b0 = (2/3) pi sigma^3.  The three routes are

  b2_integral    (4/T) Int_0^inf x^2 [12/x^12 - 6/x^6] exp{-(4/T)[x^-12 - x^-6]} dx
  b2_series      sum_n a_n T^(-(2n+1)/4)         (valid for T >= 1.5)
  b2_pair_oracle -3  Int_0^inf (exp(-u(x)/T) - 1) x^2 dx,  u = 4(x^-12 - x^-6)

The first two are equivalent by construction, the third by integration by
parts; the pair oracle deliberately runs on an independent quadrature engine
(QUADPACK) so route agreement is a genuine cross-check.

Tail/head handling of the improper integrals:

* head (x -> 0+): the Boltzmann factor vanishes like exp(-(4/T) x^-12), so
  everything below x_min(T) = min(0.8, (350 T)^(-1/12)) underflows double
  precision (exponent <= -700); the dropped mass is below 1e-290 and the
  Eq-form integrand is evaluated with an exponent guard so it never
  overflows.  The pair-oracle integrand tends to +3 x^2 there (no cutoff
  needed; it starts at 0).
* tail (x -> inf): both integrands decay like x^-4; beyond X_MAX = 50 the
  substitution u = 1/x maps the remainder onto [0, 1/X_MAX] where the
  transformed integrand is smooth and O(u^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import specfun
from .errors import ConvergenceError, DomainError
from .quadrature import integrate

SERIES_T_MIN = 1.5   # series route refused below this reduced temperature
X_MAX = 50.0         # switch-over from direct quadrature to the substituted tail
_T_MIN_REPRESENTABLE = 0.0015  # exp(1/T) at the potential minimum overflows below this
_EXP_UNDERFLOW = -700.0


@dataclass(frozen=True)
class B2Evaluation:
    """One B2 evaluation: value in units of b0, route, and effort metadata."""

    value: float
    method: str            # "integral" | "series" | "pair_oracle"
    est_error: float
    terms_or_nodes: int
    converged: bool = True


def _check_t(t_star: float) -> None:
    if not t_star > 0.0:
        raise DomainError(f"reduced temperature must be positive, got {t_star!r}")
    if t_star < _T_MIN_REPRESENTABLE:
        raise DomainError(
            f"reduced temperature {t_star!r} too small: the Boltzmann factor "
            "exceeds double range"
        )


def _x_min(t_star: float) -> float:
    # (4/T) x^-12 (1 - x^6) >= 700 for all x below this, so the integrand
    # underflows cleanly over the dropped head interval.
    return min(0.8, (350.0 * t_star) ** (-1.0 / 12.0))


def _integrand(x: float, t_star: float) -> float:
    inv6 = x ** -6
    inv12 = inv6 * inv6
    expo = -(4.0 / t_star) * (inv12 - inv6)
    if expo < _EXP_UNDERFLOW:
        return 0.0
    return (4.0 / t_star) * x * x * (12.0 * inv12 - 6.0 * inv6) * math.exp(expo)


def _tail_integrand(u: float, t_star: float) -> float:
    # x = 1/u substitution of _integrand; smooth, ~ -(24/T) u^2 near u = 0.
    if u == 0.0:
        return 0.0
    u6 = u ** 6
    u12 = u6 * u6
    return (4.0 / t_star) * (12.0 * u12 - 6.0 * u6) / (u * u * u * u) * math.exp(-(4.0 / t_star) * (u12 - u6))


def b2_integral(t_star: float, abs_tol: float = 1e-10) -> B2Evaluation:
    """B2(T*) by adaptive quadrature of the force-weighted integrand."""
    _check_t(t_star)
    if abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol!r}")
    main = integrate(lambda x: _integrand(x, t_star), _x_min(t_star), X_MAX, 0.5 * abs_tol)
    tail = integrate(lambda u: _tail_integrand(u, t_star), 0.0, 1.0 / X_MAX, 0.5 * abs_tol)
    return B2Evaluation(
        value=main.value + tail.value,
        method="integral",
        est_error=main.est_error + tail.est_error,
        terms_or_nodes=main.evaluations + tail.evaluations,
    )


def _pair_integrand(x: float, t_star: float) -> float:
    if x <= 0.0:
        return 0.0
    inv6 = x ** -6
    u = 4.0 * (inv6 * inv6 - inv6)
    expo = -u / t_star
    if expo < _EXP_UNDERFLOW:
        return 3.0 * x * x  # exp underflows to 0; -3 x^2 (0 - 1)
    return -3.0 * x * x * math.expm1(expo)


def _pair_tail_integrand(u: float, t_star: float) -> float:
    if u == 0.0:
        return 0.0
    u6 = u ** 6
    w = 4.0 * (u6 * u6 - u6)
    return -3.0 * math.expm1(-w / t_star) / (u * u * u * u)


def b2_pair_oracle(t_star: float, abs_tol: float = 1e-10) -> B2Evaluation:
    """B2(T*) by QUADPACK quadrature of the standard Mayer pair form.

    Independent of b2_integral in both integrand (integration-by-parts
    partner) and quadrature engine.
    """
    _check_t(t_star)
    if abs_tol <= 0.0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol!r}")
    from scipy.integrate import quad  # deferred: keeps CLI start-up light

    main = quad(_pair_integrand, 0.0, X_MAX, args=(t_star,), epsabs=0.5 * abs_tol,
                epsrel=0.0, limit=200, full_output=1)
    tail = quad(_pair_tail_integrand, 0.0, 1.0 / X_MAX, args=(t_star,),
                epsabs=0.5 * abs_tol, epsrel=0.0, limit=200, full_output=1)
    value = main[0] + tail[0]
    est_error = main[1] + tail[1]
    nodes = main[2]["neval"] + tail[2]["neval"]
    if len(main) > 3 or len(tail) > 3 or est_error > abs_tol:
        raise ConvergenceError(
            f"pair-oracle quadrature did not reach abs_tol={abs_tol:.3e} "
            f"(est_error={est_error:.3e})",
            best_estimate=value,
            est_error=est_error,
        )
    return B2Evaluation(value, "pair_oracle", est_error, nodes)


def b2_series(t_star: float, term_tol: float = 1e-14, max_terms: int = 120) -> B2Evaluation:
    """B2(T*) as a partial sum of the T^(-(2n+1)/4) series.

    Refuses T* < 1.5 where convergence degrades (use the quadrature routes
    there).  If max_terms is hit first the result carries converged=False.
    """
    _check_t(t_star)
    if t_star < SERIES_T_MIN:
        raise DomainError(
            f"series route requires T* >= {SERIES_T_MIN}; use b2_integral or "
            f"b2_pair_oracle at T* = {t_star!r}"
        )
    if term_tol <= 0.0:
        raise DomainError(f"term_tol must be positive, got {term_tol!r}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    total = 0.0
    term = math.inf
    n_used = max_terms
    for n in range(max_terms):
        term = specfun.alpha_coefficient(n) * t_star ** (-(2 * n + 1) / 4.0)
        total += term
        if abs(term) < term_tol:
            n_used = n + 1
            break
    converged = abs(term) < term_tol
    return B2Evaluation(total, "series", abs(term), n_used, converged)


def _db2_dt_series(t_star: float, term_tol: float = 1e-18, max_terms: int = 200) -> float:
    total = 0.0
    for n in range(max_terms):
        term = (
            specfun.alpha_coefficient(n)
            * (-(2 * n + 1) / 4.0)
            * t_star ** (-(2 * n + 5) / 4.0)
        )
        total += term
        if abs(term) < term_tol:
            return total
    raise ConvergenceError(
        f"derivative series did not converge at T* = {t_star!r}", best_estimate=total
    )


def _db2_dt_fd(t_star: float, quad_tol: float = 1e-12) -> float:
    h = t_star * 1e-6
    hi = b2_integral(t_star + h, quad_tol).value
    lo = b2_integral(t_star - h, quad_tol).value
    return (hi - lo) / (2.0 * h)


def db2_dt(t_star: float, quad_tol: float = 1e-12) -> float:
    """dB2/dT* from the term-wise differentiated series where it converges,
    else a central finite difference (step T* * 1e-6) on b2_integral."""
    _check_t(t_star)
    if t_star >= SERIES_T_MIN:
        return _db2_dt_series(t_star)
    return _db2_dt_fd(t_star, quad_tol)
