"""Saddle-point constants for the first-row fluctuations, and the desk-scale
convergence experiment against Tracy-Widom.

With psi(z) = ((z-alpha)/(z-t*alpha))^m (1-alpha z)^{-n} z^{-cn} and
sigma = n^{-1} log psi, the centering constant c makes sigma' vanish to
second order at the unique saddle z0 in (alpha, 1/alpha); the scaling
constant is g = z0^{-1} (2/sigma'''(z0))^{1/3}.  The limit law of
(lambda_1 - c n)/(g^{-1} n^{1/3}) is F2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import bisect

from .measure import MeasureParams, lambda1_cdf_exact
from .tracy_widom import tw_f2


def _check_ranges(alpha, tau, t):
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if tau <= 0:
        raise ValueError("tau must be positive")
    if t > 0:
        raise ValueError("t must be nonpositive")


def saddle_root_function(alpha, tau, t):
    """LHS of the saddle equation; strictly decreasing on (alpha, 1/alpha)."""

    def f(z):
        return tau * (1 - t) * (z * z - t * alpha * alpha) / (
            (z - alpha) ** 2 * (z - t * alpha) ** 2
        ) - 1.0 / (1.0 - alpha * z) ** 2

    return f


def saddle_point(alpha, tau, t):
    """Unique root z0 of the saddle equation in (alpha, 1/alpha), by bisection."""
    _check_ranges(alpha, tau, t)
    lo, hi = alpha, 1.0 / alpha
    eps = 1e-12 * (hi - lo)
    return bisect(
        saddle_root_function(alpha, tau, t), lo + eps, hi - eps,
        xtol=1e-15, rtol=8.9e-16,
    )


def sigma_prime(z, alpha, tau, t, c):
    # partial fractions: tau*alpha*(1-t)/((z-a)(z-ta)) = tau/(z-a) - tau/(z-ta)
    return tau / (z - alpha) - tau / (z - t * alpha) + alpha / (1 - alpha * z) - c / z


def sigma_second(z, alpha, tau, t, c):
    return (
        -tau / (z - alpha) ** 2
        + tau / (z - t * alpha) ** 2
        + alpha ** 2 / (1 - alpha * z) ** 2
        + c / z ** 2
    )


def sigma_third(z, alpha, tau, t, c):
    return (
        2 * tau / (z - alpha) ** 3
        - 2 * tau / (z - t * alpha) ** 3
        + 2 * alpha ** 3 / (1 - alpha * z) ** 3
        - 2 * c / z ** 3
    )


@dataclass(frozen=True)
class SaddleData:
    z0: float
    c: float
    sigma3: float
    g: float

    @property
    def c1(self):
        return self.c

    @property
    def c2(self):
        return 1.0 / self.g


def constants(alpha, tau, t):
    """Centering c and scaling g from the saddle point."""
    z0 = saddle_point(alpha, tau, t)
    c = alpha * z0 * (
        tau * (1 - t) / ((z0 - alpha) * (z0 - t * alpha)) + 1.0 / (1.0 - alpha * z0)
    )
    s3 = sigma_third(z0, alpha, tau, t, c)
    if c <= 0 or s3 <= 0:
        raise ArithmeticError("saddle data violates positivity")
    g = (2.0 / s3) ** (1.0 / 3.0) / z0
    return SaddleData(z0=z0, c=c, sigma3=s3, g=g)


def t0_closed_forms(alpha, tau):
    """Closed forms of z0, c1, c2 at t = 0."""
    rt = math.sqrt(tau)
    z0 = (alpha + rt) / (1.0 + rt * alpha)
    c1 = (1.0 + rt * alpha) ** 2 / (1.0 - alpha * alpha) - 1.0
    c2 = (
        alpha ** (1.0 / 3.0)
        * tau ** (-1.0 / 6.0)
        / (1.0 - alpha * alpha)
        * (alpha + rt) ** (2.0 / 3.0)
        * (1.0 + rt * alpha) ** (2.0 / 3.0)
    )
    return z0, c1, c2


def sigma_derivative_check(alpha, tau, t, step=1e-5):
    """Residuals of the closed-form sigma derivatives against central finite
    differences of sigma(z) = tau log((z-a)/(z-ta)) - log(1-a z) - c log z.

    The differences are taken at 50-digit working precision so that the
    third-derivative stencil is not drowned by rounding (in doubles its
    floor sits near 1e-4).
    """
    import mpmath

    data = constants(alpha, tau, t)
    z0, c = data.z0, data.c
    with mpmath.workdps(50):
        za, zt, zc = mpmath.mpf(alpha), mpmath.mpf(t), mpmath.mpf(c)

        def sigma(z):
            return (
                mpmath.mpf(tau) * mpmath.log((z - za) / (z - zt * za))
                - mpmath.log(1 - za * z)
                - zc * mpmath.log(z)
            )

        h = mpmath.mpf(step) * min(z0 - alpha, 1.0 / alpha - z0)
        z = mpmath.mpf(z0)
        fd1 = (sigma(z + h) - sigma(z - h)) / (2 * h)
        fd2 = (sigma(z + h) - 2 * sigma(z) + sigma(z - h)) / (h * h)
        fd3 = (
            sigma(z + 2 * h) - 2 * sigma(z + h) + 2 * sigma(z - h) - sigma(z - 2 * h)
        ) / (2 * h ** 3)
        return {
            "first": float(abs(fd1 - sigma_prime(z0, alpha, tau, t, c))),
            "second": float(abs(fd2 - sigma_second(z0, alpha, tau, t, c))),
            "third": float(abs(fd3 - data.sigma3)),
            "first_at_saddle": abs(sigma_prime(z0, alpha, tau, t, c)),
            "second_at_saddle": abs(sigma_second(z0, alpha, tau, t, c)),
        }


def scaled_cdf(params, data, s, shift=-1):
    """Exact P(lambda_1 <= h + shift) at h = ceil(c n + g^{-1} n^{1/3} s).

    The default shift -1 reads the theorem's strict inequality "< s" on the
    integer lattice; shift 0 gives the weak-inequality convention.
    """
    n = params.n
    h = math.ceil(data.c * n + n ** (1.0 / 3.0) * s / data.g) + shift
    if h < 0:
        return 0.0
    return float(lambda1_cdf_exact(params, h, mode="float"))


def convergence_experiment(alpha, tau, t, n_list, s_grid, shift=-1, tw_kwargs=None):
    """Sup-distance between the scaled exact lambda_1 law and F2 for each n.

    Returns (rows, summary): rows are dicts with n, s, empirical_cdf, f2 and
    abs_diff; summary pairs each n with its sup-distance over the grid.
    """
    tw_kwargs = tw_kwargs or {}
    f2_vals = {float(s): tw_f2(float(s), **tw_kwargs) for s in s_grid}
    data = constants(alpha, tau, t)
    rows = []
    summary = []
    for n in n_list:
        m = tau * n
        if abs(m - round(m)) > 1e-9:
            raise ValueError(f"tau * n must be an integer; got {m}")
        params = MeasureParams(int(round(m)), int(n), float(alpha), float(t))
        sup = 0.0
        for s in s_grid:
            try:
                cdf = scaled_cdf(params, data, float(s), shift=shift)
            except ArithmeticError as exc:
                rows.append({"n": int(n), "s": float(s), "error": str(exc)})
                continue
            f2 = f2_vals[float(s)]
            diff = abs(cdf - f2)
            sup = max(sup, diff)
            rows.append(
                {
                    "n": int(n),
                    "s": float(s),
                    "empirical_cdf": cdf,
                    "f2": f2,
                    "abs_diff": diff,
                }
            )
        summary.append({"n": int(n), "sup_distance": sup})
    return rows, summary
