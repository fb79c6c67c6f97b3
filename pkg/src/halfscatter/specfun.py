"""Complex special functions used by every closed form in the package.

The only nonstandard piece is a Gauss 2F1 for complex parameters and real
argument z in [0, 1).  The defining power series is used below z = 0.6; above
it the value comes from the z -> 1-z linear transformation, switching to the
logarithmic (digamma) representations when c-a-b degenerates to an integer.
Log-gamma, digamma and the Bessel function are delegated to scipy behind the
same call surface.
"""

from __future__ import annotations

import numpy as np
from scipy import special as _sc

from .errors import InvalidCError, NoConvergenceError, PoleError

__all__ = [
    "log_gamma",
    "digamma",
    "pochhammer",
    "beta_fn",
    "gamma_ratio",
    "gauss_2f1",
    "hyp2f1_values",
    "bessel_script_J",
    "SERIES_THRESHOLD",
]

# Raw series below, linear transformation above; both converge comfortably in
# an overlap band used as a self-test.
SERIES_THRESHOLD = 0.6

MAX_TERMS = 20000
_TERM_TOL = 1e-16
_INT_TOL = 1e-12


def _nonpos_int_index(z, tol=1e-12):
    """Return n >= 0 such that z is within tol of -n, else None."""
    z = complex(z)
    if abs(z.imag) > tol:
        return None
    r = round(z.real)
    if r > 0 or abs(z.real - r) > tol:
        return None
    return -r


def _near_int(z, tol=_INT_TOL):
    """Return the integer nearest z if within tol (complex-aware), else None."""
    z = complex(z)
    if abs(z.imag) > tol:
        return None
    r = round(z.real)
    if abs(z.real - r) > tol:
        return None
    return r


def log_gamma(z) -> complex:
    """Principal-branch log Gamma(z); raises PoleError at nonpositive integers."""
    if _nonpos_int_index(z, tol=1e-14) is not None:
        raise PoleError(f"log_gamma pole at z = {z}")
    return complex(_sc.loggamma(complex(z)))


def digamma(z) -> complex:
    """Logarithmic derivative of Gamma; raises PoleError at nonpositive integers."""
    if _nonpos_int_index(z, tol=1e-14) is not None:
        raise PoleError(f"digamma pole at z = {z}")
    return complex(_sc.psi(complex(z)))


def pochhammer(q, n: int) -> complex:
    """Rising factorial (q)_n = q (q+1) ... (q+n-1), with (q)_0 = 1."""
    if n < 0 or n != int(n):
        raise ValueError("pochhammer order must be a nonnegative integer")
    out = 1.0 + 0.0j
    q = complex(q)
    for j in range(int(n)):
        out *= q + j
    return out


def gamma_ratio(numerators, denominators) -> complex:
    """Product of Gamma over numerators divided by Gamma over denominators.

    Evaluated in log space.  A pole among the denominators makes the ratio an
    exact zero; a pole among the numerators raises PoleError.
    """
    for d in denominators:
        if _nonpos_int_index(d, tol=1e-14) is not None:
            return 0.0 + 0.0j
    acc = 0.0 + 0.0j
    for v in numerators:
        acc += log_gamma(v)
    for d in denominators:
        acc -= log_gamma(d)
    return complex(np.exp(acc))


def beta_fn(a, b) -> complex:
    """Beta function Gamma(a)Gamma(b)/Gamma(a+b) via log-gamma."""
    if _nonpos_int_index(complex(a) + complex(b), tol=1e-14) is not None:
        raise PoleError(f"beta_fn pole at a+b = {complex(a) + complex(b)}")
    return complex(np.exp(log_gamma(a) + log_gamma(b) - log_gamma(complex(a) + complex(b))))


def bessel_script_J(mu: float, x) -> float | np.ndarray:
    """Half-line Bessel kernel sqrt(pi*x/2) * J_mu(x) for mu >= 0, x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("bessel_script_J requires x > 0")
    out = np.sqrt(np.pi * x / 2.0) * _sc.jv(mu, x)
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Gauss 2F1 core.  All helpers are vectorized over a real argument array and
# take fixed complex parameters, which is the access pattern of the kernel
# sweeps built on top.


def _raw_series(a, b, c, w, max_terms=MAX_TERMS):
    """Defining power series of F(a,b;c;w), vectorized over real w in [0,1).

    Stops once three consecutive terms fall below 1e-16 relative in every
    lane; hard cap guards slow convergence near w -> 1.
    """
    w = np.asarray(w, dtype=float)
    term = np.ones(w.shape, dtype=complex)
    total = np.ones(w.shape, dtype=complex)
    small = np.zeros(w.shape, dtype=np.int64)
    for n in range(max_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * w
        total = total + term
        below = np.abs(term) <= _TERM_TOL * np.abs(total)
        small = np.where(below, small + 1, 0)
        if np.all(small >= 3):
            return total
    raise NoConvergenceError(
        f"2F1 series did not converge within {max_terms} terms (max w = {w.max():.6g})"
    )


def _terminating_series(a, b, c, w, n_terms):
    """Exact finite sum when a or b sits at a nonpositive integer."""
    w = np.asarray(w, dtype=float)
    term = np.ones(w.shape, dtype=complex)
    total = np.ones(w.shape, dtype=complex)
    for n in range(n_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * w
        total = total + term
    return total


def _linear_transform(a, b, c, w, log_w):
    """z -> 1-z connection formula, valid when c-a-b is not an integer.

    Takes w = 1-z together with its exact logarithm so that the caller can
    supply log(1-z) analytically; forming 1-z in floating point near z = 1
    destroys the phase of the w^(c-a-b) factor.
    """
    d = c - a - b
    p1 = gamma_ratio((c, d), (c - a, c - b))
    p2 = gamma_ratio((c, -d), (a, b))
    out = np.zeros(w.shape, dtype=complex)
    if p1 != 0:
        out = out + p1 * _raw_series(a, b, a + b - c + 1.0, w)
    if p2 != 0:
        out = out + p2 * np.exp(d * log_w) * _raw_series(c - a, c - b, d + 1.0, w)
    return out


def _log_case(a, b, c, w, log_w, m, max_terms=MAX_TERMS):
    """F(a,b;a+b+m;z) for integer m >= 0 near z = 1, digamma representation.

    m = 0 and m >= 1 use the two classical logarithmic limit formulas; the
    epsilon-perturbation alternative loses about half the digits and is not
    used.
    """
    lw = log_w
    if m == 0:
        pref = gamma_ratio((c,), (a, b))
        if pref == 0:
            return np.zeros(w.shape, dtype=complex)
        coef = np.ones(w.shape, dtype=complex)
        h = 2.0 * digamma(1.0) - digamma(a) - digamma(b)
        total = coef * (h - lw)
        small = np.zeros(w.shape, dtype=np.int64)
        for n in range(max_terms):
            coef = coef * ((a + n) * (b + n) / ((n + 1.0) ** 2)) * w
            h = h + 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n)
            term = coef * (h - lw)
            total = total + term
            below = np.abs(term) <= _TERM_TOL * np.abs(total)
            small = np.where(below, small + 1, 0)
            if np.all(small >= 3):
                return pref * total
        raise NoConvergenceError("logarithmic 2F1 series (m=0) did not converge")

    # finite part, n = 0 .. m-1
    pref1 = gamma_ratio((float(m), c), (a + m, b + m))
    finite = np.zeros(w.shape, dtype=complex)
    if pref1 != 0:
        t = np.ones(w.shape, dtype=complex)
        for n in range(m):
            finite = finite + t
            if n < m - 1:
                t = t * ((a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n))) * w
        finite = pref1 * finite

    pref2 = gamma_ratio((c,), (a, b))
    if pref2 == 0:
        return finite
    pref2 = -((-1.0) ** m) * pref2 * np.exp(m * lw).astype(complex)
    coef = np.full(w.shape, 1.0 / float(_sc.factorial(m)), dtype=complex)
    g = lw - digamma(1.0) - digamma(m + 1.0) + digamma(a + m) + digamma(b + m)
    total = coef * g
    small = np.zeros(w.shape, dtype=np.int64)
    for n in range(max_terms):
        coef = coef * ((a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0))) * w
        g = g - 1.0 / (n + 1.0) - 1.0 / (n + m + 1.0) + 1.0 / (a + m + n) + 1.0 / (b + m + n)
        term = coef * g
        total = total + term
        below = np.abs(term) <= _TERM_TOL * np.abs(total)
        small = np.where(below, small + 1, 0)
        if np.all(small >= 3):
            return finite + pref2 * total
    raise NoConvergenceError(f"logarithmic 2F1 series (m={m}) did not converge")


def hyp2f1_values(a, b, c, z, log_w=None):
    """F(a,b;c;z) for complex parameters on a real grid z in [0,1).

    Vectorized over z with fixed (a,b,c); this is the entry point the solution
    and kernel sweeps use.  Dispatch: terminating series when a or b is a
    nonpositive integer, raw series for z below the threshold, connection
    formula or logarithmic representation above it.

    log_w, when given, is the exact natural log of 1-z.  Callers whose z comes
    from tanh(x)^2 or sech(x)^2 know log(1-z) analytically; passing it keeps
    the z -> 1-z branch accurate where 1-z would round away (z may then even
    saturate to 1.0 in floating point).
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if log_w is None:
        with np.errstate(divide="ignore"):
            log_w = np.log1p(-z)
    else:
        log_w = np.atleast_1d(np.asarray(log_w, dtype=float)) + np.zeros(z.shape)
    # log_w only matters on the transformed branch; there it must witness z < 1
    high_bad = (z > SERIES_THRESHOLD) & (~np.isfinite(log_w) | (log_w >= 0.0))
    if np.any(z < 0.0) or np.any(z[z <= SERIES_THRESHOLD] >= 1.0) or np.any(high_bad):
        raise ValueError("hyp2f1 argument must lie in [0, 1)")
    if _nonpos_int_index(c) is not None:
        raise InvalidCError(f"lower parameter c = {c} is a nonpositive integer")

    na = _nonpos_int_index(a)
    nb = _nonpos_int_index(b)
    degree = None
    if na is not None and na <= MAX_TERMS:
        degree = na
    if nb is not None and nb <= MAX_TERMS and (degree is None or nb < degree):
        degree = nb
    if degree is not None:
        out = _terminating_series(a, b, c, z, degree)
        return out[0] if scalar else out

    out = np.empty(z.shape, dtype=complex)
    low = z <= SERIES_THRESHOLD
    if np.any(low):
        out[low] = _raw_series(a, b, c, z[low])
    high = ~low
    if np.any(high):
        wh = np.exp(log_w[high])
        lwh = log_w[high]
        m = _near_int(c - a - b)
        if m is None:
            out[high] = _linear_transform(a, b, c, wh, lwh)
        elif m >= 0:
            out[high] = _log_case(a, b, c, wh, lwh, m)
        else:
            # reduce to a nonnegative integer gap via the Euler transformation
            d = c - a - b
            out[high] = np.exp(d * lwh) * _log_case(c - a, c - b, c, wh, lwh, -m)
    return out[0] if scalar else out


def gauss_2f1(a, b, c, z) -> complex:
    """Scalar Gauss hypergeometric 2F1 for complex a, b, c and real z in [0,1)."""
    return complex(hyp2f1_values(a, b, c, float(z)))
