"""Selberg and Aomoto integrals: closed forms, quadrature and Monte Carlo
cross-checks, the Aomoto recursion, and the vanishing of the screening
moments.

This is the only floating-point module in the package; gamma functions and
the integrals are transcendental.  Every stochastic routine takes an
explicit seed and reports a standard error; acceptance thresholds are three
standard errors.

One structural note on the moment integrals I(m).  With the screening
specialization (alpha, beta, gamma) = ((1-r)t, 1, t) the real-cube Selberg
weight never satisfies the convergence conditions (the corner where all
variables vanish is exactly borderline), and for nonnegative integrands the
moments could not vanish anyway.  What does vanish is the closed-cycle
version: on a torus around the origin the integrand of I(m) is homogeneous
of total degree |m| - r, so every |m| != 0 moment is exactly zero.  The
vanishing checks therefore run on the torus (where 2t is a nonnegative
integer, making the integrand single-valued after the square-root
substitution), both exactly as a constant-term computation and by Monte
Carlo over angles.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.special import gammaln, gammasgn, roots_jacobi

from .kernel import KernelError


class SelbergPoleError(KernelError):
    pass


class BudgetExceeded(KernelError):
    pass


class DomainError(KernelError):
    pass


def _log_gamma_signed(x):
    if x <= 0 and float(x).is_integer():
        raise SelbergPoleError("gamma pole at %s" % x)
    return gammaln(x), gammasgn(x)


def check_selberg_domain(n, alpha, beta, gamma):
    if alpha <= 0 or beta <= 0:
        return False
    bound = min(1.0 / n,
                alpha / (n - 1) if n > 1 else math.inf,
                beta / (n - 1) if n > 1 else math.inf)
    return gamma > -bound


def selberg_closed(n, alpha, beta, gamma):
    """prod_{j=1}^n G(a+(j-1)g) G(b+(j-1)g) G(1+jg) / (G(a+b+(n+j-2)g) G(1+g))."""
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)
    log = 0.0
    sign = 1.0
    for j in range(1, n + 1):
        for x in (alpha + (j - 1) * gamma, beta + (j - 1) * gamma, 1 + j * gamma):
            lg, sg = _log_gamma_signed(x)
            log += lg
            sign *= sg
        for x in (alpha + beta + (n + j - 2) * gamma, 1 + gamma):
            lg, sg = _log_gamma_signed(x)
            log -= lg
            sign *= sg
    return sign * math.exp(log)


def aomoto_closed(n, k, alpha, beta, gamma):
    """S_n with k inserted coordinates: S_n * prod_{j=1}^k
    (alpha + (n-j) gamma) / (alpha + beta + (2n-j-1) gamma)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    value = selberg_closed(n, alpha, beta, gamma)
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)
    for j in range(1, k + 1):
        value *= (alpha + (n - j) * gamma) / (alpha + beta + (2 * n - j - 1) * gamma)
    return value


def aomoto_ratio_exact(r, t, k):
    """The exact rational ratio I(1^k)/I(0) at the screening specialization
    (alpha, beta, gamma) = ((1-r)t, 1, t): prod_{j=1}^k (1-j)t / (1+(r-j)t).

    The j = 1 factor carries (1-1) t = 0, so the ratio vanishes for k >= 1.
    """
    t = Fraction(t)
    out = Fraction(1)
    for j in range(1, k + 1):
        den = 1 + (r - j) * t
        if den == 0:
            raise SelbergPoleError("vanishing denominator at j = %d" % j)
        out *= Fraction(1 - j) * t / den
    return out


def i0_closed(r, t):
    """Gamma-product form of the normalization I(0) = S_r((1-r)t, 1, t)."""
    t = float(t)
    log = 0.0
    sign = 1.0
    for j in range(1, r):
        for x, s in (((j - r) * t, +1), (1 + (j + 1) * t, +1), (1 + t, -1)):
            lg, sg = _log_gamma_signed(x)
            log += s * lg
            sign *= sg
    return sign * math.exp(log)


# ---------------------------------------------------------------------------
# numeric integration of the cube integrals
# ---------------------------------------------------------------------------

def _jacobi_nodes_01(deg, alpha, beta):
    """Nodes/weights for int_0^1 x^{alpha-1} (1-x)^{beta-1} f(x) dx."""
    # map to the Jacobi weight (1-u)^{beta-1} (1+u)^{alpha-1} on [-1, 1]
    x, w = roots_jacobi(deg, beta - 1, alpha - 1)
    nodes = (x + 1) / 2
    weights = w * 0.5 ** (alpha + beta - 1)
    return nodes, weights


def selberg_quadrature(n, alpha, beta, gamma, degree=64):
    """Tensor Gauss-Jacobi quadrature for n <= 2, absorbing the endpoint
    weight into the nodes; returns (value, error_estimate)."""
    if n not in (1, 2):
        raise ValueError("quadrature supports n <= 2")
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)

    def compute(deg):
        x, w = _jacobi_nodes_01(deg, alpha, beta)
        if n == 1:
            return float(np.sum(w))
        diff = np.abs(x[:, None] - x[None, :]) ** (2 * gamma)
        return float(w @ diff @ w)

    coarse = compute(degree // 2)
    fine = compute(degree)
    return fine, abs(fine - coarse)


def selberg_montecarlo(n, alpha, beta, gamma, samples=10 ** 6, seed=0,
                       moment=None, max_samples=5 * 10 ** 7):
    """Plain Monte Carlo over the unit cube with per-variable Beta importance
    sampling for the endpoint factors; returns (value, standard_error)."""
    if samples > max_samples:
        raise BudgetExceeded("sample budget %d exceeds the cap" % samples)
    rng = np.random.default_rng(seed)
    alpha_f, beta_f, gamma_f = float(alpha), float(beta), float(gamma)
    x = rng.beta(alpha_f, beta_f, size=(samples, n))
    # Beta(alpha, beta) density absorbs x^{a-1}(1-x)^{b-1}/B(a,b)
    log_b = (gammaln(alpha_f) + gammaln(beta_f) - gammaln(alpha_f + beta_f))
    vals = np.full(samples, math.exp(log_b) ** n)
    for i in range(n):
        for j in range(i + 1, n):
            vals = vals * np.abs(x[:, i] - x[:, j]) ** (2 * gamma_f)
    if moment is not None:
        for i, mi in enumerate(moment):
            if mi:
                vals = vals * x[:, i] ** mi
    mean = float(np.mean(vals))
    err = float(np.std(vals) / math.sqrt(samples))
    return mean, err


def montecarlo_symmetrized_moment(n, alpha, beta, gamma, moment, samples=10 ** 6,
                                  seed=0):
    """Self-normalized estimate of E_w[x^m] for permutation-symmetry checks."""
    rng = np.random.default_rng(seed)
    x = rng.beta(float(alpha), float(beta), size=(samples, n))
    w = np.ones(samples)
    for i in range(n):
        for j in range(i + 1, n):
            w = w * np.abs(x[:, i] - x[:, j]) ** (2 * float(gamma))
    num = w.copy()
    for i, mi in enumerate(moment):
        if mi:
            num = num * x[:, i] ** mi
    ratio = float(np.sum(num) / np.sum(w))
    resid = num - ratio * w
    err = float(np.sqrt(np.sum(resid ** 2)) / np.sum(w))
    return ratio, err


# ---------------------------------------------------------------------------
# the Aomoto recursion
# ---------------------------------------------------------------------------

def aomoto_recursion_check(n, alpha, beta, gamma, rtol=1e-10):
    """Evaluate the contiguous recursion between S(k-1) and S(k) in both the
    transcribed form

        0 = alpha S(k-1) - (alpha+beta) S(k-1) + gamma (n-k) S(k-1)
            - gamma (2n-k-1) S(k)

    and the corrected form in which the (alpha+beta) term multiplies S(k),

        0 = (alpha + gamma (n-k)) S(k-1) - (alpha + beta + gamma (2n-k-1)) S(k),

    reporting relative residuals for every k.  The corrected form is the one
    consistent with the closed product; the transcribed one is reported, not
    asserted.
    """
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)
    rows = []
    for k in range(1, n + 1):
        s_prev = aomoto_closed(n, k - 1, alpha, beta, gamma)
        s_k = aomoto_closed(n, k, alpha, beta, gamma)
        scale = max(abs(s_prev), abs(s_k), 1e-300)
        transcribed = (alpha * s_prev - (alpha + beta) * s_prev
                       + gamma * (n - k) * s_prev - gamma * (2 * n - k - 1) * s_k)
        corrected = ((alpha + gamma * (n - k)) * s_prev
                     - (alpha + beta + gamma * (2 * n - k - 1)) * s_k)
        rows.append({
            "k": k,
            "transcribed_residual": transcribed / scale,
            "corrected_residual": corrected / scale,
            "corrected_ok": abs(corrected / scale) < rtol,
        })
    return {
        "n": n, "alpha": alpha, "beta": beta, "gamma": gamma,
        "rows": rows,
        "corrected_all_ok": all(r["corrected_ok"] for r in rows),
        "transcribed_all_ok": all(abs(r["transcribed_residual"]) < rtol for r in rows),
    }


# ---------------------------------------------------------------------------
# vanishing of the screening moments (torus form)
# ---------------------------------------------------------------------------

def _require_torus_exponents(r, t):
    t = Fraction(t)
    two_t = 2 * t
    if two_t.denominator != 1 or two_t < 0:
        raise DomainError("the torus integrand needs 2t a nonnegative integer")
    return t, int(two_t)


def vanishing_moment_exact(r, t, moment):
    """Exact constant-term evaluation of the torus moment

        I(m) = CT[ prod_i w_i^{2 m_i + 2(1-r) t} prod_{i<j} (w_i^2 - w_j^2)^{2t} ]

    (the square-root substitution z = w^2 doubles every exponent).  By
    homogeneity this vanishes whenever |m| != 0.
    """
    t, two_t = _require_torus_exponents(r, t)
    # expand prod (w_i^2 - w_j^2)^{2t} over exponent vectors
    poly = {tuple([0] * r): Fraction(1)}
    for i in range(r):
        for j in range(i + 1, r):
            factor = {}
            for a in range(two_t + 1):
                e = [0] * r
                e[i] = 2 * a
                e[j] = 2 * (two_t - a)
                coeff = Fraction(math.comb(two_t, a) * (-1) ** (two_t - a))
                factor[tuple(e)] = coeff
            out = {}
            for e1, c1 in poly.items():
                for e2, c2 in factor.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            poly = out
    shift = [2 * mi + int(2 * (1 - r) * t) for mi in moment]
    target = tuple(-s for s in shift)
    return poly.get(target, Fraction(0))


def vanishing_check(r, t, moment, samples=10 ** 5, seed=7):
    """Monte Carlo over torus angles for I(m)/I(0), plus the exact constant
    term; asserts nothing, reports estimates, errors and the 3-sigma verdict.
    """
    t, two_t = _require_torus_exponents(r, t)
    if len(moment) != r:
        raise ValueError("moment must have %d entries" % r)
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * math.pi, size=(samples, r))
    w = np.exp(1j * theta)
    base = np.ones(samples, dtype=complex)
    for i in range(r):
        for j in range(i + 1, r):
            base = base * (w[:, i] ** 2 - w[:, j] ** 2) ** two_t
    expo = int(2 * (1 - r) * t)
    for i in range(r):
        base = base * w[:, i] ** expo
    num = base.copy()
    for i, mi in enumerate(moment):
        if mi:
            num = num * w[:, i] ** (2 * mi)
    i0_mean = np.mean(base)
    im_mean = np.mean(num)
    im_err = float(np.std(num.real) / math.sqrt(samples)) + \
        1j * float(np.std(num.imag) / math.sqrt(samples))
    exact_m = vanishing_moment_exact(r, t, moment)
    exact_0 = vanishing_moment_exact(r, t, [0] * r)
    scale = abs(complex(i0_mean)) or 1.0
    consistent = (abs(im_mean.real) < 3 * max(im_err.real, 1e-300)
                  and abs(im_mean.imag) < 3 * max(im_err.imag, 1e-300))
    inconclusive = max(im_err.real, im_err.imag) > max(scale, 1.0)
    return {
        "r": r,
        "t": str(t),
        "moment": list(moment),
        "samples": samples,
        "seed": seed,
        "mc_moment": [im_mean.real, im_mean.imag],
        "mc_moment_stderr": [im_err.real, im_err.imag],
        "mc_normalizer": [float(i0_mean.real), float(i0_mean.imag)],
        "exact_moment": str(exact_m),
        "exact_normalizer": str(exact_0),
        "consistent_with_zero": bool(consistent) if sum(moment) != 0 else None,
        "inconclusive": bool(inconclusive),
    }
