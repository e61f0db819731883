"""The Heisenberg-Clifford Fock module realized on symmetric functions, the
free-field form of the super Virasoro generators, the Verma -> symmetric
function pipeline for singular vectors, and the one-screening residue
computation.

Conventions.  States are power-sum symmetric functions; the boson modes act
as  a_n -> -2 t n d/dp_{2n},  a_{-n} -> -(1/2t) p_{2n}  (n > 0), with a_0 the
scalar alpha.  The fermion current lives in the odd power sums: with

    phi_-(z) = - sum p_{2n-1} z^{2n-1} / (2n-1),
    phi_+(z) =   sum (d/dp_{2n-1}) z^{-(2n-1)},

the raw vertex combination  (1/(2 sqrt 2)) (e^{phi_-} e^{2 phi_+}
- e^{-phi_-} e^{-2 phi_+})  has modes (coefficient of z^{-2k}) whose
anticommutator closes on MINUS the canonical pairing.  Composing each mode
with the parity involution J: p_odd -> -p_odd (a standard cocycle factor)
flips the sign of every contraction, so

    b_k := [z^{-2k}] (raw vertex) o J

satisfies b_k b_l + b_l b_k = delta_{k+l,0} exactly, while leaving all
single-fermion images (b_{-1/2} 1 = -p_1/sqrt2, ...) untouched.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import KernelError, RatFun, Sqrt2Ext, is_zero
from .symfunc import (
    SymFunc,
    convert,
    dominance_leq,
    multiplicities,
    multiply,
    partitions,
    to_p,
)
from .vertexops import apply_vertex_mode, c1_apply, eps1, p_derivative


class ProportionalityFailure(KernelError):
    pass


HALF = Fraction(1, 2)

_SQRT2_QUARTER = Sqrt2Ext(Fraction(0), Fraction(1, 4))  # 1/(2 sqrt 2)


def odd_sign_involution(f):
    """The algebra automorphism p_{2n-1} -> -p_{2n-1}."""
    fp = to_p(f)
    out = {}
    for lam, c in fp.terms.items():
        odd = sum(1 for p in lam if p % 2 == 1)
        out[lam] = -c if odd % 2 == 1 else c
    return SymFunc("p", out)


def _fermion_vertex(sign, k2, f):
    """[z^{-k2}] e^{sign phi_-} e^{sign 2 phi_+} applied to f."""

    def cre(a):
        return Fraction(-sign, a) if a % 2 == 1 else None

    def ann(b):
        return Fraction(2 * sign) if b % 2 == 1 else None

    return apply_vertex_mode(cre, ann, k2, f, parity="odd")


def fermion_act(k, f):
    """The canonical fermion mode b_k (k half-odd) on a symmetric function."""
    k = Fraction(k)
    if (2 * k) % 2 != 1:
        raise ValueError("fermion modes carry half-odd indices")
    g = odd_sign_involution(f)
    k2 = int(2 * k)
    plus = _fermion_vertex(+1, k2, g)
    minus = _fermion_vertex(-1, k2, g)
    return (plus - minus).scale(_SQRT2_QUARTER)


def boson_act(n, f, t):
    """The Heisenberg mode a_n (nonzero integer n) at parameter t."""
    if n == 0:
        raise ValueError("a_0 acts as the scalar weight; use the alpha argument")
    if n > 0:
        return p_derivative(f, 2 * n).scale(-2 * t * n)
    m = -n
    one = t * 0 + 1
    return multiply(SymFunc("p", {(2 * m,): one}), to_p(f)).scale(-1 / (2 * t))


def _max_degree(f):
    fp = to_p(f)
    if not fp.terms:
        return 0
    return max(sum(lam) for lam in fp.terms)


def _apply_a(idx, f, alpha, t):
    if idx == 0:
        return to_p(f).scale(alpha)
    return boson_act(idx, f, t)


def ff_act(gen, f, alpha, rho, t):
    """The free-field form of a super Virasoro generator on a symmetric
    function with a_0-weight alpha:

      L_n = 1/2 sum_m :a_m a_{n-m}: - rho (n+1) a_n - 1/2 sum_k (k+1/2) :b_k b_{n-k}:
      G_k = sum_m b_{k-m} a_m - 2 rho (k+1/2) b_k
    """
    kind = gen[0]
    fp = to_p(f)
    if fp.is_zero():
        return fp
    d = _max_degree(fp)
    zero = SymFunc("p", {})
    if kind == "L":
        n = int(gen[1])
        out = zero
        # bosonic bilinear
        lo = n - d // 2 - 2
        hi = d // 2 + 2
        for m in range(lo, hi + 1):
            i, j = (m, n - m) if m <= n - m else (n - m, m)
            g = _apply_a(j, fp, alpha, t)
            if g.is_zero():
                continue
            g = _apply_a(i, g, alpha, t)
            if g.is_zero():
                continue
            out = out + g.scale(HALF)
        # linear term
        if n != 0:
            g = boson_act(n, fp, t)
            if not g.is_zero():
                out = out + g.scale(-rho * Fraction(n + 1))
        else:
            out = out + fp.scale(-rho * alpha)
        # fermionic bilinear
        k = Fraction(2 * lo + 1, 2)
        while k <= hi + 1:
            l = n - k
            a, b = (k, l) if k <= l else (l, k)
            sign = 1 if k <= l else -1
            g = fermion_act(b, fp)
            if not g.is_zero():
                g = fermion_act(a, g)
                if not g.is_zero():
                    out = out + g.scale(Fraction(sign) * (k + HALF) * Fraction(-1, 2))
            k += 1
        return out
    if kind == "G":
        k = Fraction(gen[1])
        out = zero
        lo = int(k - Fraction(d, 2)) - 2
        hi = d // 2 + 2
        for m in range(lo, hi + 1):
            g = _apply_a(m, fp, alpha, t)
            if g.is_zero():
                continue
            g = fermion_act(k - m, g)
            if not g.is_zero():
                out = out + g
        g = fermion_act(k, fp)
        if not g.is_zero():
            out = out + g.scale(-2 * rho * (k + HALF))
        return out
    raise ValueError("unsupported generator %r" % (gen,))


# ---------------------------------------------------------------------------
# Verma -> symmetric functions
# ---------------------------------------------------------------------------

def verma_to_lambda(v, normalize=False, branch="plus"):
    """Image of a Verma vector under the free-field substitution followed by
    the boson-fermion dictionary, as a symmetric function of degree 2*level.

    With normalize=True (singular-vector use) the result is rescaled so the
    coefficient of m_{(r^s)} equals 1; all coefficients then land in the
    sqrt2-free base field and the returned SymFunc carries plain base-field
    scalars.  With normalize=False the raw image is returned, coefficients
    in the sqrt2 extension of the base field.
    """
    if v.weight is None:
        raise ValueError("verma_to_lambda needs weight data on the vector")
    hw = v.weight
    alpha = hw.alpha_plus if branch == "plus" else hw.alpha_minus
    rho, t = hw.rho, hw.t
    one = t * 0 + 1
    total = SymFunc("p", {})
    for sp, coeff in v.terms.items():
        state = SymFunc("p", {(): one})
        word = [("L", -a) for a in reversed(sp.bosonic)]
        word += [("G", -b) for b in reversed(sp.fermionic)]
        for gen in reversed(word):
            state = ff_act(gen, state, alpha, rho, t)
        total = total + state.scale(coeff)
    if not normalize:
        return total
    lam = (hw.r,) * hw.s
    total_m = convert(total, "m")
    lead = total_m.terms.get(lam)
    if lead is None or is_zero(lead):
        raise ProportionalityFailure(
            "image of the (%d,%d) singular vector has no m_%s component"
            % (hw.r, hw.s, list(lam)))
    monic = total_m.scale(1 / lead)

    def strip(c):
        return c.base_part() if isinstance(c, Sqrt2Ext) else c

    return to_p(monic.map_coeffs(strip))


# ---------------------------------------------------------------------------
# the r = 1 screening residue
# ---------------------------------------------------------------------------

def _exp_series_coeff(j, parity, sign_creation):
    """[w^j] exp(sign sum_{a in parity} p_a w^a / a) as a p-basis SymFunc."""
    out = {}
    keep = (lambda p: p % 2 == 1) if parity == "odd" else (lambda p: p % 2 == 0)
    for kappa in partitions(j):
        if not all(keep(p) for p in kappa):
            continue
        w = Fraction(1)
        for p, m in multiplicities(kappa).items():
            base = Fraction(sign_creation, p)
            for _ in range(m):
                w *= base
            fact = 1
            for i in range(1, m + 1):
                fact *= i
            w /= fact
        out[kappa] = w
    return SymFunc("p", out)


def screening_series(smax):
    """Coefficients of (E1(-w) - E1(w)) E0(-w) up to w^smax, where
    E1(w) = exp(sum p_{2n-1} w^{2n-1}/(2n-1)) and
    E0(w) = exp(-sum p_{2n} w^{2n}/(2n)).

    Only odd powers survive and [w^{2n-1}] equals -2 e_{2n-1}.
    """
    e1_plus = [_exp_series_coeff(j, "odd", +1) for j in range(smax + 1)]
    diff = []
    for j in range(smax + 1):
        if j % 2 == 1:
            diff.append(e1_plus[j].scale(Fraction(-2)))
        else:
            diff.append(SymFunc("p", {}))
    e0 = [_exp_series_coeff(j, "even", -1) for j in range(smax + 1)]
    out = []
    for j in range(smax + 1):
        acc = SymFunc("p", {})
        for i in range(j + 1):
            if not diff[i].is_zero() and not e0[j - i].is_zero():
                acc = acc + multiply(diff[i], e0[j - i])
        out.append(acc)
    return out


def screening_r1(s, t="sym"):
    """The one-screening residue for the (1, s) singular vector, s odd:
    the w^s coefficient of the screened fermion series times t/2, which
    evaluates to -t e_s."""
    if s < 1 or s % 2 == 0:
        raise ValueError("s must be a positive odd integer")
    if t == "sym" or t is None:
        t = RatFun.variable("t")
    elif isinstance(t, (int, Fraction)):
        t = Fraction(t)
    series = screening_series(s)
    return series[s].scale(t * HALF)


# ---------------------------------------------------------------------------
# the main identification
# ---------------------------------------------------------------------------

def verify_conjecture(r, s, t="sym"):
    """Check that the image of the (r, s) singular vector is proportional to
    the gamma-family member at shape (r^s) with gamma = 1/t^2, that it is an
    exact C^1_0 eigenfunction, and that its monomial expansion is
    dominance-triangular.  Returns the verification report.
    """
    from .svir import singular_vector
    from .uglov import uglov2_orth

    chi = singular_vector(r, s, t)
    hw = chi.weight
    raw = verma_to_lambda(chi, normalize=False)
    lam = (r,) * s
    raw_m = convert(raw, "m")
    triangular = all(dominance_leq(mu, lam) for mu in raw_m.terms)
    one = hw.t * 0 + 1
    gamma = one / (hw.t * hw.t)
    target = uglov2_orth(lam, gamma)
    scalar = raw_m.terms.get(lam)
    if scalar is None or is_zero(scalar):
        raise ProportionalityFailure("image lacks the leading monomial m_%s" % (list(lam),))
    proportional = True
    mismatch = None
    diff = raw_m - target.map_coeffs(lambda c: c * scalar)
    if not diff.is_zero():
        proportional = False
        mismatch = sorted(diff.terms, key=lambda mu: (sum(mu), mu))[0]
        raise ProportionalityFailure(
            "image is not proportional to the shape-%s family member; first "
            "mismatch at m_%s" % (list(lam), list(mismatch)))
    monic = verma_to_lambda(chi, normalize=True)
    image = c1_apply(gamma, 0, monic)
    eigencheck = (image - to_p(monic).scale(eps1(lam, gamma))).is_zero()
    from .kernel import scalar_to_json
    return {
        "rs": [r, s],
        "proportional": proportional,
        "scalar": scalar_to_json(scalar),
        "eigencheck": eigencheck,
        "triangular": triangular,
    }
