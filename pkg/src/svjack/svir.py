"""The Neveu-Schwarz N=1 super Virasoro algebra: Verma modules over an exact
field, generator actions by normal ordering, contravariant Gram matrices,
Kac-determinant factorization checks, and singular vectors as kernels.

Generators are encoded as ('L', n) with integer n, ('G', k) with half-odd
Fraction k, and ('C',).  A basis monomial applied to the highest-weight
vector is stored as a word of negative-index generators in canonical order:
the L block with magnitudes ascending left to right, then the G block with
magnitudes ascending; equivalently L_{-a_l} ... L_{-a_1} G_{-b_m} ... G_{-b_1}
for the bosonic partition (a_1 >= ... >= a_l) and the strict half-odd
fermionic partition (b_1 > ... > b_m).

The whole theory is parametrized by one symbol t: with rho = (t - 1/t)/2 the
central charge is c = 3/2 - 3 (t - 1/t)^2 and every derived weight is a
rational function of t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .kernel import KernelError, Poly, RatFun, is_zero
from .linalg import det, nullspace, poly_interpolate
from .symfunc import partitions


class ParityError(KernelError):
    pass


class KernelDimensionError(KernelError):
    pass


class FactorMismatch(KernelError):
    pass


HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# superpartitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SuperPartition:
    """A pair (bosonic partition, strict half-odd fermionic partition)."""

    bosonic: tuple
    fermionic: tuple

    def __post_init__(self):
        b = self.bosonic
        f = self.fermionic
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)) or any(p < 1 for p in b):
            raise ValueError("bosonic part must be a partition: %r" % (b,))
        if any(f[i] <= f[i + 1] for i in range(len(f) - 1)):
            raise ValueError("fermionic parts must strictly decrease: %r" % (f,))
        if any((2 * p) % 2 != 1 or p < 0 for p in f):
            raise ValueError("fermionic parts must be positive half-odd: %r" % (f,))

    def size(self):
        return sum(self.bosonic, Fraction(0)) + sum(self.fermionic, Fraction(0))

    def fermion_count(self):
        return len(self.fermionic)

    def sort_key(self):
        # reverse-lexicographic with larger parts first; the trailing
        # sentinel makes a proper prefix sort before its extensions' absence
        # (so L_{-1} G_{-1/2} precedes G_{-3/2} at level 3/2)
        return (self.size(),
                tuple(-p for p in self.bosonic) + (1,),
                tuple(-p for p in self.fermionic) + (1,))


def _fermionic_sets(level):
    """Strictly decreasing half-odd tuples with sum <= level and integer
    complement."""
    out = []

    def rec(smallest, acc, total):
        if (level - total).denominator == 1:
            out.append(tuple(sorted(acc, reverse=True)))
        k = smallest
        while total + k <= level:
            rec(k + 1, acc + [k], total + k)
            k += 1

    rec(HALF, [], Fraction(0))
    return out


@lru_cache(maxsize=None)
def superpartitions(level2):
    """All superpartitions of size level2/2, canonically ordered.

    The argument is twice the level so the cache key stays an integer.
    """
    level = Fraction(level2, 2)
    if level < 0:
        return ()
    out = []
    for ferm in _fermionic_sets(level):
        rest = level - sum(ferm, Fraction(0))
        for lam in partitions(int(rest)):
            out.append(SuperPartition(bosonic=lam, fermionic=ferm))
    out.sort(key=SuperPartition.sort_key)
    return tuple(out)


def pns(level):
    """Number of superpartitions of the given (half-integer) level."""
    level = Fraction(level)
    if (2 * level).denominator != 1:
        raise ValueError("level must be a half-integer")
    return len(superpartitions(int(2 * level)))


def pns_generating_function(max_level2):
    """Coefficients of prod_k (1 + x^k) / prod_m (1 - x^m), k half-odd,
    m a positive integer, as a list indexed by twice the exponent."""
    n = max_level2
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = Fraction(1)

    def mul_series(a, b):
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if i + j > n:
                    break
                out[i + j] += x * y
        return out

    for k2 in range(1, n + 1, 2):         # fermionic factors (1 + y^{2k}), y = x^{1/2}
        factor = [Fraction(0)] * (n + 1)
        factor[0] = Fraction(1)
        if k2 <= n:
            factor[k2] = Fraction(1)
        coeffs = mul_series(coeffs, factor)
    for m2 in range(2, n + 1, 2):         # bosonic factors 1/(1 - y^{2m})
        geo = [Fraction(0)] * (n + 1)
        for j in range(0, n + 1, m2):
            geo[j] = Fraction(1)
        coeffs = mul_series(coeffs, geo)
    return coeffs


# ---------------------------------------------------------------------------
# highest-weight data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HighestWeightData:
    t: object
    rho: object
    c: object
    t_plus: object
    t_minus: object
    r: int
    s: int
    h: object
    alpha_plus: object
    alpha_minus: object


def _as_t(t):
    if t == "sym" or t is None:
        return RatFun.variable("t")
    if isinstance(t, (int, Fraction)):
        return Fraction(t)
    return t


def hw_data(t, r, s):
    """All derived weights of the (r, s) module as exact functions of t."""
    if r < 1 or s < 1 or (r - s) % 2 != 0:
        raise ParityError("need r, s >= 1 with r = s (mod 2); got (%s, %s)" % (r, s))
    tv = _as_t(t)
    if is_zero(tv):
        raise ValueError("t must be nonzero")
    one = tv * 0 + 1
    t_inv = one / tv
    rho = (tv - t_inv) * HALF
    c = one * Fraction(3, 2) - 12 * rho * rho
    t_minus = -t_inv
    h = (r * tv + s * t_minus) ** 2 * Fraction(1, 8) - rho * rho * HALF
    alpha_plus = tv * Fraction(r + 1, 2) + t_minus * Fraction(s + 1, 2)
    alpha_minus = t_minus * Fraction(r + 1, 2) + tv * Fraction(s + 1, 2)
    return HighestWeightData(t=tv, rho=rho, c=c, t_plus=tv, t_minus=t_minus,
                             r=r, s=s, h=h, alpha_plus=alpha_plus,
                             alpha_minus=alpha_minus)


# ---------------------------------------------------------------------------
# normal ordering
# ---------------------------------------------------------------------------

def _gen_key(gen):
    """Total order used for PBW straightening: negative modes first (L block
    before G block, magnitudes ascending), then zero modes, then positive."""
    kind, idx = gen[0], gen[1] if len(gen) > 1 else None
    if kind == "C":
        return (1, 0, 0)
    cls = 0 if idx < 0 else (1 if idx == 0 else 2)
    block = 0 if kind == "L" else 1
    return (cls, block, abs(idx))


class _OrderingContext:
    def __init__(self, h, c, one):
        self.h = h
        self.c = c
        self.one = one
        self.cache = {}


def _vacuum(gen, ctx):
    kind = gen[0]
    if kind == "C":
        return {(): ctx.c}
    idx = gen[1]
    if idx > 0:
        return {}
    if idx == 0:
        return {(): ctx.h}
    return {(gen,): ctx.one}


def _swap(x, y, ctx):
    """x y = sign * y x + brackets; brackets is a list of (scalar, gen or None)."""
    kx, ky = x[0], y[0]
    if kx == "L" and ky == "L":
        m, n = x[1], y[1]
        br = []
        if m != n:
            br.append((Fraction(m - n) * ctx.one, ("L", m + n)))
        if m + n == 0:
            br.append((Fraction(m ** 3 - m, 12) * ctx.c, None))
        return 1, br
    if kx == "L" and ky == "G":
        n, k = x[1], y[1]
        return 1, [((Fraction(n) * HALF - k) * ctx.one, ("G", n + k))]
    if kx == "G" and ky == "L":
        k, n = x[1], y[1]
        return 1, [((k - Fraction(n) * HALF) * ctx.one, ("G", n + k))]
    # G G: anticommutator
    k, l = x[1], y[1]
    br = [(2 * ctx.one, ("L", int(k + l)))] if k + l != 0 else [(2 * ctx.one, ("L", 0))]
    if k + l == 0:
        br.append((Fraction(1, 3) * (k * k - Fraction(1, 4)) * ctx.c, None))
    return -1, br


def _push(gen, word, ctx):
    """Normal-order gen * (word |h, c>) into canonical monomials."""
    key = (gen, word)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    if gen[0] == "C":
        out = {word: ctx.c}
        ctx.cache[key] = out
        return out
    if not word:
        out = _vacuum(gen, ctx)
        ctx.cache[key] = out
        return out
    y = word[0]
    rest = word[1:]
    if gen[0] == "G" and y[0] == "G" and gen[1] == y[1]:
        # G_k G_k = L_{2k}  (the central term needs k + k = 0, impossible)
        out = _push(("L", int(2 * gen[1])), rest, ctx)
        ctx.cache[key] = out
        return out
    if _gen_key(gen) <= _gen_key(y) and _gen_key(gen)[0] == 0:
        out = {(gen,) + word: ctx.one}
        ctx.cache[key] = out
        return out
    sign, brackets = _swap(gen, y, ctx)
    out = {}

    def add(w, coeff):
        if w in out:
            out[w] = out[w] + coeff
        else:
            out[w] = coeff

    for w1, c1 in _push(gen, rest, ctx).items():
        c1s = c1 if sign == 1 else -c1
        for w2, c2 in _push(y, w1, ctx).items():
            add(w2, c1s * c2)
    for coeff, g in brackets:
        if g is None:
            add(rest, coeff)
        else:
            for w2, c2 in _push(g, rest, ctx).items():
                add(w2, coeff * c2)
    out = {w: c for w, c in out.items() if not is_zero(c)}
    ctx.cache[key] = out
    return out


def _word_of(sp):
    word = tuple(("L", -a) for a in reversed(sp.bosonic))
    word += tuple(("G", -b) for b in reversed(sp.fermionic))
    return word


def _sp_of(word):
    bos = tuple(sorted((-g[1] for g in word if g[0] == "L"), reverse=True))
    ferm = tuple(sorted((-g[1] for g in word if g[0] == "G"), reverse=True))
    return SuperPartition(bosonic=bos, fermionic=ferm)


# ---------------------------------------------------------------------------
# Verma vectors and generator action
# ---------------------------------------------------------------------------

@dataclass
class VermaVector:
    level: Fraction
    terms: dict                    # SuperPartition -> scalar
    weight: HighestWeightData | None
    h: object
    c: object

    def is_zero(self):
        return not self.terms

    def scale(self, x):
        return VermaVector(self.level, {k: v * x for k, v in self.terms.items()},
                           self.weight, self.h, self.c)

    def __add__(self, other):
        if other.level != self.level:
            raise KernelError("level mismatch in Verma addition")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        out = {k: v for k, v in out.items() if not is_zero(v)}
        return VermaVector(self.level, out, self.weight, self.h, self.c)

    def __sub__(self, other):
        return self + other.scale(-1)


def highest_weight_vector(hw=None, h=None, c=None, one=Fraction(1)):
    if hw is not None:
        h, c = hw.h, hw.c
        one = hw.t * 0 + 1
    return VermaVector(Fraction(0), {SuperPartition((), ()): one}, hw, h, c)


def monomial_vector(sp, hw=None, h=None, c=None, one=Fraction(1)):
    if hw is not None:
        h, c = hw.h, hw.c
        one = hw.t * 0 + 1
    return VermaVector(sp.size(), {sp: one}, hw, h, c)


def _ctx_for(v):
    one = v.h * 0 + 1
    return _OrderingContext(v.h, v.c, one)


def act(gen, v):
    """Apply a single generator, re-expressing the result in the PBW basis."""
    kind = gen[0]
    if kind == "G":
        gen = ("G", Fraction(gen[1]))
        shift = -gen[1]
    elif kind == "L":
        gen = ("L", int(gen[1]))
        shift = Fraction(-gen[1])
    else:
        gen = ("C",)
        shift = Fraction(0)
    ctx = _ctx_for(v)
    out = {}
    for sp, coeff in v.terms.items():
        for word, scal in _push(gen, _word_of(sp), ctx).items():
            key = _sp_of(word)
            term = coeff * scal
            out[key] = out[key] + term if key in out else term
    out = {k: x for k, x in out.items() if not is_zero(x)}
    return VermaVector(v.level + shift, out, v.weight, v.h, v.c)


def apply_word(gens, v):
    """Apply a product of generators, rightmost factor first."""
    for gen in reversed(list(gens)):
        v = act(gen, v)
    return v


# ---------------------------------------------------------------------------
# Gram matrices and the Kac determinant
# ---------------------------------------------------------------------------

def _dual_word(sp):
    """Adjoint of the basis monomial: G_{b_1} ... G_{b_m} L_{a_1} ... L_{a_l}."""
    word = tuple(("G", b) for b in sp.fermionic)
    word += tuple(("L", a) for a in sp.bosonic)
    return word


def gram_matrix(level, h, c, one=Fraction(1)):
    """Contravariant form on the level subspace, rows and columns in the
    canonical superpartition order.  h may be symbolic (a Poly in 'h') or a
    scalar; c likewise.
    """
    level = Fraction(level)
    basis = superpartitions(int(2 * level))
    vac = SuperPartition((), ())
    mat = []
    for row_sp in basis:
        row = []
        for col_sp in basis:
            v = monomial_vector(col_sp, h=h, c=c, one=one)
            w = apply_word(_dual_word(row_sp), v)
            row.append(w.terms.get(vac, one * 0))
        mat.append(row)
    return mat


def gram_matrix_symbolic_h(level, t="sym"):
    """Gram matrix with h a polynomial variable and c = c(t)."""
    tv = _as_t(t)
    one_t = tv * 0 + 1
    rho = (tv - 1 / tv) * HALF
    c_val = one_t * Fraction(3, 2) - 12 * rho * rho
    h_poly = Poly("h", [one_t * 0, one_t])
    c_poly = Poly.const("h", c_val)
    one_poly = Poly.const("h", one_t)
    return gram_matrix(level, h_poly, c_poly, one_poly)


def kac_factor_exponents(level):
    """The predicted factor list: {(r, s): multiplicity} with multiplicity
    pns(level - rs/2), over r = s (mod 2), rs <= 2*level."""
    level = Fraction(level)
    out = {}
    bound = int(2 * level)
    for r in range(1, bound + 1):
        for s in range(1, bound + 1):
            if r * s <= bound and (r - s) % 2 == 0:
                mult = pns(level - Fraction(r * s, 2))
                if mult:
                    out[(r, s)] = mult
    return out


def kac_det_check(level, t="sym"):
    """Interpolate det K_level as a polynomial in h, divide out the predicted
    singular factors, and require a nonzero h-independent quotient.

    Returns a report with the quotient constant; raises FactorMismatch when
    a factor fails to divide or the quotient retains h-dependence.
    """
    level = Fraction(level)
    tv = _as_t(t)
    one = tv * 0 + 1
    rho = (tv - 1 / tv) * HALF
    c_val = one * Fraction(3, 2) - 12 * rho * rho
    factors = kac_factor_exponents(level)
    degree = sum(factors.values())
    points = []
    for i in range(degree + 2):
        hval = one * Fraction(i)
        mat = gram_matrix(level, hval, c_val, one)
        points.append((Fraction(i), det(mat)))
    poly = poly_interpolate(points, degree, var="h")
    if poly.degree() != degree:
        raise FactorMismatch("determinant degree %s, expected %s"
                             % (poly.degree(), degree))
    quotient = poly
    for (r, s), mult in sorted(factors.items()):
        hrs = hw_data(tv, r, s).h
        lin = Poly("h", [-hrs, one])
        for _ in range(mult):
            q, rem = quotient.divmod(lin)
            if not rem.is_zero():
                raise FactorMismatch(
                    "factor (h - h_{%d,%d}) does not divide the determinant" % (r, s))
            quotient = q
    if quotient.degree() > 0:
        raise FactorMismatch("quotient still depends on h: %r" % quotient)
    const = quotient.coeffs[0] if quotient.coeffs else one * 0
    if is_zero(const):
        raise FactorMismatch("determinant vanished identically")
    return {
        "level": str(level),
        "factors": {"%d,%d" % k: v for k, v in sorted(factors.items())},
        "degree": degree,
        "constant": const,
    }


# ---------------------------------------------------------------------------
# singular vectors
# ---------------------------------------------------------------------------

def singular_vector(r, s, t="sym"):
    """The level rs/2 vector annihilated by G_{1/2} and G_{3/2} (hence by the
    whole positive half), normalized so the first canonical coordinate is 1.

    Raises KernelDimensionError unless the kernel is exactly one-dimensional.
    """
    hw = hw_data(t, r, s)
    one = hw.t * 0 + 1
    level = Fraction(r * s, 2)
    basis = superpartitions(int(2 * level))
    rows = []
    for k in (HALF, Fraction(3, 2)):
        target_level = level - k
        if target_level < 0:
            continue
        target_basis = superpartitions(int(2 * target_level))
        index = {sp: i for i, sp in enumerate(target_basis)}
        cols = []
        for sp in basis:
            v = act(("G", k), monomial_vector(sp, hw=hw))
            col = [one * 0] * len(target_basis)
            for out_sp, coeff in v.terms.items():
                col[index[out_sp]] = coeff
            cols.append(col)
        for i in range(len(target_basis)):
            rows.append([cols[j][i] for j in range(len(basis))])
    kernel = nullspace(rows)
    if len(kernel) != 1:
        raise KernelDimensionError(
            "singular space at (r, s) = (%d, %d) has dimension %d"
            % (r, s, len(kernel)))
    vec = kernel[0]
    pivot = next(x for x in vec if not is_zero(x))
    vec = [x / pivot for x in vec]
    terms = {sp: x for sp, x in zip(basis, vec) if not is_zero(x)}
    return VermaVector(level, terms, hw, hw.h, hw.c)
