"""Partitions, dominance order, and symmetric functions in the power-sum,
monomial and elementary bases with exact basis transitions.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  The canonical ordering used for
matrices and serialization is by degree, then reverse-lexicographic
(largest first within a degree), which refines dominance.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .kernel import KernelError, PoleError, is_zero
from .linalg import solve


def check_partition(lam):
    lam = tuple(int(p) for p in lam)
    if any(p < 1 for p in lam):
        raise ValueError("partition parts must be positive: %r" % (lam,))
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be weakly decreasing: %r" % (lam,))
    return lam


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n, reverse-lexicographically (largest part first)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def num_partitions(n):
    return len(partitions(n))


def multiplicities(lam):
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return mult


def z_lambda(lam):
    """The symmetrizer order prod_i i^{m_i} m_i! with m_i the multiplicity of i."""
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part ** m
        for j in range(1, m + 1):
            z *= j
    return Fraction(z)


def dominance_leq(mu, lam):
    """True iff mu <= lam in dominance (partial sums); False across degrees."""
    if sum(mu) != sum(lam):
        return False
    acc_mu = 0
    acc_lam = 0
    for k in range(max(len(mu), len(lam))):
        acc_mu += mu[k] if k < len(mu) else 0
        acc_lam += lam[k] if k < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def merge_partitions(a, b):
    return tuple(sorted(a + b, reverse=True))


BASES = ("p", "m", "e")


class SymFunc:
    """A symmetric function: basis tag plus a sparse partition -> coefficient map.

    Zero coefficients are never stored.  Coefficients may live in any kernel
    field; basic arithmetic and basis conversion are coefficient-agnostic.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        for lam, c in terms.items():
            if not is_zero(c):
                clean[tuple(lam)] = c
        self.basis = basis
        self.terms = clean

    @classmethod
    def zero(cls, basis="p"):
        return cls(basis, {})

    @classmethod
    def one(cls, basis="p", one=Fraction(1)):
        return cls(basis, {(): one})

    @classmethod
    def gen(cls, basis, lam, coeff=Fraction(1)):
        return cls(basis, {check_partition(lam): coeff})

    def is_zero(self):
        return not self.terms

    def coeff(self, lam):
        return self.terms.get(tuple(lam), Fraction(0))

    def homogeneous_degree(self):
        degs = {sum(lam) for lam in self.terms}
        if len(degs) > 1:
            raise KernelError("not homogeneous: degrees %s" % sorted(degs))
        return degs.pop() if degs else None

    def degree_component(self, d):
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items()
                                    if sum(lam) == d})

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {lam: fn(c) for lam, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            other = convert(other, self.basis)
        keys = set(self.terms) | set(other.terms)
        for k in keys:
            a = self.terms.get(k, 0)
            b = other.terms.get(k, 0)
            if not is_zero(a - b):
                return False
        return True

    def __hash__(self):
        raise TypeError("SymFunc is unhashable")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.basis, out)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return SymFunc(self.basis, {lam: v * c for lam, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=canonical_key):
            bits.append("%r*%s%s" % (self.terms[lam], self.basis, list(lam)))
        return " + ".join(bits)


def canonical_key(lam):
    """Sort key: by degree, then reverse-lexicographic (larger parts first)."""
    return (sum(lam), tuple(-p for p in lam))


def sorted_partitions(terms):
    return sorted(terms, key=canonical_key)


# ---------------------------------------------------------------------------
# basis transitions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _p_to_m_row(lam):
    """m-expansion of p_lam as a dict partition -> Fraction."""
    out = {(): Fraction(1)}
    for r in lam:
        nxt = {}
        for mu, c in out.items():
            # new part r
            nu = merge_partitions(mu, (r,))
            coeff = Fraction(multiplicities(nu)[r])
            nxt[nu] = nxt.get(nu, Fraction(0)) + c * coeff
            # add r to one existing distinct part value k
            for k in set(mu):
                nu2 = list(mu)
                nu2.remove(k)
                nu2 = merge_partitions(tuple(nu2), (k + r,))
                coeff2 = Fraction(multiplicities(nu2)[k + r])
                nxt[nu2] = nxt.get(nu2, Fraction(0)) + c * coeff2
        out = {mu: c for mu, c in nxt.items() if c != 0}
    return out


_M_TO_P_CACHE = {}


def _m_to_p_matrix(n):
    """Per-degree transition: columns m_mu expressed in the p basis.

    Obtained by inverting the p -> m transition degree by degree.  The cache
    is a write-once per-degree map; it can be persisted through
    save_transition_cache / load_transition_cache.
    """
    if n in _M_TO_P_CACHE:
        return _M_TO_P_CACHE[n]
    parts = partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    k = len(parts)
    p_to_m = [[Fraction(0)] * k for _ in range(k)]  # rows m, cols p
    for j, lam in enumerate(parts):
        for mu, c in _p_to_m_row(lam).items():
            p_to_m[index[mu]][j] = c
    cols = []
    for j in range(k):
        rhs = [Fraction(1) if i == j else Fraction(0) for i in range(k)]
        cols.append(solve(p_to_m, rhs))
    _M_TO_P_CACHE[n] = (parts, cols)
    return parts, cols


def save_transition_cache(path):
    """Persist the computed monomial -> power-sum transition matrices."""
    import json
    payload = {
        str(n): [[str(x) for x in col] for col in cols]
        for n, (parts, cols) in _M_TO_P_CACHE.items()
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, sort_keys=True)


def load_transition_cache(path):
    import json
    import os
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        payload = json.load(fh)
    for key, cols in payload.items():
        n = int(key)
        parts = partitions(n)
        _M_TO_P_CACHE[n] = (parts, [[Fraction(x) for x in col] for col in cols])
    return len(payload)


@lru_cache(maxsize=None)
def _e_to_p_single(n):
    """e_n in the p basis via Newton's identities: n e_n = sum (-1)^{k-1} e_{n-k} p_k."""
    if n == 0:
        return {(): Fraction(1)}
    acc = {}
    for k in range(1, n + 1):
        rest = _e_to_p_single(n - k)
        sign = Fraction((-1) ** (k - 1), n)
        for mu, c in rest.items():
            nu = merge_partitions(mu, (k,))
            acc[nu] = acc.get(nu, Fraction(0)) + sign * c
    return {mu: c for mu, c in acc.items() if c != 0}


@lru_cache(maxsize=None)
def _p_to_e_single(n):
    """p_n in the e basis, by inverting Newton's identities recursively."""
    if n == 0:
        return {(): Fraction(1)}
    # p_n = (-1)^{n-1} n e_n - sum_{k=1}^{n-1} (-1)^{k} e_k p_{n-k} ... derive:
    # n e_n = sum_{k=1}^{n} (-1)^{k-1} e_{n-k} p_k  =>
    # p_n = (-1)^{n-1} ( n e_n - sum_{k=1}^{n-1} (-1)^{k-1} e_{n-k} p_k )
    acc = {(n,): Fraction((-1) ** (n - 1) * n)}
    for k in range(1, n):
        pk = _p_to_e_single(k)
        sign = Fraction((-1) ** (n - 1) * (-1) ** (k - 1))
        for mu, c in pk.items():
            nu = merge_partitions(mu, (n - k,))
            acc[nu] = acc.get(nu, Fraction(0)) - sign * c
    return {mu: c for mu, c in acc.items() if c != 0}


def _expand_product(factors_of_dicts):
    """Product of basis-free expansions given as partition->coeff dicts,
    multiplying by multiset concatenation (valid in the p and e bases)."""
    out = {(): Fraction(1)}
    for d in factors_of_dicts:
        nxt = {}
        for mu, c in out.items():
            for nu, b in d.items():
                key = merge_partitions(mu, nu)
                nxt[key] = nxt.get(key, Fraction(0)) + c * b
        out = nxt
    return out


@lru_cache(maxsize=None)
def _e_lam_to_p(lam):
    return _expand_product([_e_to_p_single(r) for r in lam])


@lru_cache(maxsize=None)
def _p_lam_to_e(lam):
    return _expand_product([_p_to_e_single(r) for r in lam])


def to_p(f):
    if f.basis == "p":
        return f
    out = {}
    if f.basis == "e":
        for lam, c in f.terms.items():
            for mu, r in _e_lam_to_p(lam).items():
                out[mu] = out.get(mu, 0) + c * r
        return SymFunc("p", out)
    # m -> p, degree by degree
    for lam, c in f.terms.items():
        n = sum(lam)
        parts, cols = _m_to_p_matrix(n)
        j = parts.index(lam)
        for i, mu in enumerate(parts):
            r = cols[j][i]
            if r != 0:
                out[mu] = out.get(mu, 0) + c * r
    return SymFunc("p", out)


def from_p(f, target):
    if target == "p":
        return f
    out = {}
    if target == "m":
        for lam, c in f.terms.items():
            for mu, r in _p_to_m_row(lam).items():
                out[mu] = out.get(mu, 0) + c * r
        return SymFunc("m", out)
    if target == "e":
        for lam, c in f.terms.items():
            for mu, r in _p_lam_to_e(lam).items():
                out[mu] = out.get(mu, 0) + c * r
        return SymFunc("e", out)
    raise ValueError("unknown basis %r" % (target,))


def convert(f, target):
    if f.basis == target:
        return f
    return from_p(to_p(f), target)


def multiply(f, g):
    """Product in the ring of symmetric functions.

    Both factors are routed through the power-sum basis, where the product
    is concatenation of partition multisets; the result is returned in the
    common basis of the inputs (or p when they differ).
    """
    target = f.basis if f.basis == g.basis else "p"
    fp, gp = to_p(f), to_p(g)
    out = {}
    for mu, a in fp.terms.items():
        for nu, b in gp.terms.items():
            key = merge_partitions(mu, nu)
            out[key] = out[key] + a * b if key in out else a * b
    return convert(SymFunc("p", out), target)


def p_gen(lam, coeff=Fraction(1)):
    return SymFunc.gen("p", lam, coeff)


def m_gen(lam, coeff=Fraction(1)):
    return SymFunc.gen("m", lam, coeff)


def e_gen(lam, coeff=Fraction(1)):
    return SymFunc.gen("e", lam, coeff)


def inner_qt(f, g, q, t):
    """Macdonald (q,t) inner product, bilinear with
    <p_lam, p_mu> = delta z_lam prod (1-q^{lam_i})/(1-t^{lam_i})."""
    fp, gp = to_p(f), to_p(g)
    acc = None
    for lam, a in fp.terms.items():
        b = gp.terms.get(lam)
        if b is None:
            continue
        w = a * b * z_lambda(lam)
        for part in lam:
            qn = q ** part if not isinstance(q, (int, Fraction)) else Fraction(q) ** part
            tn = t ** part if not isinstance(t, (int, Fraction)) else Fraction(t) ** part
            den = 1 - tn
            if is_zero(den):
                raise PoleError("inner product pole: 1 - t^%d = 0" % part)
            w = w * (1 - qn) / den
        acc = w if acc is None else acc + w
    if acc is None:
        zero = q * 0 if not isinstance(q, (int, Fraction)) else Fraction(0)
        return zero
    return acc


def symfunc_to_json(f):
    from .kernel import scalar_to_json
    return {
        "basis": f.basis,
        "terms": [
            {"partition": list(lam), "coeff": scalar_to_json(f.terms[lam])}
            for lam in sorted_partitions(f.terms)
        ],
    }
