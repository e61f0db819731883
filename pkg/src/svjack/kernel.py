"""Exact scalar arithmetic: rationals, univariate rational functions,
the quadratic extension by sqrt(2), and truncated hbar-jets.

All scalar types in this module are immutable and exact.  Plain Python
``int`` and ``fractions.Fraction`` serve as the rational layer; ``RatFun``
adds one formal variable (t, gamma, q or h), ``Sqrt2Ext`` adjoins sqrt(2)
to any base field, and ``Jet`` truncates power series in a formal
parameter hbar.  Mixed arithmetic coerces upward (int -> Fraction ->
RatFun/Sqrt2Ext/Jet); genuinely incompatible operands raise
``MixedFieldError``.
"""

from __future__ import annotations

from fractions import Fraction


class KernelError(Exception):
    pass


class DivisionByZero(KernelError):
    pass


class MixedFieldError(KernelError):
    pass


class PoleError(KernelError):
    pass


class PrecisionError(KernelError):
    """A jet coefficient beyond the tracked truncation order was requested."""


def rat(num, den=1):
    return Fraction(num, den)


def is_rational(x):
    return isinstance(x, (int, Fraction))


def is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise MixedFieldError("expected a rational, got %r" % (x,))


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and is_zero(coeffs[n - 1]):
        n -= 1
    return list(coeffs[:n])


class Poly:
    """Dense univariate polynomial over an exact coefficient field.

    ``coeffs[i]`` is the coefficient of var**i; the zero polynomial has an
    empty coefficient list.  Coefficients may be Fractions or any scalar of
    this module, as long as all coefficients of one polynomial live in the
    same field.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        self.var = var
        self.coeffs = tuple(_trim(list(coeffs)))

    @classmethod
    def const(cls, var, c):
        return cls(var, [c])

    @classmethod
    def x(cls, var):
        return cls(var, [Fraction(0), Fraction(1)])

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise MixedFieldError(
                    "polynomials in %r and %r cannot be combined" % (self.var, other.var))
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.var, Fraction(other))
        return None

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(o.coeffs):
            a[i] = a[i] + c
        return Poly(self.var, a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly(self.var, [])
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.var, out)

    __rmul__ = __mul__

    def scale(self, c):
        return Poly(self.var, [a * c for a in self.coeffs])

    def divmod(self, other):
        o = self._check(other)
        if o is None or o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly(self.var, []), self
        quot = [Fraction(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for k in range(dq, -1, -1):
            top = rem[k + len(o.coeffs) - 1]
            if is_zero(top):
                continue
            q = top / lead
            quot[k] = q
            for i, c in enumerate(o.coeffs):
                rem[k + i] = rem[k + i] - q * c
        return Poly(self.var, quot), Poly(self.var, rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise KernelError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly(self.var, [c / lead for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if is_zero(c):
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*%s" % (c, self.var))
            else:
                parts.append("%s*%s^%d" % (c, self.var, i))
        return " + ".join(parts)


def poly_gcd(a, b):
    """Monic gcd of two polynomials with Fraction coefficients."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# univariate rational functions
# ---------------------------------------------------------------------------

class RatFun:
    """Rational function numer/denom in one variable over Q.

    Canonical form: numerator and denominator share no common factor and the
    denominator is monic.  Zero is 0/1.
    """

    __slots__ = ("var", "numer", "denom")

    def __init__(self, var, numer, denom=None, _canonical=False):
        if isinstance(numer, (int, Fraction)):
            numer = Poly.const(var, Fraction(numer))
        if denom is None:
            denom = Poly.const(var, Fraction(1))
        elif isinstance(denom, (int, Fraction)):
            denom = Poly.const(var, Fraction(denom))
        if denom.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _canonical:
            g = poly_gcd(numer, denom)
            if not g.is_zero() and g.degree() > 0:
                numer = numer.exact_div(g)
                denom = denom.exact_div(g)
            lead = denom.coeffs[-1]
            if lead != 1:
                numer = numer.scale(Fraction(1) / lead)
                denom = denom.scale(Fraction(1) / lead)
        self.var = var
        self.numer = numer
        self.denom = denom

    @classmethod
    def variable(cls, var):
        return cls(var, Poly.x(var), None, _canonical=True)

    @classmethod
    def const(cls, var, c):
        return cls(var, Poly.const(var, Fraction(c)), None, _canonical=True)

    def is_zero(self):
        return self.numer.is_zero()

    def is_constant(self):
        return self.numer.degree() <= 0 and self.denom.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise KernelError("not a constant rational function")
        if self.numer.is_zero():
            return Fraction(0)
        return self.numer.coeffs[0] / self.denom.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, RatFun):
            if other.var != self.var:
                raise MixedFieldError(
                    "rational functions in %r and %r cannot be combined"
                    % (self.var, other.var))
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.const(self.var, other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.numer == o.numer and self.denom == o.denom

    def __hash__(self):
        return hash((self.var, self.numer.coeffs, self.denom.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.var, self.numer * o.denom + o.numer * self.denom,
                      self.denom * o.denom)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(self.var, -self.numer, self.denom, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.var, self.numer * o.numer, self.denom * o.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFun(self.var, self.numer * o.denom, self.denom * o.numer)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return RatFun.const(self.var, 1) / self ** (-n)
        out = RatFun.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        den = self.denom(x)
        if is_zero(den):
            raise PoleError("evaluation at a pole of the denominator")
        return self.numer(x) / den

    def __repr__(self):
        if self.denom.degree() == 0 and self.denom.coeffs[0] == 1:
            return "(%r)" % self.numer
        return "(%r)/(%r)" % (self.numer, self.denom)


# ---------------------------------------------------------------------------
# quadratic extension by sqrt(2)
# ---------------------------------------------------------------------------

class Sqrt2Ext:
    """a + b*sqrt(2) over a base field (rationals or rational functions)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    @classmethod
    def sqrt2(cls, one=Fraction(1)):
        return cls(one * 0, one)

    def is_zero(self):
        return is_zero(self.a) and is_zero(self.b)

    def base_part(self):
        """The sqrt(2)-free component; raises unless the sqrt(2) part vanishes."""
        if not is_zero(self.b):
            raise KernelError("element has a nonzero sqrt(2) component")
        return self.a

    def _coerce(self, other):
        if isinstance(other, Sqrt2Ext):
            return other
        if isinstance(other, (int, Fraction, RatFun, Poly)):
            return Sqrt2Ext(self.a * 0 + other, self.b * 0)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return is_zero(self.a - o.a) and is_zero(self.b - o.b)

    def __hash__(self):
        return hash(("sqrt2", self.a, self.b))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Sqrt2Ext(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2Ext(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Sqrt2Ext(self.a * o.a + 2 * (self.b * o.b),
                        self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return Sqrt2Ext(self.a * 0 + 1, self.a * 0) / self ** (-n)
        out = Sqrt2Ext(self.a * 0 + 1, self.a * 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def norm(self):
        return self.a * self.a - 2 * (self.b * self.b)

    def conj(self):
        return Sqrt2Ext(self.a, -self.b)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by zero in Sqrt2Ext")
        n = o.norm()
        num = self * o.conj()
        return Sqrt2Ext(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __repr__(self):
        return "(%r + %r*sqrt2)" % (self.a, self.b)


# ---------------------------------------------------------------------------
# truncated jets in hbar
# ---------------------------------------------------------------------------

class Jet:
    """Truncated power series c0 + c1*hbar + ... + cK*hbar^K.

    ``order`` is the truncation order K; coefficients beyond it are unknown,
    not zero.  Arithmetic propagates the minimum order of the operands, and
    division by a jet of positive valuation shifts both series, losing that
    many orders of precision.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise KernelError("jet order must be >= 0")
        if len(coeffs) < order + 1:
            pad = coeffs[0] * 0 if coeffs else Fraction(0)
            coeffs = coeffs + [pad] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs[: order + 1])
        self.order = order

    @classmethod
    def const(cls, c, order):
        zero = c * 0
        return cls([c] + [zero] * order, order)

    @classmethod
    def hbar(cls, order, one=Fraction(1)):
        zero = one * 0
        return cls([zero, one] + [zero] * (order - 1), order)

    @classmethod
    def exp_linear(cls, c, order):
        """exp(c*hbar) as a jet: coefficients c^k / k!."""
        out = [c * 0 + 1]
        fact = 1
        power = c * 0 + 1
        for k in range(1, order + 1):
            fact *= k
            power = power * c
            out.append(power * Fraction(1, fact))
        return cls(out, order)

    def is_zero(self):
        return all(is_zero(c) for c in self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if not is_zero(c):
                return i
        return None  # zero jet

    def coeff(self, k):
        if k > self.order:
            raise PrecisionError("jet truncated at order %d, coefficient %d requested"
                                 % (self.order, k))
        return self.coeffs[k]

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, Fraction, RatFun)):
            zero = self.coeffs[0] * 0
            return Jet([zero + other] + [zero] * self.order, self.order)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = min(self.order, o.order)
        return all(is_zero(self.coeffs[i] - o.coeffs[i]) for i in range(k + 1))

    def __hash__(self):
        return hash(("jet", self.order, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = min(self.order, o.order)
        return Jet([self.coeffs[i] + o.coeffs[i] for i in range(k + 1)], k)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = min(self.order, o.order)
        zero = self.coeffs[0] * 0
        out = [zero] * (k + 1)
        for i in range(k + 1):
            a = self.coeffs[i]
            if is_zero(a):
                continue
            for j in range(k + 1 - i):
                out[i + j] = out[i + j] + a * o.coeffs[j]
        return Jet(out, k)

    __rmul__ = __mul__

    def __pow__(self, n):
        one = self.coeffs[0] * 0 + 1
        if n < 0:
            return Jet.const(one, self.order) / self ** (-n)
        out = Jet.const(one, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if is_zero(self.coeffs[0]):
            raise DivisionByZero("jet inverse requires a nonzero constant term")
        c0 = self.coeffs[0]
        zero = c0 * 0
        inv0 = (zero + 1) / c0
        out = [inv0] + [zero] * self.order
        for k in range(1, self.order + 1):
            acc = zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out[k] = -inv0 * acc
        return Jet(out, self.order)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by a zero jet")
        v = o.valuation()
        if v == 0:
            return self * o.inverse()
        # positive valuation: the numerator must vanish to the same order
        k = min(self.order, o.order)
        for i in range(min(v, k + 1)):
            if not is_zero(self.coeffs[i]):
                raise DivisionByZero("jet division with insufficient numerator valuation")
        if k - v < 0:
            raise PrecisionError("jet division exhausts the truncation order")
        num = Jet(list(self.coeffs[v: k + 1]), k - v)
        den = Jet(list(o.coeffs[v: k + 1]), k - v)
        return num * den.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def exp(self):
        """exp of a jet with zero constant term."""
        if not is_zero(self.coeffs[0]):
            raise KernelError("jet exp requires zero constant term")
        one = self.coeffs[0] * 0 + 1
        out = Jet.const(one, self.order)
        term = Jet.const(one, self.order)
        for k in range(1, self.order + 1):
            term = term * self * Fraction(1, k)
            out = out + term
        return out

    def log1p(self):
        """log(1 + self) for a jet with zero constant term."""
        if not is_zero(self.coeffs[0]):
            raise KernelError("jet log1p requires zero constant term")
        zero = self.coeffs[0] * 0
        out = Jet.const(zero, self.order)
        term = Jet.const(zero * 0 + 1, self.order)
        for k in range(1, self.order + 1):
            term = term * self
            out = out + term * Fraction((-1) ** (k + 1), k)
        return out

    def log(self):
        """log of a jet with constant term 1."""
        one = self.coeffs[0]
        if not is_zero(one - 1):
            raise KernelError("jet log requires constant term 1")
        return (self - 1).log1p()

    def sqrt(self):
        """Square root of a jet with constant term 1."""
        half = Fraction(1, 2)
        return (self.log() * half).exp()

    def truncate(self, order):
        if order > self.order:
            raise PrecisionError("cannot extend a jet's truncation order")
        return Jet(list(self.coeffs[: order + 1]), order)

    def __repr__(self):
        return "Jet(%s; O(h^%d))" % (list(self.coeffs), self.order + 1)


# ---------------------------------------------------------------------------
# generic field operations and serialization
# ---------------------------------------------------------------------------

def field_ops(x, y, op):
    """Apply one of {add, sub, mul, div} to two scalars of the same field."""
    try:
        if op == "add":
            r = x + y
        elif op == "sub":
            r = x - y
        elif op == "mul":
            r = x * y
        elif op == "div":
            if is_zero(y):
                raise DivisionByZero("division by zero")
            r = x / y
        else:
            raise ValueError("unknown op %r" % (op,))
    except TypeError as exc:
        raise MixedFieldError(str(exc)) from None
    if r is NotImplemented:
        raise MixedFieldError("incompatible scalars %r and %r" % (x, y))
    return r


def scalar_to_json(x):
    """Canonical JSON form: rationals as {num, den} with string payloads."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, RatFun):
        return {
            "var": x.var,
            "numer": [scalar_to_json(c) for c in x.numer.coeffs],
            "denom": [scalar_to_json(c) for c in x.denom.coeffs],
        }
    if isinstance(x, Sqrt2Ext):
        return {"base": scalar_to_json(x.a), "sqrt2": scalar_to_json(x.b)}
    if isinstance(x, Jet):
        return {"order": x.order, "coeffs": [scalar_to_json(c) for c in x.coeffs]}
    if isinstance(x, Poly):
        return {"var": x.var, "coeffs": [scalar_to_json(c) for c in x.coeffs]}
    raise KernelError("cannot serialize %r" % (x,))
