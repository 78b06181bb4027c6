"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) with an
integer numerator vector and a single positive denominator, fully reduced mod
the n-th cyclotomic polynomial and gcd-normalised.  Equality is therefore a
plain tuple comparison and every element hashes consistently with equality,
which the orbit deduplication downstream relies on.

No floating point enters any computation; ``CycloElt.to_complex`` exists only
as a diagnostic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from reflorbit._backend import content_normalize, poly_mul


class FieldMismatch(ValueError):
    """Operands live in incompatible cyclotomic fields."""


class ZeroDivision(ZeroDivisionError):
    """Division by the zero element."""


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (lists, ascending); den monic."""
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def _cyclotomic_poly(n):
    """Coefficients of Phi_n (ascending), computed by dividing x^n - 1 by all
    Phi_d with d | n, d < n."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, list(_cyclotomic_poly(d)))
            assert not rem
    return tuple(num)


class CycloField:
    """The cyclotomic field Q(zeta_n) with zeta_n = exp(2*pi*i/n)."""

    _cache: dict = {}

    def __new__(cls, conductor):
        if conductor in cls._cache:
            return cls._cache[conductor]
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self = super().__new__(cls)
        self.conductor = conductor
        poly = _cyclotomic_poly(conductor)
        self.reduction_poly = poly
        self.degree = len(poly) - 1
        deg = self.degree
        # red[k] = coefficients of x^(deg+k) mod Phi_n, k = 0 .. deg-2
        red = []
        prev = [-c for c in poly[:deg]]  # x^deg
        if deg > 1:
            red.append(tuple(prev))
        for _ in range(deg - 2):
            nxt = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for t in range(deg):
                    nxt[t] -= top * poly[t]
            red.append(tuple(nxt))
            prev = nxt
        self.red = tuple(red)
        # power basis representation of x^e for e = 0 .. n-1 (then periodic)
        xpow = [None] * conductor
        for e in range(min(deg, conductor)):
            v = [0] * deg
            v[e] = 1
            xpow[e] = tuple(v)
        for e in range(deg, conductor):
            prev = xpow[e - 1]
            v = [0] * deg
            for t in range(deg - 1):
                v[t + 1] = prev[t]
            top = prev[deg - 1]
            if top:
                for t in range(deg):
                    v[t] -= top * poly[t]
            xpow[e] = tuple(v)
        self.xpow = tuple(xpow)
        cls._cache[conductor] = self
        return self

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and self.conductor == other.conductor

    def __hash__(self):
        return hash(("CycloField", self.conductor))

    # -- element constructors ------------------------------------------------

    def elt(self, nums, den=1):
        """Element from raw numerators/denominator (normalised here)."""
        nums = tuple(nums)
        if len(nums) != self.degree:
            raise ValueError("coefficient vector has wrong length")
        nums, den = content_normalize(nums, den)
        return CycloElt(self, nums, den)

    def zero(self):
        return self.elt((0,) * self.degree)

    def one(self):
        return self.rational(1)

    def rational(self, q):
        q = Fraction(q)
        v = [0] * self.degree
        v[0] = q.numerator
        return self.elt(v, q.denominator)

    def root(self, k=1):
        """zeta_n^k as an element."""
        return CycloElt(self, self.xpow[k % self.conductor], 1)

    def from_fractions(self, coeffs):
        den = 1
        for c in coeffs:
            den = lcm(den, Fraction(c).denominator)
        nums = [int(Fraction(c) * den) for c in coeffs]
        return self.elt(nums, den)


def make_field(n):
    """Q(zeta_n); fields with equal conductor are identical objects."""
    return CycloField(n)


@dataclass(frozen=True)
class RootOfUnity:
    """A root of unity zeta_order^exponent in lowest terms."""

    order: int
    exponent: int

    def __post_init__(self):
        d, k = self.order, self.exponent % self.order if self.order else 0
        g = gcd(d, k) if k else d
        object.__setattr__(self, "order", d // g)
        object.__setattr__(self, "exponent", (k // g) % (d // g) if d // g > 1 else 0)

    @property
    def residue(self):
        return Fraction(self.exponent, self.order)

    def inverse(self):
        return RootOfUnity(self.order, -self.exponent % self.order)

    def to_elt(self, field):
        """Image in ``field``; requires the value to exist there."""
        n = field.conductor
        d = self.order
        if n % d == 0:
            return field.root(self.exponent * (n // d))
        if n % 2 == 1 and (2 * n) % d == 0 and d % 2 == 0:
            # value = -zeta_{d/2}^j for suitable j
            half = RootOfUnity(d, (self.exponent + d // 2) % d)
            assert (2 * n) % d == 0
            return -half.to_elt(field)
        raise FieldMismatch(f"zeta_{d}^{self.exponent} does not lie in Q(zeta_{n})")

    def __repr__(self):
        return f"zeta_{self.order}^{self.exponent}"


class CycloElt:
    """Element of a fixed Q(zeta_n) in canonical reduced form."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field, nums, den):
        # trusted constructor: nums/den already normalised
        self.field = field
        self.nums = nums
        self.den = den

    # -- basics ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, CycloElt):
            return NotImplemented
        if self.field.conductor != other.field.conductor:
            a, b = coerce_pair(self, other)
            return a == b
        return self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.field.conductor, self.nums, self.den))

    def __bool__(self):
        return any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def coeffs(self):
        """Power-basis coefficients as Fractions."""
        return tuple(Fraction(v, self.den) for v in self.nums)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        if isinstance(other, CycloElt):
            if other.field.conductor == self.field.conductor:
                return other
            return None  # handled by caller via coerce_pair
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            if isinstance(other, CycloElt):
                x, y = coerce_pair(self, other)
                return x + y
            return NotImplemented
        da, db = self.den, b.den
        if da == db:
            return self.field.elt([x + y for x, y in zip(self.nums, b.nums)], da)
        d = lcm(da, db)
        ma, mb = d // da, d // db
        return self.field.elt(
            [x * ma + y * mb for x, y in zip(self.nums, b.nums)], d
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CycloElt(self.field, tuple(-v for v in self.nums), self.den)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            if isinstance(other, CycloElt):
                x, y = coerce_pair(self, other)
                return x - y
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            if isinstance(other, CycloElt):
                x, y = coerce_pair(self, other)
                return x * y
            return NotImplemented
        f = self.field
        nums = poly_mul(self.nums, b.nums, f.red, f.degree)
        return f.elt(nums, self.den * b.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self):
        """Multiplicative inverse via extended gcd with Phi_n."""
        if not self:
            raise ZeroDivision("division by zero cyclotomic element")
        f = self.field
        if f.degree == 1 or self.is_rational():
            q = Fraction(self.den, self.nums[0])
            v = [0] * f.degree
            v[0] = q.numerator
            return f.elt(v, q.denominator)

        def strip(p):
            while p and not p[-1]:
                p.pop()
            return p

        # invariant: self*s_i + Phi*t_i = r_i (t never needed)
        r0 = [Fraction(c) for c in f.reduction_poly]
        r1 = strip([Fraction(v, self.den) for v in self.nums])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, strip(r)
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        c = r1[0]  # nonzero: Phi_n is irreducible
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (f.degree - len(inv))
        return f.from_fractions(inv[: f.degree])

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            if isinstance(other, CycloElt):
                x, y = coerce_pair(self, other)
                return x / y
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        result = f.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- Galois / embeddings ----------------------------------------------------

    def galois(self, k):
        """Image under zeta_n -> zeta_n^k (requires gcd(k, n) = 1)."""
        f = self.field
        n = f.conductor
        if gcd(k % n, n) != 1 and n > 1:
            raise ValueError("not a Galois automorphism")
        acc = [0] * f.degree
        for i, c in enumerate(self.nums):
            if c:
                rep = f.xpow[(i * k) % n]
                for t in range(f.degree):
                    acc[t] += c * rep[t]
        return f.elt(acc, self.den)

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(self.field.conductor - 1 if self.field.conductor > 1 else 1)

    def to_complex(self):
        """Float image (diagnostic only; never used in exact logic)."""
        import cmath

        n = self.field.conductor
        z = cmath.exp(2j * cmath.pi / n)
        return sum(v * z**i for i, v in enumerate(self.nums)) / self.den

    def __repr__(self):
        return f"CycloElt({self.field.conductor}:{list(self.coeffs())})"


def _frac_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i] * inv
        if c:
            q[i - (len(b) - 1)] = c
            for j in range(len(b)):
                a[i - (len(b) - 1) + j] -= c * b[j]
    return q, a[: len(b) - 1]


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


# -- field coercion -------------------------------------------------------------


def embed(a, target):
    """Image of ``a`` in ``target`` under zeta_m -> zeta_n^(n/m)."""
    f = a.field
    m, n = f.conductor, target.conductor
    if m == n:
        return a
    if n % m != 0:
        raise FieldMismatch(f"conductor {m} does not divide {n}")
    step = n // m
    acc = [0] * target.degree
    for i, c in enumerate(a.nums):
        if c:
            rep = target.xpow[(i * step) % n]
            for t in range(target.degree):
                acc[t] += c * rep[t]
    return target.elt(acc, a.den)


def try_descend(a, target):
    """Preimage of ``a`` in the subfield ``target`` if it exists, else None."""
    f = a.field
    m, n = target.conductor, f.conductor
    if m == n:
        return a
    if n % m != 0:
        raise FieldMismatch(f"conductor {m} does not divide {n}")
    # solve sum_i c_i * embed(zeta_m^i) = a by echelon over Q
    basis_imgs = []
    for i in range(target.degree):
        basis_imgs.append(embed(CycloElt(target, target.xpow[i], 1), f))
    rows = f.degree
    aug = [[Fraction(0)] * (target.degree + 1) for _ in range(rows)]
    for j, img in enumerate(basis_imgs):
        for r in range(rows):
            aug[r][j] = Fraction(img.nums[r], img.den)
    for r in range(rows):
        aug[r][target.degree] = Fraction(a.nums[r], a.den)
    sol = _solve_rational(aug, target.degree)
    if sol is None:
        return None
    return target.from_fractions(sol)


def _solve_rational(aug, ncols):
    """Gaussian solve of an overdetermined consistent-or-not system."""
    rows = len(aug)
    piv = 0
    pivots = []
    for c in range(ncols):
        r = next((i for i in range(piv, rows) if aug[i][c]), None)
        if r is None:
            continue
        aug[piv], aug[r] = aug[r], aug[piv]
        inv = 1 / aug[piv][c]
        aug[piv] = [x * inv for x in aug[piv]]
        for i in range(rows):
            if i != piv and aug[i][c]:
                fac = aug[i][c]
                aug[i] = [x - fac * y for x, y in zip(aug[i], aug[piv])]
        pivots.append(c)
        piv += 1
    for i in range(piv, rows):
        if aug[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def field_trace(a):
    """Trace of a down to Q (sum over all complex embeddings), exact."""
    f = a.field
    if not hasattr(f, "_basis_traces"):
        n = f.conductor
        traces = []
        for i in range(f.degree):
            acc = [0] * f.degree
            for j in range(1, n + 1):
                if gcd(j, n) == 1 or n == 1:
                    rep = f.xpow[(i * j) % n]
                    for t in range(f.degree):
                        acc[t] += rep[t]
            assert not any(acc[1:]), "basis trace is not rational"
            traces.append(acc[0])
        f._basis_traces = tuple(traces)
    total = 0
    for c, tr in zip(a.nums, f._basis_traces):
        if c and tr:
            total += c * tr
    return Fraction(total, a.den)


def coerce_pair(a, b):
    """Bring two elements into their compositum Q(zeta_lcm)."""
    if a.field.conductor == b.field.conductor:
        return a, b
    n = lcm(a.field.conductor, b.field.conductor)
    f = make_field(n)
    return embed(a, f), embed(b, f)


def arith(a, b, op):
    """Dispatch named exact arithmetic (same field required; embed first)."""
    if a.field.conductor != b.field.conductor:
        raise FieldMismatch("operands must share a field; embed first")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# -- root-of-unity recognition ----------------------------------------------------


def as_root_of_unity(a):
    """If ``a`` is a root of unity, its reduced (order, exponent); else None.

    The search is bounded by a^(2n) = 1: the roots of unity in Q(zeta_n) are
    exactly mu_n for even n and mu_2n for odd n.
    """
    if not a:
        return None
    f = a.field
    n = f.conductor
    if a.den != 1:
        return None  # roots of unity are algebraic integers
    bound = 2 * n
    if a**bound != f.one():
        return None
    # exact order: strip primes from the bound
    order = bound
    p = 2
    rem = bound
    while rem > 1:
        if rem % p == 0:
            while rem % p == 0:
                rem //= p
            while order % p == 0 and a ** (order // p) == f.one():
                order //= p
        p += 1 if p == 2 else 2
    if n % order == 0:
        # a = zeta_order^k: scan k
        z = f.root(n // order)
        acc = f.one()
        for k in range(order):
            if acc == a:
                return RootOfUnity(order, k)
            acc = acc * z
        return None
    # n odd, order = 2*order' with order' | n: use -a
    neg = as_root_of_unity(-a)
    if neg is None:
        return None
    d, k = neg.order, neg.exponent
    return RootOfUnity(2 * d, d + 2 * k)


# -- text serialisation -------------------------------------------------------------

_ELT_RE = re.compile(r"^\s*(\d+)\s*:\s*\[([^\]]*)\]\s*$")


def elt_to_text(a):
    """Serialise as ``n:[c0,c1,...]`` with rationals ``p/q``; bit-exact."""
    parts = []
    for v in a.nums:
        q = Fraction(v, a.den)
        parts.append(str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}")
    return f"{a.field.conductor}:[{','.join(parts)}]"


def elt_from_text(text):
    m = _ELT_RE.match(text)
    if not m:
        raise ValueError(f"bad cyclotomic element literal: {text!r}")
    n = int(m.group(1))
    f = make_field(n)
    body = m.group(2).strip()
    coeffs = [Fraction(tok) for tok in body.split(",")] if body else []
    if len(coeffs) != f.degree:
        raise ValueError(
            f"expected {f.degree} coefficients for conductor {n}, got {len(coeffs)}"
        )
    return f.from_fractions(coeffs)
