"""SL2 side of the pipeline: character tensoring, subgroup recognition and
residue extraction.

``induce`` turns a rank-2 convolution output into a (T+1)-tuple in SL2 with
product the identity: the inverse product is adjoined, each matrix is scaled
by the smallest-exponent square root of det^-1, and the product condition is
repaired with a sign on the last scalar (always possible since the scaled
determinants multiply to 1).

``subgroup_id`` classifies the generated subgroup: it hunts for an
infinite-order certificate (a non-+-I element of trace +-2, or a trace not of
the form zeta + zeta^-1 for any admissible root of unity), and otherwise
closes the group and matches its element-order histogram against reference
groups built from explicit presentations (cyclic, dicyclic, SL(2,3), binary
octahedral, SL(2,5))."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from reflorbit.cyclo import (
    RootOfUnity,
    as_root_of_unity,
    embed,
    make_field,
    try_descend,
)
from reflorbit.linalg import Mat, mat_embed
from reflorbit.midconv import MatTuple


class NotFiniteOrder(ValueError):
    """Trace is not zeta + zeta^-1 for any admissible root of unity."""


class NonUnitDeterminant(ValueError):
    """A determinant that is not a root of unity cannot be normalised."""


def _field_contains_root(conductor, d):
    """zeta_d lies in Q(zeta_c) iff d | c (c even) or d | 2c (c odd)."""
    return conductor % d == 0 or (
        conductor % 2 == 1 and d % 2 == 0 and (2 * conductor) % d == 0
    )


def induce(mc):
    """SL2 (T+1)-tuple induced by a rank-2 tuple; also returns the character.

    Scalars a_i satisfy a_i^2 = det(M_i)^-1 with the smallest nonnegative
    exponent; a_{T+1} is sign-adjusted so the a_i multiply to 1.
    """
    if mc.dim != 2:
        raise ValueError("induce expects 2x2 matrices")
    mats = list(mc.entries)
    mats.append(mc.inverse_product())
    roots = []
    for M in mats:
        d = as_root_of_unity(M.det())
        if d is None:
            raise NonUnitDeterminant("determinant is not a root of unity")
        inv = d.inverse()
        roots.append(RootOfUnity(2 * inv.order, inv.exponent))
    conductor = mc.field.conductor
    for r in roots:
        if not _field_contains_root(conductor, r.order):
            conductor = lcm(conductor, r.order)
    f = make_field(conductor)
    scalars = [r.to_elt(f) for r in roots]
    prod = f.one()
    for s in scalars:
        prod = prod * s
    if prod != f.one():
        assert prod == -f.one(), "character product is not a sign"
        scalars[-1] = -scalars[-1]
    out = []
    for M, s in zip(mats, scalars):
        out.append(mat_embed(M, f).scale(s))
    induced = MatTuple(out)
    for M in induced:
        assert M.det() == f.one()
    assert induced.product().is_identity()
    return induced, scalars


# -- admissible traces of finite-order SL2 elements ------------------------------------


def _phi(d):
    out = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            out *= p - 1
            d //= p
            while d % p == 0:
                out *= p
                d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        out *= d - 1
    return out


@lru_cache(maxsize=None)
def _finite_order_lcm(conductor):
    """lcm of all possible finite orders of eigenvalues of SL2 elements over
    Q(zeta_conductor): the eigenvalue generates a degree <= 2*phi(conductor)
    extension, so its order d has phi(d) <= that bound."""
    bound = 2 * _phi(conductor) if conductor > 1 else 2
    N = 1
    d = 1
    while d <= 2 * bound * bound + 2:
        if _phi(d) <= bound:
            N = lcm(N, d)
        d += 1
    return N


def _power_trace(t, k):
    """trace(h^k) from t = trace(h) for h in SL2, or None when the height
    gate trips.

    Uses T_2m = T_m^2 - 2, T_2m+1 = T_m T_m+1 - t on the pair
    (T_m, T_m+1).  When the eigenvalues are roots of unity every T_j is a
    sum of two roots of unity, so Tr(T_j * conj(T_j)) <= 4*deg at every
    step; gating each step both certifies infinite order early and keeps
    all intermediate numbers bounded."""
    from reflorbit.cyclo import field_trace

    f = t.field
    bound = 4 * f.degree

    def gate(x):
        return x.den == 1 and field_trace(x * x.conjugate()) <= bound

    def pair(m):
        if m == 0:
            return f.rational(2), t
        prev = pair(m // 2)
        if prev is None:
            return None
        a, b = prev
        if m % 2 == 0:
            out = a * a - 2, a * b - t
        else:
            out = a * b - t, b * b - 2
        if not (gate(out[0]) and gate(out[1])):
            return None
        return out

    if not gate(t):
        return None
    res = pair(k)
    return None if res is None else res[0]


@lru_cache(maxsize=100_000)
def trace_finite_order(t):
    """Order of the eigenvalues of an SL2 element of trace t, or None when
    they are not roots of unity.  (For trace +-2 this is the order of the
    diagonalisable representative; unipotents need a separate check.)"""
    f = t.field
    two = f.rational(2)
    if t == two:
        return 1
    if t == -two:
        return 2
    N = _finite_order_lcm(f.conductor)
    if _power_trace(t, N) != two:
        return None
    order = N
    rem = N
    p = 2
    while rem > 1:
        if rem % p == 0:
            while rem % p == 0:
                rem //= p
            while order % p == 0 and _power_trace(t, order // p) == two:
                order //= p
        p += 1 if p == 2 else 2
    return order


def trace_residue(t):
    """Residue theta in [0, 1/2] with t = zeta^theta + zeta^-theta, plus the
    mirror candidate 1 - theta; raises NotFiniteOrder when the trace is not
    of root-of-unity type."""
    d = trace_finite_order(t)
    if d is None:
        raise NotFiniteOrder(f"trace {t!r} is not of root-of-unity type")
    if d == 1:
        return Fraction(0), Fraction(0)
    if d == 2:
        return Fraction(1, 2), Fraction(1, 2)
    f = t.field
    target = (
        f
        if _field_contains_root(f.conductor, d)
        else make_field(lcm(f.conductor, d))
    )
    tt = t if target is f else embed(t, target)
    for k in range(1, d // 2 + 1):
        if gcd(k, d) != 1:
            continue
        val = RootOfUnity(d, k).to_elt(target)
        if val + val.inverse() == tt:
            theta = Fraction(k, d)
            return theta, 1 - theta
    raise NotFiniteOrder(f"no residue found for trace of order {d}")


_SIGMA_PAIRS = {4: [(0, 1), (1, 2), (0, 2), (1, 3)],
                5: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]}


def residues(M):
    """Residue vectors (theta_i per matrix, sigma_ij per comparison pair).

    Each entry is (canonical, mirror): the representative <= 1/2 and its
    partner 1 - theta, both retained for matching against classifications.
    """
    k = len(M)
    if k not in _SIGMA_PAIRS:
        raise ValueError("residues are defined for 4- and 5-tuples")
    theta = [trace_residue(mat.trace()) for mat in M]
    sigma = []
    for i, j in _SIGMA_PAIRS[k]:
        sigma.append(trace_residue((M[i] * M[j]).trace()))
    return theta, sigma


# -- subgroup recognition ------------------------------------------------------------


@dataclass
class SubgroupId:
    verdict: str  # "finite" | "infinite" | "inconclusive"
    order: int = 0
    label: str = ""
    small_group_id: str = ""
    certificate: object = None
    histogram: tuple = ()

    def __repr__(self):
        if self.verdict == "finite":
            return f"Finite({self.order}, {self.label or self.small_group_id})"
        if self.verdict == "infinite":
            return f"Infinite({self.certificate[0]})"
        return "Inconclusive"


def infinite_order_certificate(M):
    """Certificate that M in GL2 (root-of-unity determinant) has infinite
    order: a power with determinant 1 that is unipotent != +-I, or whose
    trace matches no admissible zeta + zeta^-1.  Returns None for finite."""
    f = M.field
    d = as_root_of_unity(M.det())
    if d is None:
        raise NonUnitDeterminant("determinant is not a root of unity")
    h = M**d.order
    ident = Mat.identity(f, 2)
    if h == ident or h == -ident:
        return None
    t = h.trace()
    two = f.rational(2)
    if t == two or t == -two:
        return ("unipotent-power", M, h)
    if trace_finite_order(t) is None:
        return ("trace", M, h)
    return None  # distinct root-of-unity eigenvalues: finite order


def _element_order(M, cap=10000):
    ident = Mat.identity(M.field, M.dim)
    acc = M
    k = 1
    while acc != ident:
        acc = acc * M
        k += 1
        if k > cap:
            raise NotFiniteOrder("element order exceeds cap")
    return k


def group_closure_2x2(mats, cap=3000, certify=True):
    """Closure of a 2x2 matrix group with early infinite detection.

    Returns ("finite", elements) or ("infinite", certificate) or
    ("inconclusive", partial elements)."""
    f = mats[0].field
    ident = Mat.identity(f, 2)
    els = {(ident.den, ident.nums): ident}
    frontier = [ident]
    while frontier:
        new = []
        for g in mats:
            for h in frontier:
                c = g * h
                key = (c.den, c.nums)
                if key not in els:
                    if certify:
                        cert = infinite_order_certificate(c)
                        if cert is not None:
                            return ("infinite", cert)
                    els[key] = c
                    new.append(c)
                    if len(els) > cap:
                        return ("inconclusive", els)
        frontier = new
    return ("finite", els)


def _histogram(elements):
    hist = {}
    for M in elements.values():
        o = _element_order(M)
        hist[o] = hist.get(o, 0) + 1
    return tuple(sorted(hist.items()))


@lru_cache(maxsize=None)
def _reference_histograms():
    """Order histograms of the finite SL2 groups the tables name, computed
    from explicit presentations."""
    refs = {}

    def close(mats, expect):
        verdict, els = group_closure_2x2(mats, cap=expect + 10, certify=False)
        assert verdict == "finite" and len(els) == expect, (verdict, len(els))
        return _histogram(els)

    # dicyclic of order 4k: <diag(z_2k, z_2k^-1), [[0,1],[-1,0]]>
    for k in (3, 6):
        f = make_field(2 * k)
        a = Mat.from_rows(f, [[f.root(1), 0], [0, f.root(-1)]])
        b = Mat.from_rows(f, [[0, 1], [-1, 0]])
        refs[("dicyclic", 4 * k)] = close([a, b], 4 * k)
    # SL(2,3): quaternion units plus w = (-1+i+j+k)/2
    f4 = make_field(4)
    i = f4.root(1)
    I2 = Mat.from_rows(f4, [[i, 0], [0, -i]])
    J2 = Mat.from_rows(f4, [[0, 1], [-1, 0]])
    half = Fraction(1, 2)
    W2 = Mat.from_rows(
        f4,
        [
            [(i - 1) * half, (i + 1) * half],
            [(i - 1) * half, (-i - 1) * half],
        ],
    )
    refs[("SL(2,3)", 24)] = close([I2, J2, W2], 24)
    # binary octahedral: SL(2,3) plus diag(z8, z8^7)
    f8 = make_field(8)
    S8 = Mat.from_rows(f8, [[f8.root(1), 0], [0, f8.root(7)]])
    refs[("binary octahedral", 48)] = close(
        [mat_embed(I2, f8), mat_embed(J2, f8), mat_embed(W2, f8), S8], 48
    )
    # SL(2,5): binary icosahedral via icosian quaternions
    f20 = make_field(20)
    i20 = f20.root(5)
    tau = -(f20.root(8) + f20.root(12))  # golden ratio = -(z5^2 + z5^3)
    a = tau * half
    c = (tau - 1) * half
    dq = half
    Q1 = Mat.from_rows(f20, [[a, c + dq * i20], [-c + dq * i20, a]])
    refs[("SL(2,5)", 120)] = close([Q1, mat_embed(J2, f20)], 120)
    return refs


_SMALL_GROUP_IDS = {
    ("dicyclic", 12): "<12,1>",
    ("dicyclic", 24): "<24,4>",
    ("SL(2,3)", 24): "<24,3>",
    ("binary octahedral", 48): "<48,28>",
    ("SL(2,5)", 120): "<120,5>",
}


def _cyclic_histogram(n):
    """phi(d) elements of order d for each d | n."""
    return tuple(sorted((d, _phi(d)) for d in range(1, n + 1) if n % d == 0))


def subgroup_id(M, cap=3000):
    """Identify the subgroup of SL2 (or GL2) generated by the tuple."""
    mats = list(M.entries) if isinstance(M, MatTuple) else list(M)
    for g in mats:
        cert = infinite_order_certificate(g)
        if cert is not None:
            return SubgroupId(verdict="infinite", certificate=cert)
    verdict, payload = group_closure_2x2(mats, cap=cap)
    if verdict == "infinite":
        return SubgroupId(verdict="infinite", certificate=payload)
    if verdict == "inconclusive":
        return SubgroupId(verdict="inconclusive", order=len(payload))
    els = payload
    order = len(els)
    hist = _histogram(els)
    if hist == _cyclic_histogram(order):
        return SubgroupId("finite", order, "cyclic", f"cyclic({order})", None, hist)
    for (label, o), ref in _reference_histograms().items():
        if o == order and ref == hist:
            sgid = _SMALL_GROUP_IDS.get((label, o), "")
            return SubgroupId("finite", order, label, sgid, None, hist)
    return SubgroupId("finite", order, f"other(order={order})", "", None, hist)


def gl2_size(mats, cap=3000):
    """Order of the GL2 group generated, 0 when provably infinite.

    This is the pre-character group of the raw convolution output."""
    sid = subgroup_id(MatTuple(list(mats)) if not isinstance(mats, MatTuple) else mats,
                      cap=cap)
    if sid.verdict == "infinite":
        return 0
    if sid.verdict == "finite":
        return sid.order
    raise RuntimeError(f"subgroup size inconclusive at cap {cap}")
