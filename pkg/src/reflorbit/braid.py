"""Braid-group action on matrix tuples and finite-orbit enumeration.

The generator sigma_i sends (..., M_i, M_{i+1}, ...) to
(..., M_i M_{i+1} M_i^{-1}, M_i, ...), preserving the total product.  Orbits
of SL2 tuples up to simultaneous conjugation are enumerated by breadth-first
search over positive generator words, deduplicating on exact trace-coordinate
signatures (the 7-vector for 4-tuples, the 15-vector for 5-tuples); positive
words suffice because an element of finite forward orbit has g^-1 x in the
forward orbit of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from reflorbit.cyclo import embed, make_field
from reflorbit.linalg import Mat
from reflorbit.midconv import MatTuple


class OrbitCapExceeded(RuntimeError):
    """Orbit enumeration hit its cap; carries the partial orbit."""

    def __init__(self, cap, partial):
        super().__init__(f"orbit cap {cap} exceeded")
        self.cap = cap
        self.partial = partial


def braid_act(i, M):
    """sigma_i for 1 <= i <= T acting on a (T+1)-tuple."""
    k = len(M)
    if not 1 <= i <= k - 1:
        raise IndexError(f"generator index {i} out of range for a {k}-tuple")
    a = M[i - 1]
    b = M[i]
    new = list(M.entries)
    new[i - 1] = a * b * a.inverse()
    new[i] = a
    return MatTuple(new)


@dataclass(frozen=True)
class Signature:
    """Trace coordinates identifying an SL2 tuple up to conjugation."""

    tuple_length: int
    conductor: int
    coords: tuple  # CycloElt values, fixed order

    def embed_to(self, conductor):
        if conductor == self.conductor:
            return self
        f = make_field(conductor)
        return Signature(
            self.tuple_length, conductor, tuple(embed(c, f) for c in self.coords)
        )

    def key(self):
        return (self.tuple_length, tuple((c.den, c.nums) for c in self.coords))


_PAIRS = {
    4: [(0, 1), (0, 2), (1, 2)],
    5: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
}
_TRIPLES = {4: [], 5: [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]}


def _trace_prod(A, B):
    """trace(A*B) for 2x2 matrices without forming the product."""
    from reflorbit._backend import content_normalize, poly_mul

    f = A.field
    deg = f.degree
    a, b = A.nums, B.nums
    acc = [0] * deg
    for pos in ((0, 0), (deg, 2 * deg), (2 * deg, deg), (3 * deg, 3 * deg)):
        term = poly_mul(a[pos[0] : pos[0] + deg], b[pos[1] : pos[1] + deg], f.red, deg)
        for t in range(deg):
            acc[t] += term[t]
    nums, den = content_normalize(acc, A.den * B.den)
    from reflorbit.cyclo import CycloElt

    return CycloElt(f, nums, den)


def signature(M, checked=True):
    """The 7- or 15-vector of traces for a 4- or 5-tuple in SL2 with
    product the identity."""
    k = len(M)
    if k not in (4, 5):
        raise ValueError("signatures are defined for 4- and 5-tuples")
    if M.dim != 2:
        raise ValueError("signature requires 2x2 matrices")
    f = M.field
    if checked:
        one = f.one()
        for mat in M:
            if mat.det() != one:
                raise ValueError("tuple is not in SL2")
        if not M.product().is_identity():
            raise ValueError("tuple product is not the identity")
    first = M.entries[:-1]
    coords = [mat.trace() for mat in first]
    pairs = {}
    for i, j in _PAIRS[k]:
        coords.append(_trace_prod(first[i], first[j]))
    if k == 5:
        p01 = first[0] * first[1]
        p12 = first[1] * first[2]
        # t123, t124, t134, t234
        coords.append(_trace_prod(p01, first[2]))
        coords.append(_trace_prod(p01, first[3]))
        coords.append(_trace_prod(first[0] * first[2], first[3]))
        coords.append(_trace_prod(p12, first[3]))
        coords.append(_trace_prod(p01, first[2] * first[3]))
    else:
        coords.append(_trace_prod(first[0] * first[1], first[2]))
    return Signature(k, f.conductor, tuple(coords))


@dataclass
class Orbit:
    representatives: list  # one MatTuple per signature
    signatures: set  # signature keys
    complete: bool
    generator_log: list  # (parent index, generator) BFS edges

    @property
    def size(self):
        return len(self.signatures)


def orbit(M, cap=1_000_000, keep_representatives=True):
    """BFS orbit of the induced tuple under positive braid generator words,
    one stored representative per distinct signature."""
    sig0 = signature(M)
    seen = {sig0.key()}
    reps = [M]
    log = [(-1, 0)]
    to_test = [(0, M)]
    count = 1
    ngen = len(M) - 1
    while to_test:
        next_round = []
        for parent, tup in to_test:
            for i in range(1, ngen + 1):
                img = braid_act(i, tup)
                key = signature(img, checked=False).key()
                if key not in seen:
                    seen.add(key)
                    count += 1
                    if keep_representatives:
                        reps.append(img)
                        log.append((parent, i))
                    next_round.append((count - 1, img))
                    if count > cap:
                        raise OrbitCapExceeded(
                            cap, Orbit(reps, seen, False, log)
                        )
        to_test = next_round
    return Orbit(reps, seen, True, log)


def same_orbit(M1, M2, cap=1_000_000):
    """True iff signature(M2) lies in the orbit of M1 (fields coerced)."""
    n = lcm(M1.field.conductor, M2.field.conductor)
    f = make_field(n)
    orb = orbit(M1.embed_to(f))
    return signature(M2.embed_to(f)).key() in orb.signatures


def orbit_signature_keys(orb, conductor=None):
    return set(orb.signatures)


# -- classification-equivalence moves ---------------------------------------------


def tykhyy_variants(M):
    """One application of each classification equivalence move: sign flips on
    a pair of entries, entrywise complex conjugation, cyclic shifts, and
    inverse-with-reversal."""
    k = len(M)
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            new = list(M.entries)
            new[i] = -new[i]
            new[j] = -new[j]
            out.append(MatTuple(new))
    out.append(MatTuple([mat.conj_entries() for mat in M]))
    for s in range(1, k):
        out.append(MatTuple(list(M.entries[s:]) + list(M.entries[:s])))
    out.append(MatTuple([mat.inverse() for mat in reversed(M.entries)]))
    return out
