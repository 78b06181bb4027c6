"""Exact dense linear algebra over a cyclotomic field.

``Mat`` stores a square matrix as one flat integer numerator tuple (row major,
``degree`` coefficients per entry) plus a single positive denominator, so a
matrix is hashable and equality is canonical -- the closure enumeration and
orbit deduplication depend on that.  Hot products go through the kernel
backend; eliminations (inverse, echelon, kernels, quotients) work entrywise
with ``CycloElt`` since they are never on the hot path.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from reflorbit._backend import content_normalize, mat_mul, mat_vec, poly_mul
from reflorbit.cyclo import (
    CycloElt,
    CycloField,
    FieldMismatch,
    RootOfUnity,
    embed,
    make_field,
)


class SingularMatrix(ZeroDivisionError):
    """Inverse of a singular matrix requested."""


class InvarianceError(ValueError):
    """A map does not preserve the subspace it was asked to act on."""


class Mat:
    """Square matrix over one cyclotomic field, canonical and hashable."""

    __slots__ = ("field", "dim", "nums", "den")

    def __init__(self, field, dim, nums, den):
        # trusted constructor: nums/den already normalised
        self.field = field
        self.dim = dim
        self.nums = nums
        self.den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        n = len(rows)
        deg = field.degree
        nums = []
        den = 1
        elts = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if isinstance(e, (int, Fraction)):
                    e = field.rational(e)
                elif isinstance(e, CycloElt):
                    if e.field.conductor != field.conductor:
                        e = embed(e, field)
                else:
                    raise TypeError(f"bad entry {e!r}")
                elts.append(e)
                den = lcm(den, e.den)
        for e in elts:
            m = den // e.den
            nums.extend(v * m for v in e.nums)
        nums, den = content_normalize(nums, den)
        return cls(field, n, nums, den)

    @classmethod
    def identity(cls, field, n):
        deg = field.degree
        nums = [0] * (n * n * deg)
        for i in range(n):
            nums[(i * n + i) * deg] = 1
        return cls(field, n, tuple(nums), 1)

    @classmethod
    def scalar(cls, field, n, value):
        if isinstance(value, (int, Fraction)):
            value = field.rational(value)
        rows = [
            [value if i == j else 0 for j in range(n)] for i in range(n)
        ]
        return cls.from_rows(field, rows)

    # -- basics ----------------------------------------------------------------

    def entry(self, i, j):
        deg = self.field.degree
        base = (i * self.dim + j) * deg
        return self.field.elt(self.nums[base : base + deg], self.den)

    def rows(self):
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field.conductor != other.field.conductor:
            a, b = common_field(self, other)
            return a == b
        return (
            self.dim == other.dim
            and self.den == other.den
            and self.nums == other.nums
        )

    def __hash__(self):
        return hash((self.field.conductor, self.dim, self.den, self.nums))

    def key(self):
        """Canonical hashable key (used by closure sets)."""
        return (self.den, self.nums)

    def is_identity(self):
        return self == Mat.identity(self.field, self.dim)

    def is_scalar(self):
        n, deg = self.dim, self.field.degree
        zero = (0,) * deg
        d0 = self.nums[0:deg]
        for i in range(n):
            for j in range(n):
                base = (i * n + j) * deg
                v = self.nums[base : base + deg]
                if i == j:
                    if v != d0:
                        return False
                elif v != zero:
                    return False
        return True

    # -- arithmetic --------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.field.conductor != other.field.conductor:
                a, b = common_field(self, other)
                return a * b
            f = self.field
            nums = mat_mul(self.nums, other.nums, self.dim, f.degree, f.red)
            nums, den = content_normalize(nums, self.den * other.den)
            return Mat(f, self.dim, nums, den)
        if isinstance(other, (int, Fraction, CycloElt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloElt)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s):
        f = self.field
        if isinstance(s, (int, Fraction)):
            s = f.rational(s)
        elif s.field.conductor != f.conductor:
            n = lcm(s.field.conductor, f.conductor)
            tgt = make_field(n)
            return mat_embed(self, tgt).scale(embed(s, tgt))
        deg = f.degree
        out = []
        for pos in range(0, len(self.nums), deg):
            out.extend(poly_mul(self.nums[pos : pos + deg], s.nums, f.red, deg))
        nums, den = content_normalize(out, self.den * s.den)
        return Mat(f, self.dim, nums, den)

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field.conductor != other.field.conductor:
            a, b = common_field(self, other)
            return a + b
        da, db = self.den, other.den
        d = lcm(da, db)
        ma, mb = d // da, d // db
        nums = [x * ma + y * mb for x, y in zip(self.nums, other.nums)]
        nums, den = content_normalize(nums, d)
        return Mat(self.field, self.dim, nums, den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat(self.field, self.dim, tuple(-v for v in self.nums), self.den)

    def apply(self, vec_nums, vec_den=1):
        """Matrix times flat coefficient vector; returns (nums, den)."""
        f = self.field
        out = mat_vec(self.nums, vec_nums, self.dim, f.degree, f.red)
        return content_normalize(out, self.den * vec_den)

    def transpose(self):
        n, deg = self.dim, self.field.degree
        out = []
        for i in range(n):
            for j in range(n):
                base = (j * n + i) * deg
                out.extend(self.nums[base : base + deg])
        return Mat(self.field, n, tuple(out), self.den)

    def conj_entries(self):
        """Entrywise complex conjugation (zeta -> zeta^-1)."""
        return Mat.from_rows(
            self.field, [[e.conjugate() for e in row] for row in self.rows()]
        )

    def trace(self):
        t = self.field.zero()
        for i in range(self.dim):
            t = t + self.entry(i, i)
        return t

    def det(self):
        rows = self.rows()
        f = self.field
        n = self.dim
        detv = f.one()
        sign = 1
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c]), None)
            if p is None:
                return f.zero()
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                sign = -sign
            pivot = rows[c][c]
            detv = detv * pivot
            inv = pivot.inverse()
            for r in range(c + 1, n):
                fac = rows[r][c] * inv
                if fac:
                    rows[r] = [x - fac * y for x, y in zip(rows[r], rows[c])]
        return detv if sign == 1 else -detv

    def inverse(self):
        f = self.field
        n = self.dim
        if n == 2:
            d = self.det()
            if not d:
                raise SingularMatrix("matrix is singular")
            adj = Mat.from_rows(
                f,
                [
                    [self.entry(1, 1), -self.entry(0, 1)],
                    [-self.entry(1, 0), self.entry(0, 0)],
                ],
            )
            if d == f.one():
                return adj
            return adj.scale(d.inverse())
        rows = self.rows()
        aug = [row + [f.one() if i == j else f.zero() for j in range(n)]
               for i, row in enumerate(rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c]), None)
            if p is None:
                raise SingularMatrix("matrix is singular")
            aug[c], aug[p] = aug[p], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    fac = aug[r][c]
                    aug[r] = [x - fac * y for x, y in zip(aug[r], aug[c])]
        return Mat.from_rows(f, [row[n:] for row in aug])

    def rank(self):
        _, pivots = _echelon([list(r) for r in self.rows()], self.field)
        return len(pivots)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Mat.identity(self.field, self.dim)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return f"Mat({self.dim}x{self.dim} over Q(zeta_{self.field.conductor}))"

    # -- spectral helpers -----------------------------------------------------------

    def charpoly(self):
        """Monic characteristic polynomial det(x*I - A), exact."""
        n = self.dim
        f = self.field
        if n <= 4:
            # Newton's identities on flat power traces (hot path)
            powers = [self]
            for _ in range(n - 1):
                prev = powers[-1]
                nums = mat_mul(prev.nums, self.nums, n, f.degree, f.red)
                nums, den = content_normalize(nums, prev.den * self.den)
                powers.append(Mat(f, n, nums, den))
            p = [M.trace() for M in powers]
            e = [f.one()]
            for k in range(1, n + 1):
                acc = f.zero()
                sign = 1
                for i in range(1, k):
                    acc = acc + (e[k - i] * p[i - 1] if sign > 0 else -(e[k - i] * p[i - 1]))
                    sign = -sign
                acc = acc + (p[k - 1] if sign > 0 else -p[k - 1])
                e.append(acc / k)
            coeffs = []
            sign = 1 if n % 2 == 0 else -1
            for k in range(n, -1, -1):
                coeffs.append(e[k] if sign > 0 else -e[k])
                sign = -sign
            return CharPoly(f, tuple(coeffs))
        # Faddeev-LeVerrier: integer divisions are exact over char 0
        coeffs = [f.one()]  # leading coefficient, degree n
        M = self
        c = -(M.trace() / 1)
        coeffs.append(c)
        N = M
        for k in range(2, n + 1):
            N = self * (N + Mat.scalar(f, n, c))
            c = -(N.trace() / k)
            coeffs.append(c)
        coeffs.reverse()  # ascending order
        return CharPoly(f, tuple(coeffs))


def common_field(a, b):
    n = lcm(a.field.conductor, b.field.conductor)
    f = make_field(n)
    return mat_embed(a, f), mat_embed(b, f)


def mat_embed(M, target):
    if M.field.conductor == target.conductor:
        return M
    if target.conductor % M.field.conductor != 0:
        raise FieldMismatch("cannot embed matrix: conductor does not divide target")
    return Mat.from_rows(target, [[embed(e, target) for e in row] for row in M.rows()])


class CharPoly:
    """Exact characteristic polynomial, ascending coefficients, monic."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return (
            isinstance(other, CharPoly)
            and self.field.conductor == other.field.conductor
            and self.coeffs == other.coeffs
        )

    def __call__(self, M):
        """Evaluate at a matrix (Cayley-Hamilton check)."""
        f = M.field
        n = M.dim
        acc = Mat.scalar(f, n, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * M + Mat.scalar(f, n, c)
        return acc

    def divide_root(self, r):
        """Synthetic division by (x - r): (quotient, remainder)."""
        b = []
        acc = None
        for a in reversed(self.coeffs):
            acc = a if acc is None else a + r * acc
            b.append(acc)
        rem = b.pop()
        b.reverse()
        return tuple(b), rem

    def root_multiplicity(self, r):
        mult = 0
        poly = self
        while poly.degree > 0:
            q, rem = poly.divide_root(r)
            if rem:
                break
            mult += 1
            poly = CharPoly(poly.field, q)
        return mult

    def embed_to(self, target):
        return CharPoly(target, tuple(embed(c, target) for c in self.coeffs))

    def __repr__(self):
        return f"CharPoly(deg {self.degree} over Q(zeta_{self.field.conductor}))"


def charpoly(A):
    return A.charpoly()


def _needed_field(field, root):
    """Smallest field containing both ``field`` and the root of unity."""
    n, d = field.conductor, root.order
    if n % d == 0 or (n % 2 == 1 and d % 2 == 0 and (2 * n) % d == 0):
        return field
    return make_field(lcm(n, d))


def root_multiplicity_of(cp, root):
    """Multiplicity of a root of unity in a CharPoly, extending the field as
    needed to represent the root."""
    f = _needed_field(cp.field, root)
    poly = cp if f is cp.field else cp.embed_to(f)
    return poly.root_multiplicity(root.to_elt(f))


def eig_multiplicity(A, candidates):
    """Multiplicity of each candidate root of unity as an eigenvalue of A.

    Returns [(RootOfUnity, mult)] for candidates with mult > 0; the caller
    supplies candidates (from group degrees), so this never hunts for general
    roots.  Multiplicities of returned roots sum to <= dim.
    """
    cp = A.charpoly()
    out = []
    seen = set()
    for root in candidates:
        if root in seen:
            continue
        seen.add(root)
        f = _needed_field(cp.field, root)
        poly = cp if f is cp.field else cp.embed_to(f)
        m = poly.root_multiplicity(root.to_elt(f))
        if m:
            out.append((root, m))
    return out


def eigenvalue_multiset(A, candidates, require_full=True):
    """Full eigenvalue multiset of A among root-of-unity candidates.

    With ``require_full`` the multiplicities must account for every eigenvalue
    (dim of A); a shortfall raises, signalling an insufficient candidate list.
    """
    pairs = eig_multiplicity(A, candidates)
    total = sum(m for _, m in pairs)
    if require_full and total != A.dim:
        raise ValueError(
            f"candidates only account for {total} of {A.dim} eigenvalues"
        )
    return pairs


# -- subspaces -----------------------------------------------------------------


def _echelon(rows, field):
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    piv = 0
    pivots = []
    for c in range(ncols):
        r = next((i for i in range(piv, len(rows)) if rows[i][c]), None)
        if r is None:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        inv = rows[piv][c].inverse()
        rows[piv] = [x * inv for x in rows[piv]]
        for i in range(len(rows)):
            if i != piv and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [x - fac * y for x, y in zip(rows[i], rows[piv])]
        pivots.append(c)
        piv += 1
        if piv == len(rows):
            break
    return rows[:piv], pivots


class Subspace:
    """Row space in reduced echelon form; equality is basis equality."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_spans(cls, field, ambient_dim, vectors):
        rows = [list(v) for v in vectors]
        rows, pivots = _echelon(rows, field)
        return cls(field, ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), ())

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field.conductor == other.field.conductor
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.conductor, self.ambient_dim, self.basis))

    def reduce(self, vec):
        """Residual of a vector after killing its pivot coordinates."""
        v = list(vec)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def sum(self, other):
        return Subspace.from_spans(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )


def subspace_sum(U, V):
    return U.sum(V)


def kernel(A):
    """Null space of A as a Subspace (echelon basis)."""
    f = A.field
    n = A.dim
    rows, pivots = _echelon([list(r) for r in A.rows()], f)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.zero()] * n
        v[fc] = f.one()
        for row, p in zip(rows, pivots):
            v[p] = -row[fc]
        basis.append(v)
    return Subspace.from_spans(f, n, basis)


def image(A):
    """Column space of A as a Subspace."""
    return Subspace.from_spans(
        A.field, A.dim, [list(r) for r in A.transpose().rows()]
    )


def quotient_action(B, U):
    """Matrix of B acting on ambient/U, in the earliest echelon complement.

    Requires B(U) <= U; the complement basis is the set of non-pivot standard
    vectors of U (lexicographically earliest), so any two choices differ by a
    simultaneous conjugation downstream signatures absorb.
    """
    f = B.field
    n = B.dim
    for row in U.basis:
        img = _apply_rowvec(B, row)
        if not U.contains(img):
            raise InvarianceError("map does not preserve the subspace")
    comp = [c for c in range(n) if c not in U.pivots]
    cols = []
    for c in comp:
        e = [f.zero()] * n
        e[c] = f.one()
        img = _apply_rowvec(B, e)
        res = U.reduce(img)
        # residual must be supported on complement coordinates
        for p in U.pivots:
            assert not res[p]
        cols.append([res[c2] for c2 in comp])
    m = len(comp)
    rows = [[cols[j][i] for j in range(m)] for i in range(m)]
    return Mat.from_rows(f, rows)


def _apply_rowvec(B, vec):
    """B applied to a coordinate (column) vector given as a python list."""
    f = B.field
    n = B.dim
    out = []
    for i in range(n):
        acc = f.zero()
        for j in range(n):
            vj = vec[j]
            if vj:
                acc = acc + B.entry(i, j) * vj
        out.append(acc)
    return out


# -- text serialisation -------------------------------------------------------------

from reflorbit.cyclo import elt_from_text, elt_to_text  # noqa: E402


def mat_to_text(M):
    """``dim=k; field=n;`` then one line per row, entries ;-separated."""
    head = f"dim={M.dim}; field={M.field.conductor};"
    lines = [head]
    for row in M.rows():
        lines.append(" ; ".join(elt_to_text(e) for e in row))
    return "\n".join(lines)


def mat_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].replace(" ", "")
    if not head.startswith("dim="):
        raise ValueError("matrix text must start with dim=...; field=...;")
    parts = dict(
        kv.split("=") for kv in head.rstrip(";").split(";") if "=" in kv
    )
    dim = int(parts["dim"])
    field = make_field(int(parts["field"]))
    rows = []
    for ln in lines[1 : 1 + dim]:
        rows.append([elt_from_text(tok.strip()) for tok in ln.split(" ; ")])
    return Mat.from_rows(field, rows)
