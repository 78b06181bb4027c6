"""Middle convolution of matrix tuples (additive block construction).

Given a tuple [A_1, ..., A_T] in GL_n and a parameter lambda != 1, the
convolution acts on C^(nT) by block matrices B_k that are the identity
outside the k-th block row, which reads

    lambda*(A_1 - I), ..., lambda*(A_{k-1} - I), lambda*A_k,
    A_{k+1} - I, ..., A_T - I.

The result is the induced action of the B_k on C^(nT)/(K + L) with
K = direct sum of ker(A_k - I) and L = the common fixed space of the B_k.
Both invariance of K and L under every B_k and the dimension formula

    dim = sum_i rank(A_i - I) - (n - rank(lambda*A_1...A_T - I))

are asserted on every call.  The output is well defined up to simultaneous
conjugation only; the quotient basis is the lexicographically earliest
echelon complement of K + L, and downstream comparisons go through trace
signatures, never entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from reflorbit.cyclo import CycloElt, RootOfUnity, embed, make_field
from reflorbit.linalg import (
    InvarianceError,
    Mat,
    Subspace,
    kernel,
    mat_embed,
    quotient_action,
)


class ConvolutionParameterError(ValueError):
    """lambda = 1 (or 0) is outside the implemented convolution."""


@dataclass
class MatTuple:
    """Ordered tuple of invertible square matrices over a common field."""

    entries: list

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty tuple")
        f = self.entries[0].field
        d = self.entries[0].dim
        fixed = []
        for M in self.entries:
            if M.dim != d:
                raise ValueError("mixed dimensions in tuple")
            fixed.append(M if M.field.conductor == f.conductor else mat_embed(M, f))
        self.entries = fixed

    @property
    def field(self):
        return self.entries[0].field

    @property
    def dim(self):
        return self.entries[0].dim

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, MatTuple) and self.entries == other.entries

    def product(self):
        P = self.entries[0]
        for M in self.entries[1:]:
            P = P * M
        return P

    def inverse_tuple(self):
        """[A_T^-1, ..., A_1^-1]."""
        return MatTuple([M.inverse() for M in reversed(self.entries)])

    def inverse_product(self):
        return self.product().inverse()

    def embed_to(self, field):
        return MatTuple([mat_embed(M, field) for M in self.entries])

    def conjugate_by(self, S):
        Si = S.inverse()
        return MatTuple([Si * M * S for M in self.entries])


def inverse_tuple(A):
    return A.inverse_tuple()


def _coerce_lambda(A, lam):
    """lambda as a CycloElt in a field containing both it and the tuple."""
    if isinstance(lam, RootOfUnity):
        d = lam.order
        n = A.field.conductor
        if n % d == 0 or (n % 2 == 1 and d % 2 == 0 and (2 * n) % d == 0):
            return A, lam.to_elt(A.field)
        target = make_field(lcm(n, d))
        A2 = A.embed_to(target)
        return A2, lam.to_elt(target)
    if not isinstance(lam, CycloElt):
        raise TypeError("lambda must be a CycloElt or RootOfUnity")
    if lam.field.conductor == A.field.conductor:
        return A, lam
    target = make_field(lcm(A.field.conductor, lam.field.conductor))
    return A.embed_to(target), embed(lam, target)


def predicted_dim(A, lam):
    """sum_i rank(A_i - I) - (dim V - rank(lambda*A_1...A_T - I))."""
    A, lam = _coerce_lambda(A, lam)
    if lam == 1:
        raise ConvolutionParameterError("dimension formula requires lambda != 1")
    f, n = A.field, A.dim
    ident = Mat.identity(f, n)
    total = sum((M - ident).rank() for M in A)
    drop = n - (A.product().scale(lam) - ident).rank()
    return total - drop


@dataclass
class ConvolutionData:
    blocks: list
    K: Subspace
    L: Subspace
    lam: CycloElt
    output: MatTuple


def _block_matrix(A, lam, k):
    """B_k: identity outside the k-th block row."""
    f = A.field
    n = A.dim
    T = len(A)
    ident = Mat.identity(f, n)
    zero = f.zero()
    one = f.one()
    rows = [[one if i == j else zero for j in range(n * T)] for i in range(n * T)]
    for j in range(T):
        if j < k:
            blk = (A[j] - ident).scale(lam)
        elif j == k:
            blk = A[k].scale(lam)
        else:
            blk = A[j] - ident
        for r in range(n):
            for c in range(n):
                rows[k * n + r][j * n + c] = blk.entry(r, c)
    return Mat.from_rows(f, rows)


def convolve(A, lam):
    """Full convolution data for MC_lambda(A); asserts invariance of K and L
    and the dimension formula."""
    A, lam = _coerce_lambda(A, lam)
    if not lam:
        raise ConvolutionParameterError("lambda must be nonzero")
    if lam == 1:
        raise ConvolutionParameterError("lambda = 1 is not supported")
    f = A.field
    n = A.dim
    T = len(A)
    ident = Mat.identity(f, n)
    big_ident = Mat.identity(f, n * T)
    blocks = [_block_matrix(A, lam, k) for k in range(T)]
    # K: blockwise kernels of A_k - I
    zero = f.zero()
    k_rows = []
    for k in range(T):
        ker = kernel(A[k] - ident)
        for row in ker.basis:
            vec = [zero] * (n * T)
            vec[k * n : (k + 1) * n] = list(row)
            k_rows.append(vec)
    K = Subspace.from_spans(f, n * T, k_rows)
    # L: common fixed space of the B_k
    L = kernel(blocks[0] - big_ident)
    for B in blocks[1:]:
        L = _intersect(L, kernel(B - big_ident))
    for B in blocks:
        for row in K.basis:
            if not K.contains(_apply(B, row)):
                raise InvarianceError("B_k does not preserve K")
        for row in L.basis:
            if not L.contains(_apply(B, row)):
                raise InvarianceError("B_k does not preserve L")
    U = K.sum(L)
    out = MatTuple([quotient_action(B, U) for B in blocks])
    expect = predicted_dim(A, lam)
    if out.dim != expect:
        raise AssertionError(
            f"middle convolution dimension {out.dim} != predicted {expect}"
        )
    return ConvolutionData(blocks=blocks, K=K, L=L, lam=lam, output=out)


def middle_convolution(A, lam):
    """MC_lambda(A) as a tuple, defined up to simultaneous conjugation."""
    return convolve(A, lam).output


def _apply(B, vec):
    from reflorbit.linalg import _apply_rowvec

    return _apply_rowvec(B, list(vec))


def _intersect(U, V):
    """Subspace intersection via the kernel of the stacked constraint map."""
    f = U.field
    amb = U.ambient_dim
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(f, amb)
    # x in U cap V  <=>  x = sum a_i u_i and V-residual of x is zero
    from reflorbit.linalg import _echelon

    # parameterize x = sum a_i u_i over U and require zero V-residual;
    # the residual map is linear in the a_i
    residuals = [V.reduce(list(b)) for b in U.basis]
    cols = len(residuals)
    mat_rows = [
        [residuals[i][j] for i in range(cols)] for j in range(amb)
    ]
    rowspace, pivots = _echelon([list(r) for r in mat_rows], f)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        coeff = [f.zero()] * cols
        coeff[fc] = f.one()
        for row, p in zip(rowspace, pivots):
            coeff[p] = -row[fc]
        vec = [f.zero()] * amb
        for a, b in zip(coeff, U.basis):
            if a:
                vec = [x + a * y for x, y in zip(vec, b)]
        basis.append(vec)
    return Subspace.from_spans(f, amb, basis)


# -- tuple text serialisation ---------------------------------------------------------

from reflorbit.linalg import mat_from_text, mat_to_text  # noqa: E402


def tuple_to_text(A):
    return "\n---\n".join(mat_to_text(M) for M in A) + "\n"


def tuple_from_text(text):
    parts = [p.strip() for p in text.split("---") if p.strip()]
    return MatTuple([mat_from_text(p) for p in parts])
