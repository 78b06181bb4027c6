"""Middle convolution: dimension formula, invariance, inversion, formats."""

import random

import pytest

from reflorbit.cyclo import RootOfUnity, make_field
from reflorbit.linalg import Mat
from reflorbit.midconv import (
    ConvolutionParameterError,
    MatTuple,
    convolve,
    inverse_tuple,
    middle_convolution,
    predicted_dim,
    tuple_from_text,
    tuple_to_text,
)


def g23_exemplar():
    f5 = make_field(5)
    q = f5.root(1)
    t = q**3 + q**2
    return MatTuple(
        [
            Mat.from_rows(f5, [[1, 0, 0], [0, 1, 1], [0, 0, -1]]),
            Mat.from_rows(f5, [[0, -1, 0], [-1, 0, 0], [1 - t, 1 - t, 1]]),
            Mat.from_rows(f5, [[1, 0, 0], [t, -1, -1], [0, 0, 1]]),
        ]
    )


def test_rank_two_output_and_subspace_dims():
    A = g23_exemplar()
    data = convolve(A, RootOfUnity(2, 1))
    assert data.output.dim == 2
    assert data.K.dim == 6 and data.L.dim == 1  # 9 - 6 - 1 = 2
    assert len(data.output) == 3


def test_non_eigenvalue_parameter_gives_dim_three():
    # lambda^-1 not an eigenvalue of the product: dim = T - 0 = 3
    A = g23_exemplar()
    lam = RootOfUnity(5, 1)
    assert predicted_dim(A, lam) == 3
    assert middle_convolution(A, lam).dim == 3


def test_predicted_dim_matches_output_randomised():
    # dimension formula oracle on random reflection triples
    from reflorbit.refgroup import load_catalog

    entry = load_catalog("G23")
    refl = [r.element for r in entry.reflection_set()]
    rng = random.Random(6)
    lam = RootOfUnity(10, 3)
    for _ in range(8):
        A = MatTuple([rng.choice(refl) for _ in range(3)])
        pd = predicted_dim(A, lam)
        if pd <= 0:
            continue
        assert middle_convolution(A, lam).dim == pd


def test_identity_tuple_dim_zero():
    f = make_field(4)
    A = MatTuple([Mat.identity(f, 3)] * 3)
    assert predicted_dim(A, RootOfUnity(4, 1)) == 0


def test_lambda_one_rejected():
    A = g23_exemplar()
    with pytest.raises(ConvolutionParameterError):
        middle_convolution(A, RootOfUnity(1, 0))
    with pytest.raises(ConvolutionParameterError):
        predicted_dim(A, A.field.one())


def test_inverse_tuple_involution_and_product():
    A = g23_exemplar()
    inv = inverse_tuple(A)
    assert inverse_tuple(inv) == A
    assert inv.product() == A.product().inverse()


def test_output_dets_are_roots_of_unity():
    from reflorbit.cyclo import as_root_of_unity

    A = g23_exemplar()
    for lam in (RootOfUnity(2, 1), RootOfUnity(10, 1)):
        out = middle_convolution(A, lam)
        for M in out:
            assert as_root_of_unity(M.det()) is not None


def test_nice_tuple_rank2_for_all_T():
    # T = 4: multiplicity-2 parameter from the rank-3 catalog
    from reflorbit.pipeline import partition_types, search_nice

    types = partition_types(search_nice("G23", 4))
    tt = types[0]
    lam = tt.admissible_parameters(4)[0]
    out = middle_convolution(tt.exemplar.matrices, lam)
    assert out.dim == 2 and len(out) == 4


def test_tuple_text_roundtrip():
    A = g23_exemplar()
    assert tuple_from_text(tuple_to_text(A)) == A


def test_braid_equivariance_on_exemplar():
    # sigma_i then convolve lands in the orbit of convolve then sigma_i
    from reflorbit.braid import braid_act, same_orbit
    from reflorbit.sl2 import induce

    A = g23_exemplar()
    lam = RootOfUnity(10, 1)
    for i in (1, 2):
        left = induce(middle_convolution(braid_act(i, A), lam))[0]
        right_mc = middle_convolution(A, lam)
        right = induce(MatTuple(braid_act(i, right_mc).entries))[0]
        assert same_orbit(left, right)
