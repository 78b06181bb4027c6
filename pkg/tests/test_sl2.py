"""SL2 induction, subgroup recognition, residues."""

import random
from fractions import Fraction

import pytest

from reflorbit.cyclo import RootOfUnity, make_field
from reflorbit.linalg import Mat
from reflorbit.midconv import MatTuple, middle_convolution
from reflorbit.sl2 import (
    NotFiniteOrder,
    gl2_size,
    induce,
    infinite_order_certificate,
    residues,
    subgroup_id,
    trace_finite_order,
    trace_residue,
)


def test_induce_g23_characters():
    from reflorbit.refgroup import load_catalog

    entry = load_catalog("G23")
    from reflorbit.pipeline import partition_types, search_nice

    types = partition_types(search_nice("G23", 3))
    ta = [t for t in types if Fraction(1, 10) in t.key][0]
    # lambda = zeta_10: the published character is (q, q, q, q^2)
    mc = middle_convolution(ta.exemplar.matrices, RootOfUnity(10, 1))
    ind, char = induce(mc)
    f = ind.field
    q = f.root(f.conductor // 5)
    assert char == [q, q, q, q * q]
    # lambda = -1 gives the all-ones character
    mc2 = middle_convolution(ta.exemplar.matrices, RootOfUnity(2, 1))
    ind2, char2 = induce(mc2)
    assert all(c == ind2.field.one() for c in char2)


def test_induce_already_sl2_passthrough():
    f = make_field(1)
    A = Mat.from_rows(f, [[1, 1], [0, 1]])
    B = Mat.from_rows(f, [[1, 0], [1, 1]])
    ind, char = induce(MatTuple([A, B]))
    assert all(c == f.one() for c in char)
    assert len(ind) == 3 and ind.product().is_identity()


def test_trace_residue_values():
    f = make_field(5)
    assert trace_residue(f.rational(2))[0] == 0
    assert trace_residue(f.rational(-2))[0] == Fraction(1, 2)
    assert trace_residue(f.rational(-1))[0] == Fraction(1, 3)
    assert trace_residue(f.rational(0))[0] == Fraction(1, 4)
    assert trace_residue(f.rational(1))[0] == Fraction(1, 6)
    t = f.root(1) + f.root(4)
    assert trace_residue(t) == (Fraction(1, 5), Fraction(4, 5))
    with pytest.raises(NotFiniteOrder):
        trace_residue(f.rational(3))


def test_trace_finite_order_golden_ratio_infinite():
    f = make_field(5)
    tau = -(f.root(2) + f.root(3))  # (1+sqrt5)/2: not a sum of two unit roots
    assert trace_finite_order(1 + tau) is None


def test_infinite_certificates():
    f = make_field(1)
    unipotent = Mat.from_rows(f, [[1, 1], [0, 1]])
    cert = infinite_order_certificate(unipotent)
    assert cert is not None and cert[0] == "unipotent-power"
    finite = Mat.from_rows(f, [[0, 1], [-1, 0]])
    assert infinite_order_certificate(finite) is None
    f5 = make_field(5)
    tau = -(f5.root(2) + f5.root(3))
    hyperbolic = Mat.from_rows(f5, [[tau + 1, -1], [1, 0]])  # trace 1+tau
    assert hyperbolic.det() == f5.one()
    cert = infinite_order_certificate(hyperbolic)
    assert cert is not None and cert[0] == "trace"


def test_subgroup_id_references():
    # dicyclic of order 24
    f12 = make_field(12)
    a = Mat.from_rows(f12, [[f12.root(1), 0], [0, f12.root(-1)]])
    b = Mat.from_rows(f12, [[0, 1], [-1, 0]])
    sid = subgroup_id(MatTuple([a, b]))
    assert (sid.verdict, sid.order, sid.small_group_id) == ("finite", 24, "<24,4>")
    # cyclic
    sid = subgroup_id(MatTuple([a]))
    assert sid.verdict == "finite" and sid.label == "cyclic" and sid.order == 12
    # identity tuple
    sid = subgroup_id(MatTuple([Mat.identity(make_field(1), 2)]))
    assert sid.order == 1 and sid.label == "cyclic"


def test_subgroup_id_sl25():
    import sys

    sys.path.insert(0, "tests")
    from appendix_fixtures import rows_for

    row = [r for r in rows_for("G23", 3) if r.orbit == 10][0]
    sid = subgroup_id(row.induced())
    assert (sid.order, sid.small_group_id) == (120, "<120,5>")


def test_gl2_sizes_from_g23():
    import sys

    sys.path.insert(0, "tests")
    from appendix_fixtures import rows_for

    for row in rows_for("G23", 3):
        if row.pipeline_mats:
            continue
        assert gl2_size(MatTuple(list(row.mats))) == row.s_size


def test_residues_g28_row():
    # published comparison vector (2/3, 1/3, 1/3, 2/3) for the reduced tuple,
    # matched coordinate-wise up to the theta <-> 1-theta mirror
    import sys

    sys.path.insert(0, "tests")
    from appendix_fixtures import rows_for

    row = [r for r in rows_for("G28", 4) if r.xi == Fraction(1, 6)][0]
    ind = row.induced()
    red = MatTuple([M for M in ind if not M.is_identity()])
    theta, _ = residues(red)
    expected = [Fraction(2, 3), Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)]
    for (canon, mirror), want in zip(theta, expected):
        assert want in (canon, mirror)


def test_residues_not_finite_order():
    f5 = make_field(5)
    tau = -(f5.root(2) + f5.root(3))
    h = Mat.from_rows(f5, [[tau + 1, -1], [1, 0]])  # infinite order, det 1
    tup = MatTuple([h, h.inverse(), Mat.identity(f5, 2), Mat.identity(f5, 2)])
    with pytest.raises(NotFiniteOrder):
        residues(tup)
