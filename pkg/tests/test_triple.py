import numpy as np
import pytest

import finspec as fs
from finspec import triple as triple_mod
from finspec.algebra import AlgebraHom
from finspec.errors import DegreeZero, NoRealStructure, ParityMismatch
from finspec.triple import (HochschildChain, check_orientability,
                            hochschild_boundary, represent_chain)

from conftest import haar_unitary, identity_witness


SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def two_point(length=1.0):
    return fs.two_point_geometry(length)[1]


def test_validate_two_point_passes():
    report = fs.validate_triple(two_point())
    assert report.passed
    for name in ("dirac_selfadjoint", "representation_projections",
                 "grading_involutive", "grading_anticommutes_D"):
        assert report[name].passed


def test_validate_rejects_bad_grading():
    t = two_point()
    bad = triple_mod.SpectralTriple(t.algebra, t.dirac, np.eye(2),
                                    t.real_structure, "even")
    report = fs.validate_triple(bad)
    assert not report.passed
    assert not report["grading_anticommutes_D"].passed


def test_validate_rejects_nonhermitian_dirac():
    t = two_point()
    d = t.dirac.copy()
    d[0, 1] = 2.0
    bad = triple_mod.SpectralTriple(t.algebra, d, t.grading,
                                    t.real_structure, "even")
    report = fs.validate_triple(bad)
    assert not report.passed
    assert not report["dirac_selfadjoint"].passed


def test_real_structure_requires_j():
    t = two_point()
    stripped = triple_mod.SpectralTriple(t.algebra, t.dirac, t.grading,
                                         None, "even")
    with pytest.raises(NoRealStructure):
        fs.check_real_structure(stripped)


def test_two_point_first_order_fails_honestly():
    """The diagonal two-point representation admits no first-order real
    structure; the check must say so rather than pass vacuously."""
    report = fs.check_real_structure(two_point())
    assert not report["first_order_condition"].passed
    assert report["commutant_condition"].passed
    assert report.signs == (1, "commute", "commute")


def test_ko_dimension_columns():
    assert fs.ko_dimension((1, "commute", "commute")) == {0}
    assert fs.ko_dimension((1, "anticommute", None)) == {1}
    assert fs.ko_dimension((-1, "commute", "anticommute")) == {2}
    assert fs.ko_dimension((-1, "commute", None)) == {3}
    assert fs.ko_dimension((-1, "commute", "commute")) == {4}
    assert fs.ko_dimension((-1, "anticommute", None)) == {5}
    assert fs.ko_dimension((1, "commute", "anticommute")) == {6}
    assert fs.ko_dimension((1, "commute", None)) == {7}
    assert fs.ko_dimension((1, "anticommute", "commute")) == set()


def test_standard_ko_triples_pass_everything():
    for n in range(8):
        t = triple_mod.standard_ko_triple(n)
        assert fs.validate_triple(t).passed
        report = fs.check_real_structure(t)
        assert report.passed, f"n={n}: {report.signs}"
        assert fs.ko_dimension(report.signs) == {n}


def test_omega_basis_two_point():
    t = two_point()
    deg0 = fs.omega_basis(t, 0)
    assert len(deg0) == 2
    deg1 = fs.omega_basis(t, 1)
    assert len(deg1) == 4  # the 2x2 matrix algebra is exhausted at degree 1


def test_hochschild_boundary_hand_expansion():
    """b(a0 (x) a1) = a0 a1 - a1 a0 = 0 in a commutative algebra, checked
    against the explicit formula on a two-term chain."""
    a = two_point().algebra
    x = a.element([1.0, 2.0])
    y = a.element([3.0, -1.0])
    c = HochschildChain(1, ((x, y),))
    b = hochschild_boundary(c)
    assert b.degree == 0
    assert b.norm() <= 1e-12


def test_hochschild_boundary_degree_two():
    a = two_point().algebra
    x = a.element([1.0, 0.0])
    y = a.element([0.0, 1.0])
    z = a.element([2.0, 5.0])
    c = HochschildChain(2, ((x, y, z),))
    b = hochschild_boundary(c)
    # b(x(x)y(x)z) = xy (x) z - x (x) yz + zx (x) y, componentwise products
    expect = (
        np.einsum("i,j->ij", (x * y).values, z.values)
        - np.einsum("i,j->ij", x.values, (y * z).values)
        + np.einsum("i,j->ij", (z * x).values, y.values)
    )
    assert np.allclose(b.tensor(), expect, atol=1e-12)


def test_hochschild_boundary_squares_to_zero(rng):
    a = fs.lattice_interval(3, 1.0)[1].algebra
    for _ in range(10):
        terms = []
        for _ in range(3):
            terms.append(tuple(a.element(rng.standard_normal(a.k))
                               for _ in range(4)))
        c = HochschildChain(3, tuple(terms))
        bb = hochschild_boundary(hochschild_boundary(c))
        assert bb.norm() <= 1e-10


def test_hochschild_boundary_degree_zero_raises():
    a = two_point().algebra
    c = HochschildChain(0, ((a.element([1.0, -1.0]),),))
    with pytest.raises(DegreeZero):
        hochschild_boundary(c)


def test_orientability_two_point_cycle():
    t = two_point()
    a = t.algebra
    good = HochschildChain(0, ((a.element([1.0, -1.0]),),))
    report = check_orientability(t, good, 0)
    assert report.passed
    perturbed = HochschildChain(0, ((a.element([1.0, -0.9]),),))
    report = check_orientability(t, perturbed, 0)
    assert not report.matches_grading
    assert not report.passed


def test_represent_chain_matches_products():
    t = two_point()
    a = t.algebra
    x = a.element([1.0, -1.0])
    y = a.element([0.5, 2.0])
    c = HochschildChain(1, ((x, y),))
    m = represent_chain(t, c)
    expect = x.represent() @ (t.dirac @ y.represent() - y.represent() @ t.dirac)
    assert np.allclose(m, expect, atol=1e-12)


def test_direct_sum_and_decompose():
    t1 = two_point(1.0)
    t2 = two_point(2.0)
    s = fs.direct_sum(t1, t2)
    assert s.algebra.k == 4
    assert fs.validate_triple(s).passed
    parts = fs.decompose(s)
    assert len(parts) == 2
    assert all(p.algebra.k == 2 for p in parts)


def test_direct_sum_parity_mismatch():
    t_even = two_point()
    t_odd = fs.lattice_circle(3, 1.0)[1]
    with pytest.raises(ParityMismatch):
        fs.direct_sum(t_even, t_odd)


def test_conjugation_equivalence(rng):
    t = fs.lattice_interval(3, 1.5)[1]
    w = haar_unitary(rng, t.rep_dim)
    t2 = fs.conjugate_triple(t, w)
    assert fs.validate_triple(t2).passed
    assert fs.check_unitary_equivalence(t, t2, identity_witness(t, t2, w))


def test_equivalence_rejects_wrong_witness(rng):
    t = two_point()
    t2 = fs.conjugate_triple(t, haar_unitary(rng, 2))
    bad = identity_witness(t, t2, np.eye(2))
    assert not fs.check_unitary_equivalence(t, t2, bad)


def test_equivalence_distinguishes_scales():
    t1 = two_point(1.0)
    t2 = two_point(2.0)
    assert not fs.check_unitary_equivalence(t1, t2, identity_witness(t1, t2, np.eye(2)))


def test_triple_json_roundtrip():
    t = fs.lattice_interval(3, 1.0)[1]
    doc = triple_mod.triple_to_json(t)
    back = triple_mod.triple_from_json(doc)
    assert np.allclose(back.dirac, t.dirac)
    assert back.parity == t.parity
    assert fs.check_unitary_equivalence(
        t, back, identity_witness(t, back, np.eye(t.rep_dim))
    )
