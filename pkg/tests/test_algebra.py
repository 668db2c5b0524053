import json

import numpy as np
import pytest

from findim import exactla as la
from findim.algebra import (
    PRESETS,
    AlgebraError,
    BasedAlgebra,
    Bimodule,
    algebra_from_json,
    algebra_to_json,
    basic_algebra,
    corner,
    find_isomorphism,
    ideal_closure,
    is_ring_epimorphism,
    load_algebra,
    preset,
    quotient_algebra,
    triangular_matrix_algebra,
    trivial_extension,
)

ALL = sorted(PRESETS)


@pytest.mark.parametrize("name", ALL)
def test_presets_are_associative_and_unital(name):
    a = preset(name)
    a.validate()
    assert a.associativity_failure() is None
    u = a.unit
    for i in range(a.dim):
        b = a.basis_vector(i)
        assert np.all(a.mul(u, b) == b) and np.all(a.mul(b, u) == b)


@pytest.mark.parametrize("name", ALL)
def test_json_round_trip(name):
    a = preset(name)
    b = algebra_from_json(json.loads(json.dumps(algebra_to_json(a))))
    assert a.table_equal(b)


def test_nonassociative_table_reports_a_triple():
    c = np.empty((3, 3, 3), dtype=object)
    c[...] = la.rat(0)
    for i in range(3):
        c[0, i, i] = c[i, 0, i] = la.rat(1)
    c[1, 1, 2] = la.rat(1)
    c[1, 2, 1] = la.rat(1)
    with pytest.raises(AlgebraError, match="triple"):
        BasedAlgebra(c, la.vec([1, 0, 0]))


def test_unknown_preset():
    with pytest.raises(AlgebraError, match="unknown preset"):
        preset("nope")


def test_load_algebra_accepts_preset_names():
    assert load_algebra("A2").table_equal(preset("A2"))


def test_dimensions_and_cartan():
    assert [preset(n).dim for n in ("k", "A2", "dual", "nak3", "ut2", "kronecker-trunc")] == [1, 3, 2, 3, 3, 4]
    assert preset("A2").num_vertices == 2
    assert preset("A2").cartan.sum() == 3


def test_triangular_k_k_k_is_A2():
    k = preset("k")
    t = triangular_matrix_algebra(k, k, Bimodule.simple(k, k))
    assert t.dim == 3
    assert find_isomorphism(t, preset("A2")) is not None


def test_dual_numbers_are_trivial_extension_of_k():
    k = preset("k")
    te = trivial_extension(k, Bimodule.regular(k))
    assert find_isomorphism(te.algebra, preset("dual")) is not None
    assert find_isomorphism(preset("dual"), preset("A2")) is None


def test_corner_and_quotient_dimensions():
    a = preset("A3")
    e = a.idempotents[0] + a.idempotents[1]
    cd = corner(a, e)
    assert cd.algebra.dim == 3
    rad, _ = a.radical
    q = quotient_algebra(a, rad)
    assert q.algebra.dim == 3 and q.algebra.is_semisimple()
    assert is_ring_epimorphism(q.projection)


def test_ideal_closure_of_an_idempotent():
    a = preset("A2")
    basis, _ = ideal_closure(a, [a.idempotents[1]])
    # A e2 A = span(e2, arrow)
    assert basis.shape[0] == 2


def test_basic_algebra_of_matrix_ring_is_k():
    k = preset("k")
    m2 = triangular_matrix_algebra(k, k, Bimodule.regular(k))
    assert basic_algebra(m2).algebra.dim <= m2.dim
    assert basic_algebra(preset("A2")).algebra.dim == 3


def test_opposite_is_an_involution():
    a = preset("kronecker-trunc")
    assert a.opposite().opposite().table_equal(a)
