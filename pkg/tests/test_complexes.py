import math
import random

import pytest

from findim import exactla as la
from findim.algebra import preset
from findim.complexes import (
    BoundedComplex,
    ChainMap,
    ComplexError,
    cohomology_dim,
    complex_from_json,
    complex_to_json,
    cone,
    dual_complex,
    direct_sum,
    homological_cowidth,
    homological_width,
    is_acyclic,
    is_contractible,
    is_null_homotopic,
    projective_normalize,
    resolution_complex,
    shift,
    sup_inf,
)
from findim.extnat import ExtNat
from findim.modules import (
    dual_module,
    injective_dimension,
    projective_module,
    random_presented_module,
    simple_module,
)


def test_width_of_a_simple_is_its_pd():
    a = preset("A3-rad2")
    assert homological_width(projective_normalize(simple_module(a, 0)).complex) == ExtNat.finite(2)


def test_width_of_a_projective_is_zero():
    a = preset("A2")
    assert homological_width(BoundedComplex.from_module(projective_module(a, 0))) == ExtNat.finite(0)


@pytest.mark.parametrize("name", ["A2", "A3-rad2", "ut2"])
def test_cowidth_of_injective_coresolution_is_injective_dimension(name):
    a = preset(name)
    for v in range(a.num_vertices):
        s = simple_module(a, v)
        cores = dual_complex(resolution_complex(dual_module(s)))
        assert homological_cowidth(cores) == injective_dimension(s)


def test_cone_of_identity_is_contractible_and_acyclic():
    a = preset("ut2")
    r = resolution_complex(simple_module(a, 0))
    c = cone(ChainMap.identity(r))
    assert is_acyclic(c)
    assert is_contractible(c)
    assert sup_inf(c) == (-math.inf, math.inf)
    assert homological_width(c) == ExtNat.finite(0)


def test_sup_inf_of_a_resolution():
    a = preset("A3-rad2")
    r = resolution_complex(simple_module(a, 0))
    assert (r.lo, r.hi) == (-2, 0)
    assert sup_inf(r) == (0, 0)


def test_zero_map_is_null_homotopic_and_identity_on_a_simple_is_not():
    a = preset("A2")
    c = BoundedComplex.from_module(simple_module(a, 0))
    assert is_null_homotopic(ChainMap.zero(c, c)) is not None
    assert is_null_homotopic(ChainMap.identity(c)) is None


def test_shift_moves_cohomology():
    a = preset("A2")
    r = resolution_complex(simple_module(a, 0))
    for i in range(-3, 3):
        assert cohomology_dim(shift(r, 2), i) == cohomology_dim(r, i + 2)


def test_width_unchanged_by_adding_a_contractible_summand():
    rng = random.Random(5)
    a = preset("kronecker-trunc")
    for _ in range(5):
        p = resolution_complex(random_presented_module(a, rng))
        c = cone(ChainMap.identity(resolution_complex(random_presented_module(a, rng))))
        assert homological_width(direct_sum(p, c)) == homological_width(p)


def test_invalid_differentials_are_rejected():
    a = preset("A2")
    p1, p2 = projective_module(a, 0), projective_module(a, 1)
    with pytest.raises(ComplexError):
        BoundedComplex(0, [p1, p1, p1], [la.eye(p1.dim), la.eye(p1.dim)])
    with pytest.raises(ComplexError):
        BoundedComplex(0, [p1, p2], [])


def test_json_round_trip():
    a = preset("A3")
    r = resolution_complex(simple_module(a, 0))
    back = complex_from_json(complex_to_json(r), a)
    assert back.lo == r.lo and [t.dim for t in back.terms] == [t.dim for t in r.terms]
    assert all(cohomology_dim(back, i) == cohomology_dim(r, i) for i in range(r.lo, r.hi + 1))


def test_normalization_preserves_cohomology():
    rng = random.Random(11)
    a = preset("A3-rad2")
    for _ in range(5):
        m = random_presented_module(a, rng)
        c = BoundedComplex.from_module(m)
        n = projective_normalize(c).complex
        for i in range(min(n.lo, 0), max(n.hi, 0) + 1):
            assert cohomology_dim(n, i) == cohomology_dim(c, i)
