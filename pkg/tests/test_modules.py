import json
import math
import random
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from findim import exactla as la
from findim.algebra import preset
from findim.extnat import ExtNat
from findim.homdim import nakayama_indecomposables
from findim.modules import (
    Module,
    ModuleError,
    ext_dims,
    hom_dim,
    injective_dimension,
    is_projective,
    minimal_resolution,
    module_from_json,
    module_to_json,
    named_module,
    projective_dimension,
    projective_module,
    random_presented_module,
    simple_module,
    syzygy,
    tor_dims,
)

ORACLE = json.loads((Path(__file__).parent / "data" / "nakayama_oracle.json").read_text())


def _ext(x) -> ExtNat:
    return ExtNat.infinite() if x == "inf" else ExtNat.finite(x)


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_pd_of_every_nakayama_indecomposable_matches_oracle(name):
    a = preset(name)
    got = {m.name: projective_dimension(m) for m in nakayama_indecomposables(a)}
    assert got == {k: _ext(v) for k, v in ORACLE[name]["pd"].items()}


def test_hom_between_projectives_of_A2():
    a = preset("A2")
    p1, p2 = projective_module(a, 0), projective_module(a, 1)
    assert hom_dim(p1, p2) == 0
    assert hom_dim(p2, p1) == 1


def test_tor_and_ext_over_A2():
    a = preset("A2")
    s1, s2 = simple_module(a, 0), simple_module(a, 1)
    t = tor_dims(simple_module(a, 1, "right"), s1, max_i=3)
    assert t[1] == ExtNat.finite(1)
    assert [e.value for e in ext_dims(s1, s2, max_i=2)] == [0, 1, 0]


def test_dual_numbers_simple_has_periodic_resolution():
    a = preset("dual")
    s = simple_module(a, 0)
    assert projective_dimension(s).is_infinite
    assert injective_dimension(s).is_infinite
    assert syzygy(s).dim == 1


def test_resolution_terms_of_A3_rad2_simple():
    a = preset("A3-rad2")
    res = minimal_resolution(simple_module(a, 0), depth=5)
    assert res.complete
    assert [sorted(v) for v in res.vertices] == [[0], [1], [2]]


def test_named_modules_and_json_round_trip():
    a = preset("ut2")
    for name in ("S1", "S2", "P1", "P2", "I1", "A", "DA"):
        m = named_module(a, name)
        back = module_from_json(json.loads(json.dumps(module_to_json(m))), a)
        assert back.dim == m.dim and all(np.all(x == y) for x, y in zip(back.action, m.action))
    with pytest.raises(ModuleError):
        named_module(a, "S9")


def test_invalid_action_is_rejected():
    a = preset("A2")
    bad = [la.eye(1) for _ in range(a.dim)]
    with pytest.raises(ModuleError):
        Module(a, "left", bad, dim=1)


ALGS = ["A2", "A3-rad2", "nak32", "kronecker-trunc"]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ALGS), st.integers(0, 10_000), st.integers(0, 10_000))
def test_pd_of_direct_sum_is_max(name, s1, s2):
    a = preset(name)
    m = random_presented_module(a, random.Random(s1))
    n = random_presented_module(a, random.Random(s2))
    assert projective_dimension(m.direct_sum(n)) == projective_dimension(m).max(projective_dimension(n))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ALGS), st.integers(0, 10_000), st.integers(0, 10_000), st.integers(0, 10_000))
def test_hom_is_additive(name, s1, s2, s3):
    a = preset(name)
    m, n, x = (random_presented_module(a, random.Random(s)) for s in (s1, s2, s3))
    assert hom_dim(m.direct_sum(n), x) == hom_dim(m, x) + hom_dim(n, x)
    assert hom_dim(x, m.direct_sum(n)) == hom_dim(x, m) + hom_dim(x, n)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ALGS), st.integers(0, 10_000))
def test_syzygy_drops_pd_by_one(name, s):
    a = preset(name)
    m = random_presented_module(a, random.Random(s))
    p = projective_dimension(m)
    if is_projective(m):
        assert p == ExtNat.finite(0)
    elif p.is_finite:
        assert projective_dimension(syzygy(m)) == ExtNat.finite(p.value - 1)
