import json

import pytest

from findim import exactla as la
from findim.algebra import AlgebraHom, Bimodule, find_isomorphism, ideal_closure, identity_hom, preset, quotient_algebra
from findim.contexts import (
    ContextError,
    check_exact_context,
    check_exact_pair,
    functor_inf_estimate,
    instance_label,
    is_homological_epimorphism,
    milnor_context,
    nakayama_triangular_instances,
    nc_tensor_trivial_extension_case,
    stratifying_recollement_data,
    suite_instances,
    verify_inequality,
    vertex_idempotent,
)
from findim.extnat import ExtNat
from findim.homdim import is_nakayama
from findim.modules import simple_module


def test_identity_is_a_homological_epimorphism():
    hv = is_homological_epimorphism(identity_hom(preset("nak3")))
    assert hv.status == "holds"


def test_quotient_by_projective_idempotent_ideal_is_homological():
    a = preset("A2")
    q = quotient_algebra(a, ideal_closure(a, [a.idempotents[1]])[0])
    assert is_homological_epimorphism(q.projection).status == "holds"


def test_radical_quotient_of_nak3_is_not_homological():
    a = preset("nak3")
    q = quotient_algebra(a, ideal_closure(a, [a.basis_vector(2)])[0])
    hv = is_homological_epimorphism(q.projection)
    assert hv.status == "fails" and hv.tor[1] == ExtNat.finite(1)


def test_non_epimorphism_is_refused():
    k, a2 = preset("k"), preset("A2")
    # unital inclusion k -> A2 is not surjective and not an epimorphism
    f = AlgebraHom(k, a2, a2.unit.reshape(1, -1))
    with pytest.raises(ContextError):
        is_homological_epimorphism(f)


def test_milnor_context_injectivity_tracks_the_intersection():
    a = preset("ut2")
    i1 = ideal_closure(a, [a.idempotents[1]])[0]
    # I1 and rad overlap in the arrow, so R -> R/I1 x R/rad is not injective
    cert = check_exact_context(milnor_context(a, i1, a.radical[0])[0])
    assert not cert.holds and not cert.injective
    assert cert.composite_zero and cert.middle_exact
    ok = check_exact_context(milnor_context(a, i1, la.zeros(0, a.dim))[0])
    assert ok.holds
    assert check_exact_pair(milnor_context(a, i1, la.zeros(0, a.dim))[0]).holds


def test_trivial_extension_coproduct_square_commutes():
    k = preset("k")
    res = nc_tensor_trivial_extension_case(identity_hom(k), Bimodule.simple(k, k))
    assert res.square_commutes
    assert find_isomorphism(res.algebra, preset("dual")) is not None


def test_stratifying_data_for_ut2():
    r = preset("ut2")
    d = stratifying_recollement_data(r, vertex_idempotent(r, [2]))
    assert d.pd_quotient == ExtNat.finite(1)
    assert d.homological.status == "holds"


def test_functor_inf_of_regular_bimodule_is_zero():
    a = preset("A2")
    est = functor_inf_estimate(Bimodule.regular(a), [simple_module(a, v) for v in range(2)])
    assert est.inf == 0 and est.fd == 0 and not est.truncated


def test_rejected_when_a_hypothesis_fails():
    rep = verify_inequality("homo_ring", {"R": "nak3", "rad_power": 2})
    assert rep.verdict == "rejected"
    assert any(h.status == "fails" for h in rep.hypotheses)


def test_undetermined_when_an_input_is_only_bounded_below():
    rep = verify_inequality("triangular", {"S": "A2", "T": "A2", "M": {"simple": [1, 2]}}, cap=2)
    assert rep.verdict == "undetermined"
    assert rep.unknown_inputs == ["fd_B"]
    full = verify_inequality("triangular", {"S": "A2", "T": "A2", "M": {"simple": [1, 2]}})
    assert full.verdict == "verified" and full.lhs.is_exact


def test_report_json_shape():
    rep = verify_inequality("triangular", {"S": "k", "T": "k", "M": "k"})
    js = json.loads(json.dumps(rep.to_json()))
    assert set(js) >= {"bound_id", "instance", "formula", "hypotheses", "lhs", "rhs", "verdict", "inputs"}
    assert js["inputs"]["fd_B"] == {"lo": 1, "hi": 1}


def test_bad_instances_raise_context_errors():
    with pytest.raises(ContextError, match="missing field"):
        verify_inequality("triangular", {"S": "k"})
    with pytest.raises(ContextError, match="formula-only|unknown bound"):
        verify_inequality("nope", {})
    with pytest.raises(ContextError):
        verify_inequality("triangular", {"S": "k", "T": "A2", "M": "regular"})


def test_instance_label_is_stable():
    assert instance_label({"S": "k", "T": "A2", "M": {"simple": [1, 2]}}) == 'M={"simple":[1,2]} S=k T=A2'
    assert instance_label({"name": "x", "S": "k"}) == "x"


def test_sampled_triangular_instances_are_nakayama_and_fixed():
    a = nakayama_triangular_instances(4, 0)
    assert a == nakayama_triangular_instances(4, 0)
    assert len(suite_instances()) > 100
