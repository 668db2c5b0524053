import json
import math
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from findim.algebra import preset
from findim.extnat import ExtNat
from findim.homdim import (
    BOUNDS,
    BoundError,
    Bracket,
    bound_sides,
    compare,
    evaluate_bound,
    finitistic_dimension,
    global_dimension,
    is_nakayama,
    is_self_injective,
    radical_series,
)
from findim.modules import projective_module
from oracles import nakayama_table

DATA = Path(__file__).parent / "data" / "nakayama_oracle.json"
ORACLE = json.loads(DATA.read_text())


def _dec(x):
    return math.inf if x == "inf" else x


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_oracle_reproduces_its_frozen_output(name):
    t = nakayama_table(name)
    frozen = ORACLE[name]
    assert t["fd"] == frozen["fd"] and t["gd"] == _dec(frozen["gd"])
    assert t["pd"] == {k: _dec(v) for k, v in frozen["pd"].items()}


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_fd_and_gd_match_frozen_oracle(name):
    a = preset(name)
    fd = finitistic_dimension(a)
    assert fd.value == Bracket.exact(ORACLE[name]["fd"])
    gd = global_dimension(a)
    want = ORACLE[name]["gd"]
    assert gd == (ExtNat.infinite() if want == "inf" else ExtNat.finite(want))


def test_structural_predicates():
    assert all(is_nakayama(preset(n)) for n in ORACLE)
    assert not is_nakayama(preset("kronecker-trunc"))
    assert is_self_injective(preset("dual")) and is_self_injective(preset("cyc2"))
    assert not is_self_injective(preset("A2"))
    assert radical_series(projective_module(preset("nak3"), 0)) == [3, 2, 1, 0]


def test_kronecker_fd_is_its_global_dimension():
    rep = finitistic_dimension(preset("kronecker-trunc"))
    assert rep.value == Bracket.exact(1) and rep.method == "formula"


def test_self_injective_cyclic_algebra_has_fd_zero():
    rep = finitistic_dimension(preset("cyc2"))
    assert rep.value == Bracket.exact(0)


def test_compare_three_outcomes():
    assert compare(Bracket.exact(1), Bracket.exact(1)) == "verified"
    assert compare(Bracket.exact(3), Bracket(1, 2)) == "violated"
    assert compare(Bracket(0, None), Bracket.exact(2)) == "undetermined"
    assert compare(Bracket.exact(1), Bracket(math.inf, math.inf)) == "verified"


def test_bracket_arithmetic():
    assert Bracket(1, 2) + Bracket(0, None) == Bracket(1, None)
    assert Bracket(1, 2) + 3 == Bracket(4, 5)
    assert Bracket.exact(2).abs_diff(Bracket.exact(5)) == Bracket(3, 3)
    assert str(Bracket(2, None)) == "[2, ?]"
    assert Bracket(math.inf, math.inf).to_json() == {"lo": "inf", "hi": "inf"}
    with pytest.raises(ValueError):
        Bracket(3, 1)


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20))
def test_triangular_bound_evaluates_to_sum_plus_one(s, t, b):
    inputs = {"fd_S": ExtNat.finite(s), "fd_T": ExtNat.finite(t), "fd_B": ExtNat.finite(b)}
    assert evaluate_bound("triangular", inputs) == ExtNat.finite(s + t + 1)
    lhs, rhs = bound_sides("triangular", inputs)
    assert compare(lhs, rhs) == ("verified" if b <= s + t + 1 else "violated")


def test_infinite_input_makes_the_bound_infinite():
    inputs = {"fd_S": ExtNat.finite(0), "fd_T": ExtNat.infinite(), "fd_B": ExtNat.finite(0)}
    assert evaluate_bound("triangular", inputs).is_infinite


def test_missing_and_unknown_bounds():
    with pytest.raises(BoundError, match="missing fd_T"):
        evaluate_bound("triangular", {"fd_S": 0, "fd_B": 0})
    with pytest.raises(BoundError, match="unknown bound"):
        evaluate_bound("nope", {})


def test_every_bound_accepts_its_declared_inputs():
    for bid, b in BOUNDS.items():
        lhs, rhs = bound_sides(bid, {k: 0 for k in b.inputs})
        assert lhs.is_exact and rhs.is_exact, bid


def test_gorenstein_rule_on_triangular_dual_numbers():
    from findim.algebra import Bimodule, triangular_matrix_algebra

    d = preset("dual")
    t = triangular_matrix_algebra(d, d, Bimodule.regular(d))
    assert not is_nakayama(t) and not is_self_injective(t)
    assert global_dimension(t).is_infinite
    rep = finitistic_dimension(t)
    assert rep.value == Bracket.exact(1) and rep.method == "formula"
    assert "Gorenstein" in rep.witnesses[0]
