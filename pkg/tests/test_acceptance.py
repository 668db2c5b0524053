"""Acceptance criteria 1-12, one test each; every test prints a PASS/FAIL line.

All comparisons are exact (rational arithmetic, tolerance 0).
"""

import functools
import random

from findim import exactla as la
from findim.algebra import (
    Bimodule,
    find_isomorphism,
    ideal_closure,
    preset,
    quotient_algebra,
    triangular_matrix_algebra,
    trivial_extension,
)
from findim.cli import main as cli_main
from findim.complexes import (
    BoundedComplex,
    ChainMap,
    chain_map_space,
    cohomology_dim,
    cone,
    direct_sum,
    homological_width,
    is_contractible,
    projective_normalize,
    resolution_complex,
    shift,
)
from findim.contexts import (
    check_exact_context,
    check_exact_pair,
    is_homological_epimorphism,
    milnor_context,
    nakayama_triangular_instances,
    nc_tensor_quotient_case,
    relative_end_quotient,
    report_suite,
    verify_inequality,
)
from findim.homdim import finitistic_dimension, global_dimension
from findim.modules import (
    Module,
    ModuleHom,
    is_covariant_morphism,
    minimal_resolution,
    projective_dimension,
    random_presented_module,
    regular_module,
    simple_module,
    tor_dims,
)

CAP = 24


@functools.lru_cache(maxsize=None)
def _suite():
    return tuple(report_suite(seed=0, cap=CAP))


def _guard(number):
    """Turn an unexpected exception into a FAIL line for the criterion."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(**fixtures):
            try:
                fn(**fixtures)
            except AssertionError:
                raise
            except Exception as exc:  # reported as a FAIL line
                fixtures["criterion"](number, False, f"error: {exc!r}")

        return wrapper

    return deco


def _finite_pd_modules(names, count, seed, max_top=3, max_rel=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = preset(names[len(out) % len(names)])
        m = random_presented_module(a, rng, max_top=max_top, max_rel=max_rel)
        if m.dim == 0:
            continue
        p = projective_dimension(m, CAP)
        if p.is_finite:
            out.append((a, m, p.value))
    return out


@_guard(1)
def test_criterion_01_width_equals_pd(criterion):
    mods = _finite_pd_modules(["A2", "ut2", "nak3", "kronecker-trunc"], 25, seed=1)
    bad = []
    for a, m, p in mods:
        via_resolution = homological_width(projective_normalize(m, CAP).complex, CAP)
        # second route: normalize M as a one-term complex (cycle-covering construction)
        via_complex = homological_width(projective_normalize(BoundedComplex.from_module(m), CAP).complex, CAP)
        if not (via_resolution.is_finite and via_resolution.value == p and via_complex.value == p):
            bad.append((a.name, m.dim, p, str(via_resolution), str(via_complex)))
    pds = sorted({p for _, _, p in mods})
    criterion(1, not bad, f"width = pd on {len(mods)} seeded modules (pd values {pds}); mismatches {bad}")


def _random_projective_complex(rng, a):
    m = random_presented_module(a, rng, max_top=2, max_rel=2)
    r = resolution_complex(m, CAP)
    return shift(r, rng.randint(-2, 2))


def _contractible(rng, a):
    q = resolution_complex(random_presented_module(a, rng, max_top=2, max_rel=1), CAP)
    return shift(cone(ChainMap.identity(q)), rng.randint(-2, 2))


@_guard(2)
def test_criterion_02_homotopy_invariance(criterion):
    rng = random.Random(2)
    names = ["A2", "ut2", "A3", "kronecker-trunc", "A3-rad2"]
    bad = []
    for t in range(25):
        a = preset(names[t % len(names)])
        p = _random_projective_complex(rng, a)
        c = _contractible(rng, a)
        assert is_contractible(c)
        w0 = homological_width(p, CAP)
        w1 = homological_width(direct_sum(p, c), CAP)
        if w0 != w1:
            bad.append((a.name, str(w0), str(w1)))
    criterion(2, not bad, f"width(P + C) = width(P) on 25 seeded pairs; mismatches {bad}")


@_guard(3)
def test_criterion_03_cone_support(criterion):
    rng = random.Random(3)
    names = ["A2", "A3", "ut2", "A3-rad2", "kronecker-trunc"]
    checked, bad = 0, []
    while checked < 10:
        a = preset(names[checked % len(names)])
        x = _random_projective_complex(rng, a)
        z = _random_projective_complex(rng, a)
        n, m = x.support()[0], z.support()[0]
        # triangle X -> Y -> Z -> X[1]: Y is the cone of Z[-1] -> X
        zm1 = shift(z, -1)
        basis = chain_map_space(zm1, x)
        comps = {}
        for f in basis:
            c = rng.randint(-2, 2)
            for i in f.degrees():
                comps[i] = comps.get(i, la.zeros(*f.f(i).shape)) + c * f.f(i)
        g = ChainMap(zm1, x, comps)
        if all(la.is_zero(F) for F in g.components.values()):
            continue  # only nonzero maps count
        y = cone(g)
        norm = projective_normalize(y, CAP).complex
        lo = norm.support()[0] if norm.support() else None
        same_h = all(cohomology_dim(y, i) == cohomology_dim(norm, i) for i in range(min(y.lo, norm.lo), max(y.hi, norm.hi) + 1))
        if (lo is not None and lo < min(n, m)) or not same_h:
            bad.append((a.name, n, m, lo))
        checked += 1
    criterion(3, not bad, f"normalized cone in degrees >= min(n, m) for 10 seeded nonzero maps; failures {bad}")


@_guard(4)
def test_criterion_04_triangular(criterion):
    k = preset("k")
    b = triangular_matrix_algebra(k, k, Bimodule.simple(k, k))
    iso = find_isomorphism(b, preset("A2")) is not None
    rep = verify_inequality("triangular", {"S": "k", "T": "k", "M": "simple"})
    base_ok = iso and rep.verdict == "verified" and rep.lhs.is_exact and rep.lhs.lo == 1 and rep.rhs.lo == 1 and rep.rhs.is_exact
    bad = []
    for inst in nakayama_triangular_instances(10, 0):
        r = verify_inequality("triangular", inst)
        methods = {finitistic_dimension(x).method for x in (preset(inst["S"]), preset(inst["T"]))}
        exact = r.lhs.is_exact and r.rhs.is_exact
        if r.verdict != "verified" or not exact or not methods <= {"exact-list", "formula"}:
            bad.append((inst["name"], str(r.lhs), str(r.rhs), r.verdict))
    criterion(4, base_ok and not bad,
              f"triangular(k,k,k) = A2: {iso}, lhs {rep.lhs} <= rhs {rep.rhs}; 10 Nakayama instances exact and verified; failures {bad}")


@_guard(5)
def test_criterion_05_stratifying(criterion):
    rep = verify_inequality("stratifying", {"R": "ut2", "e": [2]})
    low = verify_inequality("stratifying_lower", {"R": "ut2", "e": [2]})
    hyp = {h.name: h.status for h in rep.hypotheses}
    vals = {k: (b.lo, b.hi) for k, b in rep.inputs.items()}
    ok = (
        vals == {"fd_R": (1, 1), "fd_eRe": (0, 0), "fd_quot": (0, 0), "pd_quot": (1, 1)}
        and
        all(s == "holds" for s in hyp.values())
        and len(hyp) == 3
        and (low.lhs.lo, low.lhs.hi, low.rhs.lo, low.rhs.hi) == (0, 0, 1, 1)
        and (rep.lhs.lo, rep.lhs.hi, rep.rhs.lo, rep.rhs.hi) == (1, 1, 2, 2)
        and rep.verdict == low.verdict == "verified"
    )
    criterion(5, ok, f"ut2, e22: hypotheses {hyp}; fd(R/ReR) {low.lhs} <= fd(R) {rep.lhs} <= {rep.rhs}")


@_guard(6)
def test_criterion_06_homological_epi(criterion):
    rows = [r for r in _suite() if r.bound_id == "homo_ring"]
    bad = []
    certified = 0
    for row in rows:
        if "homological" in row.detail:
            continue  # hypothesis not certified: must not be verified
        certified += 1
        if row.verdict != "verified":
            bad.append(row.instance)
    rejected_ok = all(r.verdict == "rejected" for r in rows if "homological" in r.detail)
    nak3 = preset("nak3")
    q = quotient_algebra(nak3, ideal_closure(nak3, [nak3.basis_vector(2)])[0])
    iso_dual = find_isomorphism(q.algebra, preset("dual")) is not None
    hv = is_homological_epimorphism(q.projection, CAP)
    rep = verify_inequality("homo_ring", {"R": "nak3", "rad_power": 2})
    ok = not bad and rejected_ok and certified >= 10 and iso_dual and hv.tor[1].value != 0 and rep.verdict == "rejected"
    criterion(6, ok, f"{certified} certified surjections verified, failures {bad}; nak3 -> dual: Tor_1 = {hv.tor[1]}, verdict {rep.verdict}")


@_guard(7)
def test_criterion_07_exact_context(criterion):
    ut2 = preset("ut2")
    i1 = ideal_closure(ut2, [ut2.basis_vector(2)])[0]
    i2 = la.zeros(0, 3)
    ctx, _, _, q12 = milnor_context(ut2, i1, i2)
    ec, ep = check_exact_context(ctx), check_exact_pair(ctx)
    nc = nc_tensor_quotient_case(ut2, i1, i2)
    iso = find_isomorphism(nc.algebra, q12.algebra) is not None and nc.certificate is not None
    inst = {"R": "ut2", "I1": ["e22"], "I2": []}
    reps = [verify_inequality(b, inst) for b in ("mod1a_1", "mod1a_2a", "mod1a_2b")]
    det = all(r.lhs.is_exact and r.rhs.is_exact and r.verdict == "verified" for r in reps)
    summary = ", ".join(f"{r.bound_id} {r.lhs}<={r.rhs}" for r in reps)
    criterion(7, bool(ec) and bool(ep) and iso and det,
              f"context {bool(ec)}, pair {bool(ep)}, tensor ring = R/(I1+I2) {iso}; {summary}")


@_guard(8)
def test_criterion_08_trivial_extension(criterion):
    k = preset("k")
    te = trivial_extension(k, Bimodule.simple(k, k)).algebra
    iso = find_isomorphism(te, preset("dual"))
    iso_ok = iso is not None and iso.is_injective() and iso.is_surjective()
    ident = [verify_inequality(b, {"R": "dual", "M": "simple"}) for b in ("mod1b_a", "mod1b_b")]
    ident_ok = all(r.verdict == "verified" for r in ident)
    epi = [verify_inequality(b, {"R": "nak3", "rad_power": 2, "M": "simple"}) for b in ("mod1b_a", "mod1b_b")]
    tor_h = [h for h in epi[0].hypotheses if h.name.startswith("Tor")][0]
    consistent = all((r.verdict == "rejected") == (tor_h.status == "fails") for r in epi)
    criterion(8, iso_ok and ident_ok and consistent and tor_h.status == "fails",
              f"dual = k x k: {iso_ok}; identity: {[r.verdict for r in ident]}; nak3 -> dual: Tor {tor_h.status}, {[r.verdict for r in epi]}")


@_guard(9)
def test_criterion_09_tor_balance(criterion):
    rng = random.Random(9)
    names = ["A2", "ut2", "A3", "A3-rad2", "kronecker-trunc", "nak32"]
    pairs, bad = 0, []
    while pairs < 20:
        a = preset(names[pairs % len(names)])
        n = random_presented_module(a, rng, max_top=2, max_rel=2)
        mo = random_presented_module(a.opposite(), rng, max_top=2, max_rel=2)
        m = Module(a, "right", mo.action, dim=mo.dim)
        if not (n.dim and m.dim and projective_dimension(n, CAP).is_finite and projective_dimension(m, CAP).is_finite):
            continue
        left = tor_dims(m, n, max_i=6, cap=CAP, route="left")
        right = tor_dims(m, n, max_i=6, cap=CAP, route="right")
        if [d.value for d in left] != [d.value for d in right] or not all(d.is_finite for d in left + right):
            bad.append((a.name, [str(d) for d in left], [str(d) for d in right]))
        pairs += 1
    criterion(9, not bad, f"left and right resolutions agree on 20 seeded pairs up to degree 6; mismatches {bad}")


@_guard(10)
def test_criterion_10_global_dimension(criterion):
    rep = verify_inequality("gldim_2", {"R": "ut2", "e": [2]})
    vals = {k: (b.lo, b.hi) for k, b in rep.inputs.items()}
    expected = {"gd_R1": (0, 0), "gd_R2": (1, 1), "gd_R3": (0, 0), "w_i": (1, 1), "w_j": (0, 0)}
    ok_strat = (
        rep.verdict == "verified"
        and vals == expected
        and (rep.lhs.lo, rep.lhs.hi, rep.rhs.lo, rep.rhs.hi) == (1, 1, 2, 2)
    )
    hyp_ok = all(h.status == "holds" for h in rep.hypotheses)
    dual = preset("dual")
    gd = global_dimension(dual, CAP)
    res = minimal_resolution(simple_module(dual, 0), CAP + 1, detect_period=True)
    ok_dual = gd.is_infinite and res.periodic is not None
    criterion(10, ok_strat and hyp_ok and ok_dual,
              f"inputs {vals}; gd(ut2) {rep.lhs} <= {rep.rhs}; gd(dual) = {gd} (periodic syzygy {res.periodic})")


@_guard(11)
def test_criterion_11_covariant(criterion):
    ut2 = preset("ut2")
    reg = regular_module(ut2)
    ib = ideal_closure(ut2, [ut2.basis_vector(2)])[0]
    sub = reg.submodule(ib)
    cov = is_covariant_morphism(ModuleHom(sub.module, reg, sub.basis.T.copy()))
    rel = relative_end_quotient(reg, sub.module)
    rel_ok = find_isomorphism(rel, preset("k")) is not None
    inst = {"R": "ut2", "e": [2]}
    up, low = verify_inequality("ars_1", inst), verify_inequality("ars_1_lower", inst)
    ok = (
        cov.covariant
        and rel_ok
        and up.verdict == low.verdict == "verified"
        and low.lhs.is_exact and low.lhs.lo == 0
        and up.lhs.is_exact and up.rhs.is_exact
    )
    criterion(11, ok, f"covariant {cov.covariant}; End_I(R) = k {rel_ok}; fd(R/I) {low.lhs} <= fd(End(R+I)) {up.lhs} <= {up.rhs}")


@_guard(12)
def test_criterion_12_soundness(criterion, capsys):
    rows = _suite()
    counts = {}
    for r in rows:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    code_violation = cli_main(["verify", "triangular", "--input", "fd_S=0", "--input", "fd_T=0", "--input", "fd_B=5"])
    capsys.readouterr()
    ok = counts.get("violated", 0) == 0 and counts.get("verified", 0) >= 12 and code_violation == 2
    criterion(12, ok, f"report_suite: {counts}; a violated verdict exits with code {code_violation}")
