"""Exact contexts, homological epimorphisms and the inequality verification harness.

Instances are plain dicts (JSON-compatible).  Each bound id belongs to a
family of instances; a family builder computes every dimension the family's
bounds use together with the hypotheses each bound needs.  Verdicts:

* ``verified``: all hypotheses certified and ``lhs <= rhs`` for every value in
  the brackets;
* ``violated``: all hypotheses certified and ``lhs > rhs`` for every value;
* ``undetermined``: a bracket or a hypothesis is not decided;
* ``rejected``: some hypothesis fails, so the bound does not apply.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import exactla as la
from .algebra import (
    AlgebraError,
    AlgebraHom,
    BasedAlgebra,
    Bimodule,
    QuotientData,
    SubalgebraData,
    algebra_from_json,
    corner,
    find_isomorphism,
    identity_hom,
    ideal_closure,
    is_ring_epimorphism,
    load_algebra,
    preset,
    PRESETS,
    quotient_algebra,
    triangular_matrix_algebra,
    trivial_extension,
)
from .complexes import homological_width, projective_normalize
from .exactla import ZERO, zeros
from .extnat import ExtNat
from .homdim import (
    BOUNDS,
    Bracket,
    basic_form,
    bound_sides,
    compare,
    finitistic_dimension,
    global_dimension,
    is_nakayama,
    nakayama_indecomposables,
)
from .modules import (
    DEFAULT_CAP,
    Module,
    ModuleError,
    ModuleHom,
    dual_module,
    endomorphism_algebra,
    factor_through_ideal,
    hom_space,
    injective_dimension,
    is_covariant_morphism,
    projective_dimension,
    projective_module,
    projective_sum,
    regular_module,
    simple_module,
    tor_dims,
    tor_vanishing,
)

INF = math.inf


class ContextError(ValueError):
    """Malformed instance data or a construction whose preconditions fail."""


# ------------------------------------------------------------ small helpers
def _rows(a: BasedAlgebra, gens) -> np.ndarray:
    """Generator specs (labels or coefficient lists) as rows in ``a``."""
    out = []
    for g in gens or []:
        if isinstance(g, str):
            if g not in a.labels:
                raise ContextError(f"unknown basis label {g!r} for {a.name}; labels: {', '.join(a.labels)}")
            out.append(a.basis_vector(a.labels.index(g)))
        else:
            v = la.vec(g)
            if v.shape[0] != a.dim:
                raise ContextError(f"element needs {a.dim} coefficients")
            out.append(v)
    if not out:
        return zeros(0, a.dim)
    return np.array(out, dtype=object).reshape(len(out), a.dim)


def vertex_idempotent(a: BasedAlgebra, vertices) -> np.ndarray:
    """Sum of the idempotents at the given 1-based vertices."""
    if a.idempotents is None:
        raise ContextError("algebra has no declared idempotents")
    e = zeros(a.dim)
    for v in vertices:
        if not 1 <= int(v) <= a.num_vertices:
            raise ContextError(f"vertex {v} out of range 1..{a.num_vertices}")
        e = e + a.idempotents[int(v) - 1]
    return e


def left_module_via(f: AlgebraHom) -> Module:
    """Target of ``f`` as a left module over its source."""
    s = f.target
    return Module(f.source, "left", [s.left_matrix(f.matrix[i]) for i in range(f.source.dim)], dim=s.dim, check=False)


def right_module_via(f: AlgebraHom) -> Module:
    s = f.target
    return Module(f.source, "right", [s.right_matrix(f.matrix[i]) for i in range(f.source.dim)], dim=s.dim, check=False)


def induced_hom(src: QuotientData, dst: QuotientData) -> AlgebraHom:
    """``R/I -> R/J`` induced by the identity of R (needs I inside J)."""
    for row in src.ideal:
        if not la.is_zero(dst.projection(row)):
            raise ContextError("ideal of the source quotient is not contained in the target ideal")
    m = dst.projection.matrix[src.lift_columns, :]
    return AlgebraHom(src.algebra, dst.algebra, m)


def _quotient_action(A: np.ndarray, proj: np.ndarray, free: list[int]) -> np.ndarray:
    return la.matmul(proj.T, A[:, free]) if free else zeros(0, 0)


def _tor_vanish(m: Module, n: Module, start: int, cap: int) -> str:
    if m.dim == 0 or n.dim == 0:
        return "holds"
    return tor_vanishing(m, n, start, cap)


def _status_of(word: str) -> str:
    return {"holds": "holds", "fails": "fails"}.get(word, "undetermined")


def _pd_status(p: ExtNat) -> str:
    if p.is_finite:
        return "holds"
    return "fails" if p.is_infinite else "undetermined"


# ----------------------------------------------------------- exact contexts
@dataclass
class ExactContext:
    """``(lambda, mu, M, m)`` with lambda: R -> S, mu: R -> T and M an S-T-bimodule."""

    lam: AlgebraHom
    mu: AlgebraHom
    m_bimodule: Bimodule
    m_element: np.ndarray


@dataclass
class ExactnessCertificate:
    holds: bool
    injective: bool
    composite_zero: bool
    middle_exact: bool
    surjective: bool
    ranks: dict

    def __bool__(self) -> bool:
        return self.holds


def _context_maps(ctx: ExactContext):
    lam, mu, M, m = ctx.lam, ctx.mu, ctx.m_bimodule, la.vec(ctx.m_element)
    s, t = lam.target, mu.target
    if lam.source.dim != mu.source.dim or not lam.source.table_equal(mu.source):
        raise ContextError("lambda and mu need the same source ring")
    if M.dim != m.shape[0]:
        raise ContextError("element m does not lie in M")
    phi = np.concatenate([lam.matrix, mu.matrix], axis=1)
    psi = zeros(s.dim + t.dim, M.dim)
    for i in range(s.dim):
        psi[i, :] = la.matmul(M.left_act(s.basis_vector(i)), m)
    for j in range(t.dim):
        psi[s.dim + j, :] = -la.matmul(M.right_act(t.basis_vector(j)), m)
    return phi, psi


def check_exact_context(ctx: ExactContext) -> ExactnessCertificate:
    """Rank certificate for exactness of ``0 -> R -> S + T -> M -> 0``."""
    phi, psi = _context_maps(ctx)
    r = ctx.lam.source.dim
    mid = phi.shape[1]
    rk_phi, rk_psi = la.rank(phi), la.rank(psi)
    comp = la.is_zero(la.matmul(phi, psi))
    inj = rk_phi == r
    surj = rk_psi == ctx.m_bimodule.dim
    middle = comp and rk_phi == mid - rk_psi
    ranks = {"dim_R": r, "dim_S+T": mid, "dim_M": ctx.m_bimodule.dim, "rank_in": rk_phi, "rank_out": rk_psi}
    return ExactnessCertificate(inj and middle and surj, inj, comp, middle, surj, ranks)


@dataclass
class PairCertificate:
    holds: bool
    tensor_dim: int
    image_rank: int
    m_dim: int
    well_defined: bool

    def __bool__(self) -> bool:
        return self.holds


def check_exact_pair(ctx: ExactContext) -> PairCertificate:
    """Is ``S (x)_R T -> M, s (x) t -> s m t`` an isomorphism?"""
    M, m = ctx.m_bimodule, la.vec(ctx.m_element)
    s, t = ctx.lam.target, ctx.mu.target
    phi, psi = _context_maps(ctx)
    well = la.is_zero(la.matmul(phi, psi))
    tens = _tensor_dim(right_module_via(ctx.lam), left_module_via(ctx.mu))
    imgs = []
    for i in range(s.dim):
        L = M.left_act(s.basis_vector(i))
        for j in range(t.dim):
            imgs.append(la.matmul(L, la.matmul(M.right_act(t.basis_vector(j)), m)))
    rk = la.rank(np.array(imgs, dtype=object).reshape(len(imgs), M.dim)) if imgs and M.dim else 0
    return PairCertificate(well and tens == M.dim and rk == M.dim, tens, rk, M.dim, well)


def _tensor_dim(m: Module, n: Module) -> int:
    from .modules import tensor_over_algebra

    if m.dim == 0 or n.dim == 0:
        return 0
    return tensor_over_algebra(m, n).dim


def milnor_context(r: BasedAlgebra, i1, i2) -> tuple[ExactContext, QuotientData, QuotientData, QuotientData]:
    """Context ``R -> R/I1, R -> R/I2`` with ``M = R/(I1+I2)`` and ``m = 1``."""
    b1, _ = ideal_closure(r, i1)
    b2, _ = ideal_closure(r, i2)
    q1 = quotient_algebra(r, b1)
    q2 = quotient_algebra(r, b2)
    both = np.concatenate([b1, b2], axis=0) if b1.shape[0] + b2.shape[0] else zeros(0, r.dim)
    q12 = quotient_algebra(r, ideal_closure(r, both)[0])
    f1 = induced_hom(q1, q12)
    f2 = induced_hom(q2, q12)
    M = Bimodule.regular(q12.algebra).restrict(f1, f2)
    ctx = ExactContext(q1.projection, q2.projection, M, q12.algebra.unit)
    return ctx, q1, q2, q12


# --------------------------------------------------- homological epimorphisms
@dataclass
class HomologicalVerdict:
    verdict: str  # "homological (certified)" | "homological up to cap" | "not homological"
    tor: list[ExtNat]

    @property
    def status(self) -> str:
        return {"homological (certified)": "holds", "not homological": "fails"}.get(self.verdict, "undetermined")


def is_homological_epimorphism(f: AlgebraHom, cap: int = DEFAULT_CAP) -> HomologicalVerdict:
    """Decide ``Tor_i^R(S, S) = 0`` for ``i >= 1`` along a ring epimorphism."""
    if not is_ring_epimorphism(f):
        raise ContextError("map is not a ring epimorphism")
    sr, sl = right_module_via(f), left_module_via(f)
    word = _tor_vanish(sr, sl, 1, cap)
    tor = tor_dims(sr, sl, max_i=min(3, cap), cap=cap) if sl.dim else []
    verdict = {"holds": "homological (certified)", "fails": "not homological"}.get(word, "homological up to cap")
    return HomologicalVerdict(verdict, tor)


# ------------------------------------------------------------- tensor rings
@dataclass
class NCTensorResult:
    algebra: BasedAlgebra
    projection: AlgebraHom
    certificate: AlgebraHom | None  # iso to the quotient of R/I1 by the image of I2


def nc_tensor_quotient_case(r: BasedAlgebra, i1, i2, seed: int = 0) -> NCTensorResult:
    """``T (x)-box_R S`` for ``S = R/I1``, ``T = R/I2`` with ``I1 n I2 = 0``: it is ``R/(I1+I2)``."""
    b1, p1 = ideal_closure(r, i1)
    b2, _ = ideal_closure(r, i2)
    inter, _ = la.intersect(b1, b2)
    if inter.shape[0]:
        raise ContextError("the ideals intersect nontrivially")
    both = np.concatenate([b1, b2], axis=0) if b1.shape[0] + b2.shape[0] else zeros(0, r.dim)
    try:
        q = quotient_algebra(r, ideal_closure(r, both)[0])
        # second construction: (R/I1) / (image of I2)
        q1 = quotient_algebra(r, b1)
        img = q1.projection(b2) if b2.shape[0] else zeros(0, q1.algebra.dim)
        q2 = quotient_algebra(q1.algebra, ideal_closure(q1.algebra, img)[0])
    except AlgebraError as exc:
        raise ContextError(f"noncommutative tensor product is the zero ring ({exc})") from exc
    cert = find_isomorphism(q.algebra, q2.algebra, seed=seed)
    return NCTensorResult(q.algebra, q.projection, cert)


@dataclass
class TrivialExtensionCoproduct:
    algebra: BasedAlgebra  # S x M
    source: BasedAlgebra  # R x M
    rho: AlgebraHom  # S -> S x M
    lam_tilde: AlgebraHom  # R x M -> S x M
    mu: AlgebraHom  # R -> R x M
    square_commutes: bool


def nc_tensor_trivial_extension_case(lam: AlgebraHom, m: Bimodule) -> TrivialExtensionCoproduct:
    """Coproduct of ``S`` and ``R x M`` over ``R``: it is ``S x M``."""
    if not is_ring_epimorphism(lam):
        raise ContextError("map is not a ring epimorphism")
    s = lam.target
    sm = trivial_extension(s, m)
    mr = m.restrict(lam, lam)
    rm = trivial_extension(lam.source, mr)
    nr, ns, nm = lam.source.dim, s.dim, m.dim
    lt = zeros(nr + nm, ns + nm)
    lt[:nr, :ns] = lam.matrix
    lt[nr:, ns:] = la.eye(nm)
    lam_tilde = AlgebraHom(rm.algebra, sm.algebra, lt)
    rho = sm.inclusion
    mu = rm.inclusion
    comm = bool(np.all(lam.compose(rho).matrix == mu.compose(lam_tilde).matrix))
    return TrivialExtensionCoproduct(sm.algebra, rm.algebra, rho, lam_tilde, mu, comm)


# ----------------------------------------------------- recollement instance
def corner_module(m: Module, cd: SubalgebraData) -> Module:
    """``eM`` as a left module over the corner ``eAe``."""
    lm = m if m.side == "left" else None
    if lm is None:
        raise ContextError("corner_module needs a left module")
    E = m.act(cd.idempotent)
    basis, piv = la.row_basis(E.T, m.dim)
    acts = []
    for k in range(cd.algebra.dim):
        X = m.act(cd.basis[k])
        img = la.matmul(basis, X.T)
        acts.append(img[:, piv].T.copy() if piv else zeros(0, 0))
    return Module(cd.algebra, "left", acts, dim=len(piv), check=False)


@dataclass
class StratifyingData:
    algebra: BasedAlgebra
    idempotent: np.ndarray
    corner: SubalgebraData | None
    ideal: np.ndarray
    quotient: QuotientData | None
    Re: Module
    pd_ideal: ExtNat  # pd(_R ReR)
    pd_quotient: ExtNat  # pd(_R R/ReR) = w(i_* R1)
    pd_Re: ExtNat  # w(j_! R3)
    w_istar: ExtNat
    cw_j: ExtNat | None  # cw(j^! D(R2)) = id of e D(R) over eRe
    pd_Re_right: ExtNat | None  # pd of Re over eRe (j_! bounded)
    homological: HomologicalVerdict | None
    hypotheses: list = field(default_factory=list)


def stratifying_recollement_data(r: BasedAlgebra, e, cap: int = DEFAULT_CAP) -> StratifyingData:
    """Recollement data for the idempotent ``e``: corner eRe, quotient R/ReR and widths."""
    e = la.vec(e)
    if not np.all(r.mul(e, e) == e):
        raise ContextError("e is not idempotent")
    ideal, _ = ideal_closure(r, e.reshape(1, -1)) if not la.is_zero(e) else (zeros(0, r.dim), [])
    reg = regular_module(r)
    Re_rows = np.array([r.mul(r.basis_vector(i), e) for i in range(r.dim)], dtype=object).reshape(r.dim, r.dim)
    Re = reg.submodule(Re_rows).module
    ideal_mod = reg.submodule(ideal).module if ideal.shape[0] else Module(r, "left", [zeros(0, 0)] * r.dim, dim=0, check=False)
    quotient = None
    try:
        quotient = quotient_algebra(r, ideal)
    except AlgebraError:
        quotient = None
    quot_mod = reg.quotient(ideal).module
    cd = corner(r, e) if not la.is_zero(e) else None
    hyp = []
    pd_ideal = projective_dimension(ideal_mod, cap)
    pd_quot = projective_dimension(quot_mod, cap)
    pd_Re = projective_dimension(Re, cap)
    homol = None
    if quotient is not None:
        homol = is_homological_epimorphism(quotient.projection, cap)
        w_istar = projective_dimension(regular_module(quotient.algebra), cap)
    else:
        w_istar = ExtNat.finite(0)
    cw = pd_right = None
    if cd is not None:
        dr = dual_module(regular_module(r, "right"))
        cw = injective_dimension(corner_module(dr, cd), cap)
        # Re as a right eRe-module
        rows = la.row_basis(Re_rows, r.dim)
        basis, piv = rows
        acts = []
        for k in range(cd.algebra.dim):
            img = la.matmul(basis, r.right_matrix(cd.basis[k]).T)
            acts.append(img[:, piv].T.copy())
        pd_right = projective_dimension(Module(cd.algebra, "right", acts, dim=len(piv), check=False), cap)
    return StratifyingData(r, e, cd, ideal, quotient, Re, pd_ideal, pd_quot, pd_Re, w_istar, cw, pd_right, homol, hyp)


# ------------------------------------------------------- functor estimates
@dataclass
class InfEstimate:
    inf: float  # min over the sample of the lowest nonzero cohomology degree; +inf if none
    fd: float  # same, restricted to sample modules of finite pd
    truncated: bool
    per_module: list
    label: str = "estimate"


def functor_inf_estimate(f: Bimodule, sample, max_i: int = 8, cap: int = DEFAULT_CAP) -> InfEstimate:
    """Sampled ``inf`` of ``F (x)^L_A -`` for an (B, A)-bimodule F.

    ``H^{-j}(F (x)^L X) = Tor_j^A(F, X)``.  The true value is an infimum over
    all modules of finite projective dimension, so this is an upper estimate.
    """
    fr = f.as_right_module()
    inf_all, inf_fd, trunc, per = INF, INF, False, []
    for i, x in enumerate(sample):
        dims = tor_dims(fr, x, max_i=max_i, cap=cap) if x.dim and fr.dim else []
        nz = [j for j, d in enumerate(dims) if d.value]
        val = -max(nz) if nz else INF
        if dims and dims[-1].value:
            trunc = True
        per.append({"module": x.name or f"X{i}", "inf": val})
        inf_all = min(inf_all, val)
        if projective_dimension(x, cap).is_finite:
            inf_fd = min(inf_fd, val)
    return InfEstimate(inf_all, inf_fd, trunc, per)


def relative_end_quotient(x: Module, y: Module) -> BasedAlgebra:
    """``End(x)`` modulo the endomorphisms that factor through ``y``."""
    end = endomorphism_algebra(x)
    if y.dim == 0:
        return end.algebra
    fi = factor_through_ideal(x, y, end)
    return quotient_algebra(end.algebra, fi.ideal).algebra


# --------------------------------------------------------------- reports
@dataclass
class Hypothesis:
    name: str
    status: str  # holds | fails | undetermined
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    bound_id: str
    instance: str
    hypotheses: list
    lhs: Bracket | None
    rhs: Bracket | None
    verdict: str
    witnesses: list = field(default_factory=list)
    unknown_inputs: list = field(default_factory=list)
    formula: str = ""
    inputs: dict = field(default_factory=dict)  # input name -> Bracket

    def to_json(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "instance": self.instance,
            "formula": self.formula,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "lhs": None if self.lhs is None else self.lhs.to_json(),
            "rhs": None if self.rhs is None else self.rhs.to_json(),
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
            "unknown_inputs": list(self.unknown_inputs),
            "inputs": {k: v.to_json() for k, v in self.inputs.items()},
        }


@dataclass
class FamilyData:
    inputs: dict
    hypotheses: dict  # bound_id -> list[Hypothesis]
    witnesses: list = field(default_factory=list)


class _Env:
    """Per-run caches: algebras by preset name and fd brackets by algebra object."""

    def __init__(self, cap: int, seed: int):
        self.cap = cap
        self.seed = seed
        self._alg: dict = {}
        self._fd: dict = {}

    def algebra(self, spec) -> BasedAlgebra:
        if isinstance(spec, BasedAlgebra):
            return spec
        if isinstance(spec, dict):
            return algebra_from_json(spec)
        if not isinstance(spec, str):
            raise ContextError(f"cannot read an algebra from {spec!r}")
        if spec not in self._alg:
            try:
                self._alg[spec] = load_algebra(spec)
            except AlgebraError as exc:
                raise ContextError(str(exc)) from exc
        return self._alg[spec]

    def fd(self, a: BasedAlgebra) -> Bracket:
        key = id(a)
        if key not in self._fd:
            self._fd[key] = (a, finitistic_dimension(a, self.cap, seed=self.seed).value)
        return self._fd[key][1]

    def gd(self, a: BasedAlgebra) -> ExtNat:
        return global_dimension(a, self.cap)


def _bimodule(spec, s: BasedAlgebra, t: BasedAlgebra) -> Bimodule:
    """Bimodule specs: "simple"/"k" (optionally {"simple": [i, j]}), "regular", "dual", "zero"."""
    if spec in (None, "zero"):
        return Bimodule.zero(s, t)
    if spec in ("simple", "k"):
        return Bimodule.simple(s, t, 0, 0)
    if isinstance(spec, dict) and "simple" in spec:
        i, j = spec["simple"]
        return Bimodule.simple(s, t, int(i) - 1, int(j) - 1)
    if spec in ("regular", "dual"):
        if not s.table_equal(t):
            raise ContextError(f"{spec} bimodule needs equal algebras on both sides")
        return Bimodule.regular(s) if spec == "regular" else Bimodule.dual(s)
    raise ContextError(f"unknown bimodule spec {spec!r}")


def _req(inst: dict, key: str):
    if key not in inst:
        raise ContextError(f"instance is missing field {key!r}")
    return inst[key]


def _ext(x: ExtNat) -> Bracket:
    return Bracket.of(x)


# ------------------------------------------------------------ family: triangular
def _family_triangular(inst: dict, env: _Env) -> FamilyData:
    s = env.algebra(_req(inst, "S"))
    t = env.algebra(_req(inst, "T"))
    m = _bimodule(inst.get("M", "simple"), s, t)
    b = triangular_matrix_algebra(s, t, m)
    inputs = {"fd_S": env.fd(s), "fd_T": env.fd(t), "fd_B": env.fd(b)}
    wit = [f"B = [[{s.name}, M], [0, {t.name}]] of dim {b.dim}"]
    return FamilyData(inputs, {}, wit)


# ------------------------------------------------------------ family: recollement
def _family_recollement(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    e = vertex_idempotent(r, _req(inst, "e"))
    if la.is_zero(e) or np.all(e == r.unit):
        raise ContextError("e must be a nonzero proper idempotent (degenerate recollement)")
    sd = stratifying_recollement_data(r, e, env.cap)
    if sd.quotient is None or sd.corner is None:
        raise ContextError("degenerate recollement: ReR is the whole ring")
    r1, r3 = sd.quotient.algebra, sd.corner.algebra
    homol = sd.homological
    h_epi = Hypothesis("R -> R/ReR is a ring epimorphism", "holds", "surjective")
    h_hom = Hypothesis("R -> R/ReR is homological", homol.status, homol.verdict)
    h_pf = Hypothesis("_R ReR has finite projective dimension", _pd_status(sd.pd_ideal), f"pd {sd.pd_ideal}")
    h_cpt = Hypothesis("i_*(R1) = R/ReR is compact", _pd_status(sd.pd_quotient), f"pd {sd.pd_quotient}")
    h_bdd = Hypothesis("j_! preserves bounded complexes", _pd_status(sd.pd_Re_right), f"pd(Re over eRe) {sd.pd_Re_right}")
    gd1, gd2, gd3 = env.gd(r1), env.gd(r), env.gd(r3)
    rec = [h_epi, h_hom]
    hyps = {
        "stratifying": [h_epi, h_hom, h_pf],
        "stratifying_lower": [h_epi, h_hom, h_pf],
        "main_2b": rec + [h_cpt],
        "finitistic_2a": rec + [h_cpt],
        "finitistic_1": rec + [h_bdd],
        "gldim_2": rec + [Hypothesis("gd(R1) < inf", _pd_status(gd1), str(gd1)), Hypothesis("gd(R3) < inf", _pd_status(gd3), str(gd3))],
        "gldim_1": rec + [Hypothesis("gd(R2) < inf", _pd_status(gd2), str(gd2))],
        "gldim_1_cw": rec + [Hypothesis("gd(R2) < inf", _pd_status(gd2), str(gd2))],
    }
    fd_r, fd_q, fd_c = env.fd(r), env.fd(r1), env.fd(r3)
    inputs = {
        "fd_R": fd_r, "fd_eRe": fd_c, "fd_quot": fd_q, "pd_quot": _ext(sd.pd_quotient),
        "fd_R1": fd_q, "fd_R2": fd_r, "fd_R3": fd_c,
        "w_i": _ext(sd.pd_quotient), "w_j": _ext(sd.pd_Re), "w_istar": _ext(sd.w_istar), "cw_j": _ext(sd.cw_j),
        "gd_R1": _ext(gd1), "gd_R2": _ext(gd2), "gd_R3": _ext(gd3),
    }
    wit = [f"eRe dim {r3.dim}, R/ReR dim {r1.dim}", f"pd(_R ReR) = {sd.pd_ideal}", homol.verdict]
    return FamilyData(inputs, hyps, wit)


# ------------------------------------------------------------ family: epi
def _quotient_from(inst: dict, r: BasedAlgebra) -> QuotientData:
    if "e" in inst:
        gens = vertex_idempotent(r, inst["e"]).reshape(1, -1)
    elif "rad_power" in inst:
        t = int(inst["rad_power"])
        rad = r.radical[0]
        cur = rad
        for _ in range(t - 1):
            prods = [r.mul(x, y) for x in cur for y in rad]
            cur = la.row_basis(np.array(prods, dtype=object).reshape(len(prods), r.dim), r.dim)[0] if prods else zeros(0, r.dim)
        gens = cur
    else:
        gens = _rows(r, inst.get("ideal", []))
    basis = ideal_closure(r, gens)[0] if gens.shape[0] else zeros(0, r.dim)
    try:
        return quotient_algebra(r, basis)
    except AlgebraError as exc:
        raise ContextError(f"degenerate instance: {exc}") from exc


def _family_epi(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    q = _quotient_from(inst, r)
    f = q.projection
    epi = is_ring_epimorphism(f)
    hyps = [Hypothesis("ring epimorphism", "holds" if epi else "fails")]
    pd_s = projective_dimension(left_module_via(f), env.cap)
    if epi:
        hv = is_homological_epimorphism(f, env.cap)
        tor = ", ".join(str(x) for x in hv.tor[1:])
        hyps.append(Hypothesis("homological", hv.status, f"{hv.verdict}; Tor_1.. = [{tor}]"))
    hyps.append(Hypothesis("_R S has finite projective dimension", _pd_status(pd_s), f"pd {pd_s}"))
    inputs = {"fd_S": env.fd(q.algebra), "fd_R": env.fd(r)}
    return FamilyData(inputs, {"homo_ring": hyps}, [f"S = R/I of dim {q.algebra.dim}"])


# ------------------------------------------------------------ family: milnor
def _family_milnor(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    g1, g2 = _rows(r, inst.get("I1", [])), _rows(r, inst.get("I2", []))
    b1 = ideal_closure(r, g1)[0] if g1.shape[0] else zeros(0, r.dim)
    b2 = ideal_closure(r, g2)[0] if g2.shape[0] else zeros(0, r.dim)
    try:
        ctx, q1, q2, q12 = milnor_context(r, b1, b2)
    except AlgebraError as exc:
        raise ContextError(f"degenerate instance: {exc}") from exc
    s, t, box = q1.algebra, q2.algebra, q12.algebra
    cert = check_exact_context(ctx)
    pair = check_exact_pair(ctx)
    inter = la.intersect(b1, b2)[0] if b1.shape[0] and b2.shape[0] else zeros(0, r.dim)
    h_zero = Hypothesis("I1 n I2 = 0", "holds" if inter.shape[0] == 0 else "fails", f"dim {inter.shape[0]}")
    h_ctx = Hypothesis("exact context", "holds" if cert.holds else "fails", json.dumps(cert.ranks))
    s_left = left_module_via(q1.projection)
    t_right = right_module_via(q2.projection)
    tor_ts = _tor_vanish(t_right, s_left, 1, env.cap)
    h_tor = Hypothesis("Tor_i^R(T, S) = 0 for i >= 1", _status_of(tor_ts), tor_ts)
    pd_s = projective_dimension(s_left, env.cap)
    h_pf = Hypothesis("_R S has finite projective dimension", _pd_status(pd_s), f"pd {pd_s}")
    reg_r, reg_l = regular_module(r, "right"), regular_module(r)
    i2r = reg_r.submodule(b2).module if b2.shape[0] else None
    i1l = reg_l.submodule(b1).module if b1.shape[0] else None
    if i2r is None or i1l is None:
        tor_ii = "holds"
    else:
        tor_ii = _tor_vanish(i2r, i1l, 0, env.cap)
    h_tor2 = Hypothesis("Tor_i^R(I2, I1) = 0 for i >= 0", _status_of(tor_ii), tor_ii)
    b = triangular_matrix_algebra(s, t, ctx.m_bimodule)
    fld_t = projective_dimension(t_right, env.cap)
    inputs = {
        "fd_R": env.fd(r), "fd_S": env.fd(s), "fd_T": env.fd(t), "fd_box": env.fd(box), "fd_B": env.fd(b),
        "fld_T": _ext(fld_t), "pd_S": _ext(pd_s),
        "fd_RI1": env.fd(s), "fd_RI2": env.fd(t), "fld_RI2": _ext(fld_t), "fd_RI12": env.fd(box), "pd_RI1": _ext(pd_s),
    }
    two = [h_ctx, h_tor, h_pf]
    hyps = {
        "homdim_1": [h_ctx],
        "homdim_2a": two, "homdim_2b": two, "homdim_2b_lower": two,
        "mod1a_1": [h_zero],
        "mod1a_2a": [h_zero, h_tor2, h_pf], "mod1a_2b": [h_zero, h_tor2, h_pf],
    }
    wit = [f"S = R/I1 dim {s.dim}, T = R/I2 dim {t.dim}, R/(I1+I2) dim {box.dim}",
           f"exact pair: {pair.holds}"]
    return FamilyData(inputs, hyps, wit)


# ------------------------------------------------------------ family: trivial extension
def _family_trivext(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    if any(k in inst for k in ("e", "ideal", "rad_power")):
        q = _quotient_from(inst, r)
        lam, s = q.projection, q.algebra
    else:
        lam, s = identity_hom(r), r
    m = _bimodule(inst.get("M", "simple"), s, s)
    co = nc_tensor_trivial_extension_case(lam, m)
    s_left = left_module_via(lam)
    m_right = Module(r, "right", [m.right_act(lam.matrix[i]) for i in range(r.dim)], dim=m.dim, check=False)
    tor = _tor_vanish(m_right, s_left, 1, env.cap)
    pd_s = projective_dimension(s_left, env.cap)
    h_epi = Hypothesis("ring epimorphism", "holds", "checked by tensor dimension")
    h_tor = Hypothesis("Tor_i^R(M, S) = 0 for i >= 1", _status_of(tor), tor)
    h_pf = Hypothesis("_R S has finite projective dimension", _pd_status(pd_s), f"pd {pd_s}")
    h_sq = Hypothesis("coproduct square commutes", "holds" if co.square_commutes else "fails")
    # (*) with Lambda = S, Gamma = S x M, f the inclusion and g the projection
    gamma = co.algebra
    g = np.concatenate([la.eye(s.dim), zeros(m.dim, s.dim)], axis=0)
    fg_id = bool(np.all(la.matmul(co.rho.matrix, g) == la.eye(s.dim)))
    gbim = Bimodule(gamma, s, gamma.left_regular, [gamma.right_matrix(co.rho.matrix[i]) for i in range(s.dim)], dim=gamma.dim, check=False)
    sample = [regular_module(s)] + [simple_module(s, v) for v in range(s.num_vertices)]
    if is_nakayama(s):
        sample += nakayama_indecomposables(basic_form(s)) if basic_form(s) is s else []
    sample = [x for x in sample if projective_dimension(x, env.cap).is_finite]
    est = functor_inf_estimate(gbim, sample, max_i=4, cap=env.cap)
    s_hi = est.fd
    h_fg = Hypothesis("f g = Id", "holds" if fg_id else "fails")
    h_s = Hypothesis("fd(Gamma (x)^L -) finite", "holds" if s_hi < INF else "undetermined", f"sampled estimate {s_hi}")
    mr = m.restrict(lam, lam)
    fld_m = projective_dimension(mr.as_right_module(), env.cap)
    inputs = {
        "fd_S": env.fd(s), "fd_R": env.fd(r), "fd_SM": env.fd(co.algebra), "fd_RM": env.fd(co.source),
        "fd_Lambda": env.fd(s), "fd_Gamma": env.fd(co.algebra),
        "s": Bracket(-INF, s_hi) if s_hi < INF else Bracket(0, 0),
        "fld_M": _ext(fld_m),
    }
    base = [h_epi, h_tor, h_pf, h_sq]
    hyps = {"mod1b_a": base, "mod1b_b": base, "star": [h_fg, h_s], "trivext_remark": []}
    wit = [f"S x M dim {co.algebra.dim}, R x M dim {co.source.dim}", f"s estimate {s_hi} over {len(sample)} modules"]
    return FamilyData(inputs, hyps, wit)


# ------------------------------------------------------------ family: idempotent ideal
def _family_idempotent_ideal(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    e = vertex_idempotent(r, _req(inst, "e"))
    ideal, piv = ideal_closure(r, e.reshape(1, -1))
    if ideal.shape[0] in (0, r.dim):
        raise ContextError("degenerate instance: ideal is zero or the whole ring")
    sq = [r.mul(x, y) for x in ideal for y in ideal]
    sq_b = la.row_basis(np.array(sq, dtype=object).reshape(len(sq), r.dim), r.dim)[0]
    h_idem = Hypothesis("I is idempotent", "holds" if sq_b.shape[0] == ideal.shape[0] else "fails")
    reg = regular_module(r)
    sub = reg.submodule(ideal)
    I = sub.module
    I.name = "I"
    inc = ModuleHom(I, reg, sub.basis.T.copy())
    cov = is_covariant_morphism(inc)
    h_cov = Hypothesis("inclusion I -> R is covariant", "holds" if cov.covariant else "fails",
                       f"injective {cov.injective}, split {cov.split}")
    quot = quotient_algebra(r, ideal).algebra
    e_sum = endomorphism_algebra(I.direct_sum(reg)).algebra
    e_i = endomorphism_algebra(I).algebra
    rel = relative_end_quotient(reg, I)
    inputs = {
        "fd_RI": env.fd(quot), "fd_E": env.fd(e_sum), "fd_EndI": env.fd(e_i),
        "fd_EYX": env.fd(e_sum), "fd_EndY": env.fd(e_i), "fd_rel": env.fd(rel),
    }
    hyps = {"ars_1": [h_idem], "ars_1_lower": [h_idem], "covariant": [h_cov], "covariant_lower": [h_cov]}
    wit = [f"End(R+I) dim {e_sum.dim}, End(I) dim {e_i.dim}, End_I(R) dim {rel.dim}"]
    return FamilyData(inputs, hyps, wit)


# ------------------------------------------------------------ family: morita
def _family_morita(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    mult = [int(x) for x in _req(inst, "multiplicities")]
    if len(mult) != r.num_vertices:
        raise ContextError("one multiplicity per vertex is required")
    verts = [v for v, k in enumerate(mult) for _ in range(k)]
    p, _ = projective_sum(r, verts)
    p.name = "P"
    r1 = endomorphism_algebra(p).algebra
    w = projective_dimension(p, env.cap)
    h = Hypothesis("P is a progenerator", "holds" if all(k >= 1 for k in mult) else "fails", f"multiplicities {mult}")
    inputs = {"fd_R1": env.fd(r1), "fd_R2": env.fd(r), "w_F": _ext(w)}
    return FamilyData(inputs, {"f3_0": [h]}, [f"R1 = End(P) of dim {r1.dim}"])


# ------------------------------------------------------------ family: ring extension
def _diagonal_subalgebra(r: BasedAlgebra, kind: str) -> tuple[BasedAlgebra, AlgebraHom]:
    if kind == "scalars":
        gens = [r.unit]
    elif kind == "diagonal":
        gens = list(r.idempotents)
    else:
        raise ContextError(f"unknown subring kind {kind!r}")
    n = len(gens)
    c = zeros(n, n, n)
    for i in range(n):
        c[i, i, i] = la.ONE
    unit = la.vec([1] * n)
    s = BasedAlgebra(c, unit, [la.vec([1 if j == i else 0 for j in range(n)]) for i in range(n)], name=f"{r.name}-{kind}")
    return s, AlgebraHom(s, r, np.array(gens, dtype=object).reshape(n, r.dim))


def _family_ringext(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    s, inc = _diagonal_subalgebra(r, inst.get("S", "diagonal"))
    r_left = left_module_via(inc)
    quot = r_left.quotient(inc.matrix).module  # R/S as a left S-module
    r_right = right_module_via(inc)
    quot_r = r_right.quotient(inc.matrix)
    rp = endomorphism_algebra(quot).algebra if quot.dim else None
    fld_q = projective_dimension(quot_r.module, env.cap)
    # Hom_S(R, R/S) of right modules, with (f.s)(x) = f(s x)
    homs = [h.matrix for h in hom_space(r_right, quot_r.module)]
    fld_h = ExtNat.finite(0)
    if homs:
        flat, piv = la.row_basis(np.array([H.reshape(-1) for H in homs], dtype=object).reshape(len(homs), -1))
        acts = []
        for i in range(s.dim):
            L = r.left_matrix(inc.matrix[i])
            cols = [la.coords(flat, piv, la.matmul(H.reshape(quot_r.module.dim, r.dim), L).reshape(-1)) for H in flat]
            acts.append(np.array(cols, dtype=object).reshape(len(cols), -1).T.copy())
        hom_mod = Module(s, "right", acts, dim=flat.shape[0])
        fld_h = projective_dimension(hom_mod, env.cap)
    inputs = {
        "fd_S": env.fd(s), "fd_R": env.fd(r), "fd_Rp": env.fd(rp) if rp is not None else Bracket.exact(0),
        "fld_quot": _ext(fld_q), "fld_hom": _ext(fld_h),
    }
    h = Hypothesis("S is a subring with the same identity", "holds" if np.all(inc(s.unit) == r.unit) else "fails")
    return FamilyData(inputs, {"ringext_1": [h]}, [f"S dim {s.dim}, R' dim {rp.dim if rp else 0}"])


# ------------------------------------------------------------ family: lemma add
def _family_lemma_add(inst: dict, env: _Env) -> FamilyData:
    r = env.algebra(_req(inst, "R"))
    if "e" in inst or "ideal" in inst:
        q = _quotient_from(inst, r)
        lam, s = q.projection, q.algebra
    else:
        lam, s = identity_hom(r), r
    gi = _rows(r, _req(inst, "I"))
    ib = ideal_closure(r, gi)[0] if gi.shape[0] else zeros(0, r.dim)
    hv = is_homological_epimorphism(lam, env.cap)
    jp = la.row_basis(lam(ib), s.dim)[0] if ib.shape[0] else zeros(0, s.dim)
    left_ideal = all(la.in_span(*la.row_basis(jp, s.dim), s.mul(s.basis_vector(i), x)) for i in range(s.dim) for x in jp) if jp.shape[0] else True
    inj = la.rank(lam(ib)) == ib.shape[0] if ib.shape[0] else True
    try:
        ri = quotient_algebra(r, ib)
    except AlgebraError as exc:
        raise ContextError(f"degenerate instance: {exc}") from exc
    jb = ideal_closure(s, jp)[0] if jp.shape[0] else zeros(0, s.dim)
    try:
        sj = quotient_algebra(s, jb).algebra
    except AlgebraError as exc:
        raise ContextError(f"degenerate instance: {exc}") from exc
    # condition (4): Tor_j^R(R/I, S) = 0 for j >= 1
    ri_right = regular_module(r, "right").quotient(ib).module
    s_left = left_module_via(lam)
    c4 = _tor_vanish(ri_right, s_left, 1, env.cap)
    pd_s = projective_dimension(s_left, env.cap)
    # B = [[S, S/J'], [0, R/I]]
    sreg = regular_module(s)
    qd = sreg.quotient(jp)
    nmod = qd.module
    right = []
    for p in range(ri.algebra.dim):
        elem = lam.matrix[ri.lift_columns[p]]
        right.append(_quotient_action(s.right_matrix(elem), qd.projection, qd.lift_columns))
    bim = Bimodule(s, ri.algebra, nmod.action, right, dim=nmod.dim)
    b = triangular_matrix_algebra(s, ri.algebra, bim)
    fld_ri = projective_dimension(ri_right, env.cap)
    base = [
        Hypothesis("lambda homological", hv.status, hv.verdict),
        Hypothesis("J' = lambda(I) is a left ideal", "holds" if left_ideal else "fails"),
        Hypothesis("lambda is injective on I", "holds" if inj else "fails"),
        Hypothesis("Tor_j^R(R/I, S) = 0 for j >= 1", _status_of(c4), c4),
    ]
    h_pf = Hypothesis("_R S has finite projective dimension", _pd_status(pd_s), f"pd {pd_s}")
    inputs = {
        "fd_R": env.fd(r), "fd_S": env.fd(s), "fd_RI": env.fd(ri.algebra), "fld_RI": _ext(fld_ri),
        "fd_SJ": env.fd(sj), "fd_B": env.fd(b), "pd_S": _ext(pd_s),
    }
    hyps = {"lemma_add_1": base, "lemma_add_2a": base + [h_pf], "lemma_add_2b": base + [h_pf]}
    return FamilyData(inputs, hyps, [f"B dim {b.dim}, S/J dim {sj.dim}"])


FAMILIES: dict[str, Callable] = {
    "triangular": _family_triangular,
    "recollement": _family_recollement,
    "epi": _family_epi,
    "milnor": _family_milnor,
    "trivext": _family_trivext,
    "idempotent_ideal": _family_idempotent_ideal,
    "morita": _family_morita,
    "ringext": _family_ringext,
    "lemma_add": _family_lemma_add,
}

BOUND_FAMILY = {
    "triangular": "triangular", "triangular_lower": "triangular",
    "stratifying": "recollement", "stratifying_lower": "recollement", "main_2b": "recollement",
    "finitistic_b": "recollement", "finitistic_2a": "recollement", "finitistic_1": "recollement",
    "gldim_2": "recollement", "gldim_1": "recollement", "gldim_1_cw": "recollement",
    "homo_ring": "epi",
    "homdim_1": "milnor", "homdim_2a": "milnor", "homdim_2b": "milnor", "homdim_2b_lower": "milnor",
    "mod1a_1": "milnor", "mod1a_2a": "milnor", "mod1a_2b": "milnor",
    "mod1b_a": "trivext", "mod1b_b": "trivext", "star": "trivext", "trivext_remark": "trivext",
    "ars_1": "idempotent_ideal", "ars_1_lower": "idempotent_ideal",
    "covariant": "idempotent_ideal", "covariant_lower": "idempotent_ideal",
    "f3_0": "morita",
    "ringext_1": "ringext",
    "lemma_add_1": "lemma_add", "lemma_add_cor": "lemma_add", "lemma_add_2a": "lemma_add", "lemma_add_2b": "lemma_add",
}

_FAMILY_ALIAS = {"finitistic_b": "main_2b", "lemma_add_cor": "lemma_add_1"}


def instance_label(inst: dict) -> str:
    if "name" in inst:
        return str(inst["name"])
    def fmt(v):
        return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))

    parts = [f"{k}={fmt(v)}" for k, v in sorted(inst.items()) if k != "bound_id"]
    return " ".join(parts)


def family_data(bound_id: str, inst: dict, env: _Env, cache: dict | None = None) -> FamilyData:
    if bound_id not in BOUND_FAMILY:
        if bound_id in BOUNDS:
            raise ContextError(f"{bound_id} is formula-only; use evaluate_bound")
        raise ContextError(f"unknown bound id {bound_id!r}")
    fam = BOUND_FAMILY[bound_id]
    key = (fam, json.dumps({k: v for k, v in inst.items() if k not in ("bound_id", "name")}, sort_keys=True))
    if cache is not None and key in cache:
        return cache[key]
    try:
        data = FAMILIES[fam](inst, env)
    except (AlgebraError, ModuleError) as exc:
        raise ContextError(str(exc)) from exc
    if cache is not None:
        cache[key] = data
    return data


def verify_inequality(bound_id: str, instance: dict, cap: int = DEFAULT_CAP, seed: int = 0,
                      _env: _Env | None = None, _cache: dict | None = None) -> VerificationReport:
    """Check hypotheses, bracket both sides and give a verdict."""
    env = _env or _Env(cap, seed)
    data = family_data(bound_id, instance, env, _cache)
    key = _FAMILY_ALIAS.get(bound_id, bound_id)
    hyps = data.hypotheses.get(key, [])
    lhs, rhs = bound_sides(key, data.inputs)
    unknown = [k for k in BOUNDS[key].inputs if not Bracket.of(data.inputs[k]).is_exact]
    if any(h.status == "fails" for h in hyps):
        verdict = "rejected"
    else:
        verdict = compare(lhs, rhs)
        if verdict == "verified" and any(h.status != "holds" for h in hyps):
            verdict = "undetermined"
        if verdict == "violated" and any(h.status != "holds" for h in hyps):
            verdict = "undetermined"
    used = {k: Bracket.of(data.inputs[k]) for k in BOUNDS[key].inputs}
    return VerificationReport(bound_id, instance_label(instance), hyps, lhs, rhs, verdict,
                              list(data.witnesses), unknown, BOUNDS[key].text, used)


# ------------------------------------------------------------------ suite
NAKAYAMA_PRESETS = ("k", "A2", "dual", "nak3", "nak4", "A3", "A3-rad2", "cyc2", "nak32", "ut2")


def nakayama_triangular_instances(count: int, seed: int) -> list[dict]:
    """Seeded triangular instances with Nakayama factors and a Nakayama glued algebra.

    Draws are rejected until B itself is Nakayama, so fd(B) is exact by the
    finite list of indecomposables.
    """
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        s, t = rng.choice(NAKAYAMA_PRESETS), rng.choice(NAKAYAMA_PRESETS)
        i = rng.randrange(preset(s).num_vertices) + 1
        j = rng.randrange(preset(t).num_vertices) + 1
        if (s, t, i, j) in seen:
            continue
        seen.add((s, t, i, j))
        S, T = preset(s), preset(t)
        if not is_nakayama(triangular_matrix_algebra(S, T, Bimodule.simple(S, T, i - 1, j - 1))):
            continue
        out.append({"S": s, "T": t, "M": {"simple": [i, j]}, "name": f"S={s} T={t} M=k({i},{j})"})
    return out


def _proper_vertex_sets(a: BasedAlgebra) -> list[list[int]]:
    n = a.num_vertices
    out = []
    for mask in range(1, (1 << n) - 1):
        out.append([v + 1 for v in range(n) if mask >> v & 1])
    return out


INSTANCE_SEED = 0


def suite_instances() -> list[tuple[str, dict]]:
    """Every preset instance paired with each applicable bound id, in a fixed order.

    The instance list is fixed; the run seed only drives sampled searches.
    """
    rows: list[tuple[str, dict]] = []
    tri = [{"S": "k", "T": "k", "M": "simple", "name": "S=k T=k M=k"}] + nakayama_triangular_instances(10, INSTANCE_SEED)
    for inst in tri:
        rows += [("triangular", inst), ("triangular_lower", inst)]
    rec_bounds = ["stratifying", "stratifying_lower", "main_2b", "finitistic_2a", "finitistic_1",
                  "gldim_2", "gldim_1", "gldim_1_cw"]
    for name in ("ut2", "A2", "A3", "A3-rad2", "kronecker-trunc", "nak32", "cyc2"):
        for verts in _proper_vertex_sets(preset(name)):
            inst = {"R": name, "e": verts, "name": f"R={name} e={verts}"}
            rows += [(b, inst) for b in rec_bounds]
    for name in PRESETS:
        a = preset(name)
        for verts in _proper_vertex_sets(a):
            rows.append(("homo_ring", {"R": name, "e": verts, "name": f"R={name} -> R/ReR, e={verts}"}))
    for name, t in (("nak3", 2), ("nak4", 2), ("nak4", 3), ("A3", 2), ("nak32", 2)):
        rows.append(("homo_ring", {"R": name, "rad_power": t, "name": f"R={name} -> R/rad^{t}"}))
    milnor = [
        {"R": "ut2", "I1": ["e22"], "I2": [], "name": "ut2, I1=BeB, I2=0"},
        {"R": "kronecker-trunc", "I1": ["a"], "I2": ["b"], "name": "kronecker-trunc, I1=(a), I2=(b)"},
        {"R": "local2", "I1": ["x"], "I2": ["y"], "name": "local2, I1=(x), I2=(y)"},
        {"R": "cyc2", "I1": ["a"], "I2": ["b"], "name": "cyc2, I1=(a), I2=(b)"},
    ]
    for inst in milnor:
        rows += [(b, inst) for b in ("homdim_1", "homdim_2a", "homdim_2b", "homdim_2b_lower", "mod1a_1", "mod1a_2a", "mod1a_2b")]
    trivs = [
        {"R": "dual", "M": "simple", "name": "lambda=id on dual, M=k"},
        {"R": "k", "M": "simple", "name": "lambda=id on k, M=k"},
        {"R": "nak3", "rad_power": 2, "M": "simple", "name": "lambda: nak3 -> dual, M=k"},
        {"R": "ut2", "e": [2], "M": "simple", "name": "lambda: ut2 -> ut2/BeB, M=k"},
        {"R": "A2", "M": {"simple": [2, 1]}, "name": "lambda=id on A2, M=k(2,1)"},
    ]
    for inst in trivs:
        rows += [(b, inst) for b in ("mod1b_a", "mod1b_b", "star", "trivext_remark")]
    for name, verts in (("ut2", [2]), ("A2", [1]), ("A2", [2]), ("A3", [2]), ("A3-rad2", [2]), ("nak32", [1]), ("cyc2", [1])):
        inst = {"R": name, "e": verts, "name": f"R={name} I=ReR e={verts}"}
        rows += [(b, inst) for b in ("ars_1", "ars_1_lower", "covariant", "covariant_lower")]
    for name, mult in (("A2", [2, 1]), ("ut2", [1, 2]), ("kronecker-trunc", [2, 1]), ("nak32", [1, 2])):
        rows.append(("f3_0", {"R": name, "multiplicities": mult, "name": f"R={name} P mult {mult}"}))
    for name in ("A2", "ut2", "kronecker-trunc", "A3", "nak3"):
        rows.append(("ringext_1", {"R": name, "S": "scalars" if name == "nak3" else "diagonal", "name": f"R={name}"}))
    adds = [
        {"R": "ut2", "I": ["e22"], "name": "lambda=id on ut2, I=BeB"},
        {"R": "A3", "I": ["b"], "name": "lambda=id on A3, I=(b)"},
        {"R": "A3", "e": [3], "I": ["a"], "name": "lambda: A3 -> A3/Re3R, I=(a)"},
    ]
    for inst in adds:
        rows += [(b, inst) for b in ("lemma_add_1", "lemma_add_2a", "lemma_add_2b")]
    return rows


@dataclass
class SuiteRow:
    index: int
    bound_id: str
    instance: str
    lhs: str
    rhs: str
    verdict: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"index": self.index, "bound_id": self.bound_id, "instance": self.instance,
                "lhs": self.lhs, "rhs": self.rhs, "verdict": self.verdict, "detail": self.detail}


def iter_suite(seed: int = 0, cap: int = DEFAULT_CAP):
    """Yield suite rows one at a time, in instance order."""
    env = _Env(cap, seed)
    cache: dict = {}
    for idx, (bid, inst) in enumerate(suite_instances()):
        try:
            rep = verify_inequality(bid, inst, cap, seed, _env=env, _cache=cache)
        except ContextError as exc:
            yield SuiteRow(idx, bid, instance_label(inst), "-", "-", "skipped", str(exc))
            continue
        bad = [h.name for h in rep.hypotheses if h.status != "holds"]
        detail = ("hypotheses not certified: " + "; ".join(bad)) if bad else ""
        if rep.verdict == "undetermined" and rep.unknown_inputs and not bad:
            detail = "unknown inputs: " + ", ".join(rep.unknown_inputs)
        yield SuiteRow(idx, bid, rep.instance, str(rep.lhs), str(rep.rhs), rep.verdict, detail)


def report_suite(seed: int = 0, cap: int = DEFAULT_CAP) -> list[SuiteRow]:
    return list(iter_suite(seed, cap))
