"""Finitistic and global dimension estimates and the bound formulas they feed.

Finitistic dimensions are reported as brackets ``[lo, hi]``.  ``hi`` is None
when no upper bound is known.  The exact cases are: local algebras (0),
algebras of finite global dimension (fd = gd), self-injective algebras (0) and
Nakayama algebras (exhaustive list of indecomposables).  Everything else gets
a seeded search lower bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from . import exactla as la
from .algebra import AlgebraError, BasedAlgebra, basic_algebra
from .extnat import ExtNat, emax
from .modules import (
    DEFAULT_CAP,
    Module,
    ModuleError,
    dual_module,
    injective_dimension,
    injective_module,
    is_projective,
    projective_dimension,
    projective_module,
    random_presented_module,
    regular_module,
    right_projective,
    simple_module,
)

__all__ = [
    "ExtNat",
    "Bracket",
    "DimensionReport",
    "BOUNDS",
    "BoundError",
    "basic_form",
    "bound_sides",
    "compare",
    "evaluate_bound",
    "findim_from_module_list",
    "findim_search_lower_bound",
    "finitistic_dimension",
    "global_dimension",
    "is_nakayama",
    "is_self_injective",
    "nakayama_indecomposables",
    "radical_series",
]

INF = math.inf


class BoundError(ValueError):
    """Unknown bound id or missing inputs."""


# --------------------------------------------------------------------- brackets
@dataclass(frozen=True)
class Bracket:
    """Integer interval ``[lo, hi]``; ``hi=None`` means no upper bound is known.

    ``math.inf`` stands for a certified infinite value.
    """

    lo: float
    hi: float | None

    def __post_init__(self):
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(n) -> "Bracket":
        return Bracket(n, n)

    @staticmethod
    def of(x) -> "Bracket":
        if isinstance(x, Bracket):
            return x
        if isinstance(x, int):
            return Bracket(x, x)
        x = ExtNat.coerce(x)
        if x.is_finite:
            return Bracket(x.value, x.value)
        if x.is_infinite:
            return Bracket(INF, INF)
        return Bracket(x.value, None)

    @property
    def is_exact(self) -> bool:
        return self.hi is not None and self.hi == self.lo

    def __add__(self, other) -> "Bracket":
        o = Bracket.of(other)
        hi = None if self.hi is None or o.hi is None else self.hi + o.hi
        lo = self.lo + o.lo
        if hi is None and lo == INF:
            hi = INF
        return Bracket(lo, hi)

    __radd__ = __add__

    def shift(self, k: int) -> "Bracket":
        return Bracket(self.lo + k, None if self.hi is None else self.hi + k)

    def max(self, other) -> "Bracket":
        o = Bracket.of(other)
        hi = None if self.hi is None or o.hi is None else max(self.hi, o.hi)
        return Bracket(max(self.lo, o.lo), hi)

    def abs_diff(self, other) -> "Bracket":
        """Bracket for ``|x - y|``."""
        o = Bracket.of(other)
        cands = [0]
        if o.hi is not None and o.hi < INF:
            cands.append(self.lo - o.hi)
        if self.hi is not None and self.hi < INF:
            cands.append(o.lo - self.hi)
        lo = max(cands)
        if self.hi is None or o.hi is None or INF in (self.hi, o.hi, self.lo, o.lo):
            hi = None
        else:
            hi = max(self.hi - o.lo, o.hi - self.lo)
        return Bracket(lo, hi)

    def __str__(self) -> str:
        def fmt(x):
            return "inf" if x == INF else str(int(x))

        if self.hi is not None and self.hi == self.lo:
            return fmt(self.lo)
        if self.hi is None:
            return f"[{fmt(self.lo)}, ?]"
        return f"[{fmt(self.lo)}, {fmt(self.hi)}]"

    def to_json(self):
        def enc(x):
            if x in (INF, -INF):
                return "inf" if x > 0 else "-inf"
            return int(x)

        return {"lo": enc(self.lo), "hi": None if self.hi is None else enc(self.hi)}


def compare(lhs: Bracket, rhs: Bracket) -> str:
    """"verified" if lhs <= rhs for every value in the brackets, "violated" if
    it fails for every value, otherwise "undetermined"."""
    if lhs.hi is not None and lhs.hi <= rhs.lo:
        return "verified"
    if rhs.hi is not None and lhs.lo > rhs.hi:
        return "violated"
    return "undetermined"


# ------------------------------------------------------------------- bounds
@dataclass(frozen=True)
class Bound:
    bound_id: str
    text: str
    inputs: tuple[str, ...]
    lhs: Callable[[dict], Bracket]
    rhs: Callable[[dict], Bracket]


def _m1(x: Bracket) -> Bracket:
    return Bracket.of(1).max(x)


def _minus(x: Bracket, s: Bracket) -> Bracket:
    # s is bounded above by s.hi; s.lo may be -inf for sampled estimates
    lo = x.lo - s.hi
    hi = None if x.hi is None or s.lo == -INF else x.hi - s.lo
    return Bracket(lo, hi)


def _mk(bid, text, inputs, lhs, rhs) -> Bound:
    return Bound(bid, text, tuple(inputs), lhs, rhs)


_BOUND_LIST = [
    _mk("triangular", "fd(B) <= fd(S) + fd(T) + 1", ["fd_B", "fd_S", "fd_T"],
        lambda v: v["fd_B"], lambda v: v["fd_S"] + v["fd_T"] + 1),
    _mk("triangular_lower", "fd(S) <= fd(B)", ["fd_S", "fd_B"],
        lambda v: v["fd_S"], lambda v: v["fd_B"]),
    _mk("stratifying", "fd(R) <= fd(eRe) + fd(R/ReR) + pd(R/ReR) + 1",
        ["fd_R", "fd_eRe", "fd_quot", "pd_quot"],
        lambda v: v["fd_R"], lambda v: v["fd_eRe"] + v["fd_quot"] + v["pd_quot"] + 1),
    _mk("stratifying_lower", "fd(R/ReR) <= fd(R)", ["fd_quot", "fd_R"],
        lambda v: v["fd_quot"], lambda v: v["fd_R"]),
    _mk("main_2b", "fd(R2) <= fd(R1) + fd(R3) + w(i_* R1) + w(j_! R3) + 1",
        ["fd_R2", "fd_R1", "fd_R3", "w_i", "w_j"],
        lambda v: v["fd_R2"], lambda v: v["fd_R1"] + v["fd_R3"] + v["w_i"] + v["w_j"] + 1),
    _mk("finitistic_2a", "fd(R1) <= fd(R2) + w(i^* R2)", ["fd_R1", "fd_R2", "w_istar"],
        lambda v: v["fd_R1"], lambda v: v["fd_R2"] + v["w_istar"]),
    _mk("finitistic_1", "fd(R3) <= fd(R2) + cw(j^! D(R2))", ["fd_R3", "fd_R2", "cw_j"],
        lambda v: v["fd_R3"], lambda v: v["fd_R2"] + v["cw_j"]),
    _mk("homdim_1", "fd(R) <= fd(S) + fd(T) + max(1, fld(T_R)) + 1", ["fd_R", "fd_S", "fd_T", "fld_T"],
        lambda v: v["fd_R"], lambda v: v["fd_S"] + v["fd_T"] + _m1(v["fld_T"]) + 1),
    _mk("homdim_2a", "fd(T box_R S) <= fd(S) + fd(T) + 1", ["fd_box", "fd_S", "fd_T"],
        lambda v: v["fd_box"], lambda v: v["fd_S"] + v["fd_T"] + 1),
    _mk("homdim_2b", "fd(B) <= fd(R) + fd(T box_R S) + max(1, pd(_R S)) + 3", ["fd_B", "fd_R", "fd_box", "pd_S"],
        lambda v: v["fd_B"], lambda v: v["fd_R"] + v["fd_box"] + _m1(v["pd_S"]) + 3),
    _mk("homdim_2b_lower", "fd(S) <= fd(B)", ["fd_S", "fd_B"],
        lambda v: v["fd_S"], lambda v: v["fd_B"]),
    _mk("ringext_1", "fd(S) <= fd(R) + fd(R') + max(1, fld((R/S)_S), fld(Hom_S(R, R/S)_S)) + 1",
        ["fd_S", "fd_R", "fd_Rp", "fld_quot", "fld_hom"],
        lambda v: v["fd_S"], lambda v: v["fd_R"] + v["fd_Rp"] + _m1(v["fld_quot"]).max(v["fld_hom"]) + 1),
    _mk("ringext_2a", "fd(R' box_S R) <= fd(R) + fd(R') + 1", ["fd_box", "fd_R", "fd_Rp"],
        lambda v: v["fd_box"], lambda v: v["fd_R"] + v["fd_Rp"] + 1),
    _mk("ringext_2b", "fd(R) <= fd(S) + fd(R' box_S R) + 4", ["fd_R", "fd_S", "fd_box"],
        lambda v: v["fd_R"], lambda v: v["fd_S"] + v["fd_box"] + 4),
    _mk("mod1b_a", "fd(S x M) <= fd(S) + fd(R x M) + 1", ["fd_SM", "fd_S", "fd_RM"],
        lambda v: v["fd_SM"], lambda v: v["fd_S"] + v["fd_RM"] + 1),
    _mk("mod1b_b", "fd(S) <= fd(R) + fd(S x M)", ["fd_S", "fd_R", "fd_SM"],
        lambda v: v["fd_S"], lambda v: v["fd_R"] + v["fd_SM"]),
    _mk("mod1a_1", "fd(R) <= fd(R/I1) + fd(R/I2) + max(1, fld((R/I2)_R)) + 1",
        ["fd_R", "fd_RI1", "fd_RI2", "fld_RI2"],
        lambda v: v["fd_R"], lambda v: v["fd_RI1"] + v["fd_RI2"] + _m1(v["fld_RI2"]) + 1),
    _mk("mod1a_2a", "fd(R/(I1+I2)) <= fd(R/I1) + fd(R/I2) + 1", ["fd_RI12", "fd_RI1", "fd_RI2"],
        lambda v: v["fd_RI12"], lambda v: v["fd_RI1"] + v["fd_RI2"] + 1),
    _mk("mod1a_2b", "fd(R/I1) <= fd(R) + fd(R/(I1+I2)) + max(1, pd(_R R/I1)) + 3",
        ["fd_RI1", "fd_R", "fd_RI12", "pd_RI1"],
        lambda v: v["fd_RI1"], lambda v: v["fd_R"] + v["fd_RI12"] + _m1(v["pd_RI1"]) + 3),
    _mk("ars_1", "fd(End(R + I)) <= fd(End(I)) + fd(R/I) + 2", ["fd_E", "fd_EndI", "fd_RI"],
        lambda v: v["fd_E"], lambda v: v["fd_EndI"] + v["fd_RI"] + 2),
    _mk("ars_1_lower", "fd(R/I) <= fd(End(R + I))", ["fd_RI", "fd_E"],
        lambda v: v["fd_RI"], lambda v: v["fd_E"]),
    _mk("covariant", "fd(End(Y + X)) <= fd(End(Y)) + fd(End_Y(X)) + 2", ["fd_EYX", "fd_EndY", "fd_rel"],
        lambda v: v["fd_EYX"], lambda v: v["fd_EndY"] + v["fd_rel"] + 2),
    _mk("covariant_lower", "fd(End_Y(X)) <= fd(End(Y + X))", ["fd_rel", "fd_EYX"],
        lambda v: v["fd_rel"], lambda v: v["fd_EYX"]),
    _mk("f3_0", "|fd(R1) - fd(R2)| <= w(F(R1))", ["fd_R1", "fd_R2", "w_F"],
        lambda v: v["fd_R1"].abs_diff(v["fd_R2"]), lambda v: v["w_F"]),
    _mk("homo_ring", "fd(S) <= fd(R)", ["fd_S", "fd_R"],
        lambda v: v["fd_S"], lambda v: v["fd_R"]),
    _mk("star", "fd(Lambda) <= fd(Gamma) - s", ["fd_Lambda", "fd_Gamma", "s"],
        lambda v: v["fd_Lambda"], lambda v: _minus(v["fd_Gamma"], v["s"])),
    _mk("trivext_remark", "fd(R) <= fd(R x M) + fld(M_R)", ["fd_R", "fd_RM", "fld_M"],
        lambda v: v["fd_R"], lambda v: v["fd_RM"] + v["fld_M"]),
    _mk("gldim_2", "gd(R2) <= gd(R1) + gd(R3) + w(i_* R1) + w(j_! R3) + 1",
        ["gd_R2", "gd_R1", "gd_R3", "w_i", "w_j"],
        lambda v: v["gd_R2"], lambda v: v["gd_R1"] + v["gd_R3"] + v["w_i"] + v["w_j"] + 1),
    _mk("gldim_1", "gd(R1) <= gd(R2) + w(i^* R2)", ["gd_R1", "gd_R2", "w_istar"],
        lambda v: v["gd_R1"], lambda v: v["gd_R2"] + v["w_istar"]),
    _mk("gldim_1_cw", "gd(R3) <= gd(R2) + cw(j^! D(R2))", ["gd_R3", "gd_R2", "cw_j"],
        lambda v: v["gd_R3"], lambda v: v["gd_R2"] + v["cw_j"]),
    _mk("lemma_add_1", "fd(R) <= fd(S) + fd(R/I) + max(1, fld((R/I)_R)) + 1", ["fd_R", "fd_S", "fd_RI", "fld_RI"],
        lambda v: v["fd_R"], lambda v: v["fd_S"] + v["fd_RI"] + _m1(v["fld_RI"]) + 1),
    _mk("lemma_add_2a", "fd(S/J) <= fd(R/I)", ["fd_SJ", "fd_RI"],
        lambda v: v["fd_SJ"], lambda v: v["fd_RI"]),
    _mk("lemma_add_2b", "fd(B) <= fd(R) + fd(S/J) + max(1, pd(_R S)) + 3", ["fd_B", "fd_R", "fd_SJ", "pd_S"],
        lambda v: v["fd_B"], lambda v: v["fd_R"] + v["fd_SJ"] + _m1(v["pd_S"]) + 3),
]

BOUNDS: dict[str, Bound] = {b.bound_id: b for b in _BOUND_LIST}
BOUNDS["finitistic_b"] = BOUNDS["main_2b"]
BOUNDS["lemma_add_cor"] = BOUNDS["lemma_add_1"]


def _gather(bound_id: str, inputs: dict) -> tuple[Bound, dict]:
    if bound_id not in BOUNDS:
        raise BoundError(f"unknown bound id {bound_id!r}")
    b = BOUNDS[bound_id]
    missing = [k for k in b.inputs if k not in inputs]
    if missing:
        raise BoundError(f"{bound_id} needs inputs {', '.join(b.inputs)}; missing {', '.join(missing)}")
    vals = {}
    for k in b.inputs:
        x = inputs[k]
        if k == "s" and isinstance(x, int):
            vals[k] = Bracket(x, x)
        else:
            vals[k] = Bracket.of(x)
    return b, vals


def bound_sides(bound_id: str, inputs: dict) -> tuple[Bracket, Bracket]:
    """Left and right sides of a bound as brackets."""
    b, vals = _gather(bound_id, inputs)
    return b.lhs(vals), b.rhs(vals)


def evaluate_bound(bound_id: str, inputs: dict) -> ExtNat:
    """Right-hand side of a bound over exact (ExtNat) inputs."""
    b, vals = _gather(bound_id, inputs)
    r = b.rhs(vals)
    if r.lo == INF:
        return ExtNat.infinite()
    if r.hi is None:
        return ExtNat.unknown(int(r.lo))
    if r.lo < 0:
        raise BoundError(f"{bound_id}: right-hand side is negative ({int(r.lo)})")
    return ExtNat.finite(int(r.lo))


# ----------------------------------------------------------- structure tests
def basic_form(a: BasedAlgebra) -> BasedAlgebra:
    """A split basic algebra Morita equivalent to ``a``."""
    if a.idempotents is not None and a.split_basic:
        return a
    return basic_algebra(a).algebra


def radical_series(m: Module) -> list[int]:
    """Dimensions of ``rad^t M`` for t = 0, 1, ... until zero."""
    lm = m.as_left()
    dims = [lm.dim]
    cur = lm
    while cur.dim:
        rad, _ = cur.radical_basis
        sub = cur.submodule(rad)
        cur = sub.module
        dims.append(cur.dim)
    return dims


def _uniserial(m: Module) -> bool:
    d = radical_series(m)
    return all(d[t] - d[t + 1] <= 1 for t in range(len(d) - 1))


def is_nakayama(a: BasedAlgebra) -> bool:
    a = basic_form(a)
    for v in range(a.num_vertices):
        if not _uniserial(projective_module(a, v)):
            return False
        if not _uniserial(right_projective(a, v)):
            return False
    return True


def is_self_injective(a: BasedAlgebra) -> bool:
    a = basic_form(a)
    return is_projective(dual_module(regular_module(a, "right")))


def nakayama_indecomposables(a: BasedAlgebra) -> list[Module]:
    """All indecomposables ``P_i / rad^t P_i`` of a Nakayama algebra."""
    a = basic_form(a)
    if not is_nakayama(a):
        raise AlgebraError("algebra is not Nakayama (some projective or injective is not uniserial)")
    out = []
    for v in range(a.num_vertices):
        P = projective_module(a, v)
        layers = [la.eye(P.dim)]
        cur = la.eye(P.dim)
        while cur.shape[0]:
            rows = [la.matmul(cur, P.act(x).T) for _, _, x in a.arrows]
            cur = la.row_basis(la.np.concatenate(rows, axis=0), P.dim)[0] if rows else la.zeros(0, P.dim)
            layers.append(cur)
        for t in range(1, len(layers)):
            q = P.quotient(layers[t]).module
            q.name = f"P{v + 1}/rad^{t}"
            out.append(q)
    return out


# ------------------------------------------------------------ dimension values
def global_dimension(a: BasedAlgebra, cap: int = DEFAULT_CAP) -> ExtNat:
    """Maximum projective dimension of the simple modules."""
    a = basic_form(a)
    vals = [projective_dimension(simple_module(a, v), cap) for v in range(a.num_vertices)]
    return emax(*vals) if vals else ExtNat.finite(0)


@dataclass
class DimensionReport:
    value: Bracket
    method: str  # exact-list | search | formula
    witnesses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"value": self.value.to_json(), "display": str(self.value), "method": self.method,
                "witnesses": list(self.witnesses), "notes": list(self.notes)}


def findim_from_module_list(a: BasedAlgebra, modules, cap: int = DEFAULT_CAP) -> DimensionReport:
    """Largest finite pd over the listed modules (exact when the list is complete)."""
    best, wit, notes = 0, [], []
    for i, m in enumerate(modules):
        name = m.name or f"module[{i}]"
        p = projective_dimension(m, cap)
        if p.is_finite and (p.value > best or not wit):
            best = p.value
            wit = [f"{name}: pd {p.value}"]
        elif p.is_unknown:
            notes.append(f"{name}: pd {p}, excluded")
    return DimensionReport(Bracket.exact(best), "exact-list", wit, notes)


def findim_search_lower_bound(
    a: BasedAlgebra, budget: int = 40, size_cap: int = 8, seed: int = 0, cap: int = DEFAULT_CAP
) -> DimensionReport:
    """Largest finite pd among simples and seeded random finitely presented modules.

    The result is a lower bound for the finitistic dimension.
    """
    a = basic_form(a)
    rng = random.Random(seed)
    best, wit = 0, []
    cands = [simple_module(a, v) for v in range(a.num_vertices)]
    tries = 0
    while len(cands) < a.num_vertices + budget and tries < 20 * max(budget, 1):
        tries += 1
        m = random_presented_module(a, rng, max_top=3, max_rel=3)
        if 0 < m.dim <= size_cap:
            m.name = f"random[{len(cands) - a.num_vertices}]"
            cands.append(m)
    for m in cands:
        p = projective_dimension(m, cap)
        if p.is_finite and (p.value > best or not wit):
            best = max(best, p.value)
            wit = [f"{m.name}: pd {p.value}"]
    return DimensionReport(Bracket(best, None), "search", wit, [f"seed {seed}, {len(cands)} modules"])


def finitistic_dimension(
    a: BasedAlgebra, cap: int = DEFAULT_CAP, budget: int = 40, size_cap: int = 8, seed: int = 0
) -> DimensionReport:
    """Finitistic dimension bracket, exact when a structural rule applies."""
    cache = a.__dict__.setdefault("_fd_cache", {})
    key = (cap, budget, size_cap, seed)
    if key in cache:
        return cache[key]
    rep = _finitistic_dimension(a, cap, budget, size_cap, seed)
    cache[key] = rep
    return rep


def _finitistic_dimension(a, cap, budget, size_cap, seed) -> DimensionReport:
    b = basic_form(a)
    notes = [] if b is a else ["computed on a Morita equivalent basic algebra"]
    if b.is_local():
        return DimensionReport(Bracket.exact(0), "formula", ["local algebra"], notes)
    if is_nakayama(b):
        rep = findim_from_module_list(b, nakayama_indecomposables(b), cap)
        if not rep.notes:
            rep.notes = notes
            return rep
    gd = global_dimension(b, cap)
    if gd.is_finite:
        return DimensionReport(Bracket.exact(gd.value), "formula", [f"global dimension {gd.value}"], notes)
    if is_self_injective(b):
        return DimensionReport(Bracket.exact(0), "formula", ["self-injective algebra"], notes)
    # Gorenstein: both regular modules of finite injective dimension, then fd = id(_A A)
    idl = injective_dimension(regular_module(b, "left"), cap)
    if idl.is_finite:
        idr = injective_dimension(regular_module(b, "right"), cap)
        if idr.is_finite:
            return DimensionReport(
                Bracket.exact(idl.value), "formula", [f"Gorenstein, id of the regular module {idl.value}"], notes
            )
    rep = findim_search_lower_bound(b, budget, size_cap, seed, cap)
    rep.notes = notes + rep.notes
    return rep
