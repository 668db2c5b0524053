"""Bounded cochain complexes of modules.

A complex lives in degrees ``lo .. hi``; ``d(i)`` is the matrix of
``X^i -> X^(i+1)`` (target dim x source dim).  Shifts use
``X[k]^i = X^(i+k)`` with differential ``(-1)^k d``; mapping cones have terms
``Y^i (+) X^(i+1)`` and differential ``[[d_Y, f], [0, -d_X]]``.

Complexes produced by :func:`projective_normalize` also carry their terms as
lists of vertices and their differentials as element matrices (see
:mod:`findim.modules`), which is what minimization works on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import exactla as la
from .exactla import ONE, zeros
from .extnat import ExtNat
from .modules import (
    DEFAULT_CAP,
    Module,
    ModuleError,
    _cover_generators,
    _require_left_basic,
    _split_elements,
    dual_module,
    element_matrix_map,
    hom_space,
    injective_dimension,
    is_projective,
    minimal_resolution,
    projective_basis,
    projective_dimension,
    projective_sum,
)


class ComplexError(ValueError):
    """Raised for malformed complexes or failed preconditions."""


def _zero_module_like(m: Module) -> Module:
    return Module(m.algebra, m.side, [zeros(0, 0)] * m.algebra.dim, dim=0, check=False)


@dataclass
class ProjectiveData:
    """Vertex lists per degree and element-matrix differentials."""

    vertices: dict[int, list[int]]
    elements: dict[int, list]  # degree i: [target summand][source summand] for X^i -> X^(i+1)


class BoundedComplex:
    """Finite cochain complex ``X^lo -> ... -> X^hi``."""

    def __init__(self, lo: int, terms, differentials, check: bool = True, projective_data: ProjectiveData | None = None):
        terms = list(terms)
        if not terms:
            raise ComplexError("a complex needs at least one term (use a zero module for the zero complex)")
        self.lo = int(lo)
        self.terms = terms
        self.algebra = terms[0].algebra
        self.side = terms[0].side
        diffs = list(differentials)
        if len(diffs) != len(terms) - 1:
            raise ComplexError("need one differential between consecutive terms")
        self.diffs = []
        for k, D in enumerate(diffs):
            D = np.asarray(D, dtype=object)
            shape = (terms[k + 1].dim, terms[k].dim)
            if D.size == 0:
                D = zeros(*shape)
            if D.shape != shape:
                raise ComplexError(f"differential at degree {self.lo + k} has shape {D.shape}, expected {shape}")
            self.diffs.append(D)
        self.projective_data = projective_data
        if check:
            self.validate()

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def __repr__(self) -> str:
        dims = ", ".join(str(t.dim) for t in self.terms)
        return f"<BoundedComplex degrees {self.lo}..{self.hi} dims [{dims}]>"

    def term(self, i: int) -> Module:
        if self.lo <= i <= self.hi:
            return self.terms[i - self.lo]
        return _zero_module_like(self.terms[0])

    def d(self, i: int) -> np.ndarray:
        if self.lo <= i < self.hi:
            return self.diffs[i - self.lo]
        return zeros(self.term(i + 1).dim, self.term(i).dim)

    def validate(self) -> None:
        for t in self.terms:
            if t.side != self.side or not (t.algebra is self.algebra or t.algebra.table_equal(self.algebra)):
                raise ComplexError("all terms must be modules on the same side over the same algebra")
        for i in range(self.lo, self.hi):
            D = self.d(i)
            for A, B in zip(self.term(i).action, self.term(i + 1).action):
                if not np.all(la.matmul(D, A) == la.matmul(B, D)):
                    raise ComplexError(f"differential at degree {i} is not a module map")
        for i in range(self.lo, self.hi - 1):
            if not la.is_zero(la.matmul(self.d(i + 1), self.d(i))):
                raise ComplexError(f"d^{i + 1} d^{i} is not zero")

    @staticmethod
    def from_module(m: Module, degree: int = 0) -> "BoundedComplex":
        return BoundedComplex(degree, [m], [], check=False)

    def support(self) -> tuple[int, int] | None:
        """Lowest and highest degrees with a nonzero term."""
        nz = [i for i in range(self.lo, self.hi + 1) if self.term(i).dim]
        return (nz[0], nz[-1]) if nz else None

    def total_dims(self) -> dict[int, int]:
        return {i: self.term(i).dim for i in range(self.lo, self.hi + 1)}

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i % 2) * self.term(i).dim for i in range(self.lo, self.hi + 1))


# ------------------------------------------------------------------ cohomology
def _kernel_rows(D: np.ndarray, n: int) -> np.ndarray:
    if n == 0:
        return zeros(0, 0)
    if D.shape[0] == 0:
        return la.eye(n)
    return la.kernel_basis(D)


def cohomology(c: BoundedComplex, n: int) -> Module:
    """``ker d^n / im d^(n-1)`` with the induced action."""
    X = c.term(n)
    if X.dim == 0:
        return X
    ker = X.submodule(_kernel_rows(c.d(n), X.dim))
    img = c.d(n - 1).T
    if ker.module.dim == 0:
        return ker.module
    img_coords = la.coords(ker.basis, ker.pivots, img) if img.shape[0] else zeros(0, ker.module.dim)
    return ker.module.quotient(img_coords).module


def cohomology_dim(c: BoundedComplex, n: int) -> int:
    X = c.term(n)
    if X.dim == 0:
        return 0
    return X.dim - la.rank(c.d(n)) - la.rank(c.d(n - 1))


def sup_inf(c: BoundedComplex) -> tuple[float, float]:
    """Extremal degrees of nonzero cohomology; ``(-inf, +inf)`` when acyclic."""
    nz = [i for i in range(c.lo, c.hi + 1) if cohomology_dim(c, i)]
    if not nz:
        return (-math.inf, math.inf)
    return (nz[-1], nz[0])


def is_acyclic(c: BoundedComplex) -> bool:
    return all(cohomology_dim(c, i) == 0 for i in range(c.lo, c.hi + 1))


# --------------------------------------------------------------- chain maps
class ChainMap:
    """Degreewise matrices ``f^i: X^i -> Y^i`` commuting with the differentials."""

    def __init__(self, source: BoundedComplex, target: BoundedComplex, components: dict, check: bool = True):
        self.source = source
        self.target = target
        self.components = {}
        for i in range(min(source.lo, target.lo), max(source.hi, target.hi) + 1):
            shape = (target.term(i).dim, source.term(i).dim)
            F = components.get(i)
            F = zeros(*shape) if F is None or np.asarray(F).size == 0 else np.asarray(F, dtype=object)
            if F.shape != shape:
                raise ComplexError(f"chain map component at degree {i} has the wrong shape")
            self.components[i] = F
        if check:
            self.validate()

    def degrees(self) -> range:
        return range(min(self.source.lo, self.target.lo), max(self.source.hi, self.target.hi) + 1)

    def f(self, i: int) -> np.ndarray:
        if i in self.components:
            return self.components[i]
        return zeros(self.target.term(i).dim, self.source.term(i).dim)

    def validate(self) -> None:
        X, Y = self.source, self.target
        for i in self.degrees():
            F = self.f(i)
            for A, B in zip(X.term(i).action, Y.term(i).action):
                if F.size and not np.all(la.matmul(F, A) == la.matmul(B, F)):
                    raise ComplexError(f"component at degree {i} is not a module map")
            if not np.all(la.matmul(self.f(i + 1), X.d(i)) == la.matmul(Y.d(i), F)):
                raise ComplexError(f"chain map does not commute with the differentials at degree {i}")

    @staticmethod
    def identity(c: BoundedComplex) -> "ChainMap":
        return ChainMap(c, c, {i: la.eye(c.term(i).dim) for i in range(c.lo, c.hi + 1)}, check=False)

    @staticmethod
    def zero(x: BoundedComplex, y: BoundedComplex) -> "ChainMap":
        return ChainMap(x, y, {}, check=False)


def shift(c: BoundedComplex, k: int) -> BoundedComplex:
    """``X[k]``: degree i holds ``X^(i+k)``; the differential picks up ``(-1)^k``."""
    sign = -1 if k % 2 else 1
    pd = None
    if c.projective_data is not None:
        pd = ProjectiveData(
            {i - k: v for i, v in c.projective_data.vertices.items()},
            {i - k: [[sign * x for x in row] for row in e] for i, e in c.projective_data.elements.items()},
        )
    return BoundedComplex(c.lo - k, c.terms, [sign * D for D in c.diffs], check=False, projective_data=pd)


def _sum_modules(mods: list[Module], like: Module) -> Module:
    out = _zero_module_like(like)
    for m in mods:
        out = out.direct_sum(m) if out.dim else m
    return out


def direct_sum(x: BoundedComplex, y: BoundedComplex) -> BoundedComplex:
    lo, hi = min(x.lo, y.lo), max(x.hi, y.hi)
    terms = [_sum_modules([x.term(i), y.term(i)], x.terms[0]) for i in range(lo, hi + 1)]
    diffs = [la.block_diag(x.d(i), y.d(i)) for i in range(lo, hi)]
    pd = None
    if x.projective_data is not None and y.projective_data is not None:
        pd = ProjectiveData({}, {})
        for i in range(lo, hi + 1):
            pd.vertices[i] = x.projective_data.vertices.get(i, []) + y.projective_data.vertices.get(i, [])
        dim = x.algebra.dim
        for i in range(lo, hi):
            ex = x.projective_data.elements.get(i)
            ey = y.projective_data.elements.get(i)
            sx, tx = x.projective_data.vertices.get(i, []), x.projective_data.vertices.get(i + 1, [])
            sy, ty = y.projective_data.vertices.get(i, []), y.projective_data.vertices.get(i + 1, [])
            rows = []
            for k in range(len(tx)):
                rows.append([ex[k][j] if ex else zeros(dim) for j in range(len(sx))] + [zeros(dim)] * len(sy))
            for k in range(len(ty)):
                rows.append([zeros(dim)] * len(sx) + [ey[k][j] if ey else zeros(dim) for j in range(len(sy))])
            pd.elements[i] = rows
    return BoundedComplex(lo, terms, diffs, check=False, projective_data=pd)


def cone(f: ChainMap) -> BoundedComplex:
    """Mapping cone: ``Y^i (+) X^(i+1)`` with differential ``[[d_Y, f], [0, -d_X]]``."""
    X, Y = f.source, f.target
    lo = min(Y.lo, X.lo - 1)
    hi = max(Y.hi, X.hi - 1)
    terms = [_sum_modules([Y.term(i), X.term(i + 1)], Y.terms[0]) for i in range(lo, hi + 1)]
    diffs = []
    for i in range(lo, hi):
        top = np.concatenate([Y.d(i), f.f(i + 1)], axis=1)
        bot = np.concatenate([zeros(X.term(i + 2).dim, Y.term(i).dim), -X.d(i + 1)], axis=1)
        diffs.append(np.concatenate([top, bot], axis=0))
    return BoundedComplex(lo, terms, diffs, check=False)


def brutal_truncate(c: BoundedComplex, at: int, side: str) -> BoundedComplex:
    """Zero the terms outside the kept range.

    ``side="below"`` keeps degrees ``>= at``; ``side="above"`` keeps degrees ``<= at``.
    """
    if side not in ("below", "above"):
        raise ComplexError("side must be 'below' or 'above'")
    keep = (lambda i: i >= at) if side == "below" else (lambda i: i <= at)
    terms = [c.term(i) if keep(i) else _zero_module_like(c.terms[0]) for i in range(c.lo, c.hi + 1)]
    diffs = [c.d(i) if keep(i) and keep(i + 1) else zeros(terms[i + 1 - c.lo].dim, terms[i - c.lo].dim) for i in range(c.lo, c.hi)]
    return BoundedComplex(c.lo, terms, diffs, check=False)


# ---------------------------------------------------------------- homotopies
def is_null_homotopic(f: ChainMap) -> dict | None:
    """Return ``{i: h^i}`` with ``f^i = d_Y h^i + h^(i+1) d_X`` or None."""
    X, Y = f.source, f.target
    degs = list(f.degrees())
    bases = {}
    offs = {}
    tot = 0
    for i in range(degs[0], degs[-1] + 2):
        hs = [h.matrix for h in hom_space(X.term(i), Y.term(i - 1))] if X.term(i).dim and Y.term(i - 1).dim else []
        bases[i] = hs
        offs[i] = tot
        tot += len(hs)
    rows, rhs = [], []
    for i in degs:
        F = f.f(i)
        if F.size == 0:
            continue
        cols = zeros(F.size, tot)
        for a, H in enumerate(bases[i]):
            cols[:, offs[i] + a] = la.matmul(Y.d(i - 1), H).reshape(-1)
        for a, H in enumerate(bases.get(i + 1, [])):
            cols[:, offs[i + 1] + a] = cols[:, offs[i + 1] + a] + la.matmul(H, X.d(i)).reshape(-1)
        rows.append(cols)
        rhs.append(F.reshape(-1))
    if not rows:
        return {}
    if tot == 0:
        return {} if all(la.is_zero(r) for r in rhs) else None
    sol = la.solve_linear(np.concatenate(rows, axis=0), np.concatenate(rhs))
    if sol is None:
        return None
    out = {}
    for i, hs in bases.items():
        H = zeros(Y.term(i - 1).dim, X.term(i).dim)
        for a, B in enumerate(hs):
            H = H + sol[offs[i] + a] * B
        out[i] = H
    return out


def is_contractible(c: BoundedComplex) -> bool:
    return is_null_homotopic(ChainMap.identity(c)) is not None


def chain_map_space(x: BoundedComplex, y: BoundedComplex) -> list[ChainMap]:
    """Basis of all chain maps ``x -> y``."""
    lo, hi = min(x.lo, y.lo), max(x.hi, y.hi)
    bases, offs, tot = {}, {}, 0
    for i in range(lo, hi + 1):
        hs = [h.matrix for h in hom_space(x.term(i), y.term(i))] if x.term(i).dim and y.term(i).dim else []
        bases[i], offs[i] = hs, tot
        tot += len(hs)
    if tot == 0:
        return []
    eqs = []
    for i in range(lo, hi):
        n = y.term(i + 1).dim * x.term(i).dim
        if n == 0:
            continue
        block = zeros(n, tot)
        for a, F in enumerate(bases[i]):
            block[:, offs[i] + a] = la.matmul(y.d(i), F).reshape(-1)
        for a, G in enumerate(bases.get(i + 1, [])):
            block[:, offs[i + 1] + a] = block[:, offs[i + 1] + a] - la.matmul(G, x.d(i)).reshape(-1)
        eqs.append(block)
    sols = la.kernel_basis(np.concatenate(eqs, axis=0)) if eqs else la.eye(tot)
    out = []
    for s in sols:
        comps = {}
        for i, hs in bases.items():
            F = zeros(y.term(i).dim, x.term(i).dim)
            for a, B in enumerate(hs):
                F = F + s[offs[i] + a] * B
            comps[i] = F
        out.append(ChainMap(x, y, comps, check=False))
    return out


# ---------------------------------------------------- projective complexes
def complex_from_elements(a, lo: int, vertices: list[list[int]], elements: list) -> BoundedComplex:
    """Complex of projectives from vertex lists and element-matrix differentials."""
    terms = [projective_sum(a, v)[0] for v in vertices]
    diffs = [element_matrix_map(a, vertices[k], vertices[k + 1], elements[k]) for k in range(len(elements))]
    pd = ProjectiveData({lo + k: list(v) for k, v in enumerate(vertices)}, {lo + k: e for k, e in enumerate(elements)})
    return BoundedComplex(lo, terms, diffs, check=True, projective_data=pd)


def _element_inverse(a, phi, v: int) -> np.ndarray:
    """Inverse of ``phi`` in ``e_v A e_v`` (top scalar nonzero)."""
    lam = a.top_scalar(phi, v)
    e = a.idempotents[v]
    n = phi - lam * e
    t = -n / lam
    out = e.copy()
    power = e.copy()
    for _ in range(a.dim + 1):
        power = a.mul(power, t)
        if la.is_zero(power):
            break
        out = out + power
    return out / lam


def minimize(c: BoundedComplex) -> BoundedComplex:
    """Remove contractible summands ``Ae_v -> Ae_v`` by Gaussian elimination."""
    if c.projective_data is None:
        raise ComplexError("minimize needs a complex carrying projective data")
    a = c.algebra
    verts = {i: list(c.projective_data.vertices.get(i, [])) for i in range(c.lo, c.hi + 1)}
    elems = {i: [list(r) for r in c.projective_data.elements.get(i, [])] for i in range(c.lo, c.hi)}
    changed = True
    while changed:
        changed = False
        for i in range(c.lo, c.hi):
            src, tgt = verts[i], verts[i + 1]
            D = elems[i]
            hit = None
            for k, w in enumerate(tgt):
                for j, v in enumerate(src):
                    if v == w and not la.is_zero(D[k][j]) and a.top_scalar(D[k][j], v) != 0:
                        hit = (k, j)
                        break
                if hit:
                    break
            if hit is None:
                continue
            k, j = hit
            inv = _element_inverse(a, D[k][j], src[j])
            new = []
            for k2 in range(len(tgt)):
                if k2 == k:
                    continue
                row = []
                for j2 in range(len(src)):
                    if j2 == j:
                        continue
                    corr = a.mul(a.mul(D[k][j2], inv), D[k2][j])
                    row.append(D[k2][j2] - corr)
                new.append(row)
            elems[i] = new
            if i - 1 in elems:
                elems[i - 1] = [r for t, r in enumerate(elems[i - 1]) if t != j]
            if i + 1 in elems:
                elems[i + 1] = [[x for s, x in enumerate(r) if s != k] for r in elems[i + 1]]
            verts[i] = [v for t, v in enumerate(src) if t != j]
            verts[i + 1] = [v for t, v in enumerate(tgt) if t != k]
            changed = True
    # trim zero ends but keep at least one degree
    lo, hi = c.lo, c.hi
    while lo < hi and not verts[lo]:
        lo += 1
    while hi > lo and not verts[hi]:
        hi -= 1
    return complex_from_elements(a, lo, [verts[i] for i in range(lo, hi + 1)], [elems[i] for i in range(lo, hi)])


@dataclass
class NormalizeResult:
    complex: BoundedComplex | None
    quasi_iso: ChainMap | None
    diagnostic: str = ""


def resolution_complex(m: Module, cap: int = DEFAULT_CAP) -> BoundedComplex | None:
    """Minimal projective resolution of a module in degrees ``[-pd, 0]``, or None if pd > cap."""
    lm = _require_left_basic(m)
    if lm.dim == 0:
        return BoundedComplex.from_module(lm)
    res = minimal_resolution(lm, cap + 1, detect_period=True)
    if res.length is None or res.length > cap:
        return None
    n = res.length
    vertices = [res.vertices[n - t] for t in range(n + 1)]
    elements = []
    for t in range(n):
        k = n - t  # P_k -> P_(k-1)
        elements.append(res.differentials[k])
    return complex_from_elements(lm.algebra, -n, vertices, elements)


def projective_normalize(obj, cap: int = DEFAULT_CAP, minimal: bool = True) -> NormalizeResult:
    """Bounded complex of projectives quasi-isomorphic to a module or complex.

    For a module this is its minimal projective resolution.  For a complex the
    replacement is built degree by degree from the top, covering the cycles of
    the mapping cone; it fails (``complex=None``) when the construction has
    not stopped ``cap + 1`` degrees below the lowest term.
    """
    if isinstance(obj, Module):
        r = resolution_complex(obj, cap)
        if r is None:
            return NormalizeResult(None, None, f"projective dimension exceeds cap {cap} or is infinite")
        return NormalizeResult(r, None, "")
    c: BoundedComplex = obj
    if c.side != "left":
        raise ComplexError("projective_normalize works with complexes of left modules")
    a = c.algebra
    if not a.split_basic:
        raise ComplexError("projective_normalize needs a split basic algebra")
    verts: dict[int, list[int]] = {}
    elems: dict[int, list] = {}
    pi: dict[int, np.ndarray] = {}
    dprime: dict[int, np.ndarray] = {}
    dims: dict[int, int] = {}
    i = c.hi
    floor = c.lo - cap - 1
    while True:
        X = c.term(i)
        nxt_dim = dims.get(i + 1, 0)
        tot = X.dim + nxt_dim
        if i < c.lo and nxt_dim == 0:
            break
        if i < floor:
            return NormalizeResult(None, None, f"replacement does not stop within cap {cap} below degree {c.lo}")
        # Z^i inside X^i (+) P'^(i+1)
        conds = []
        if c.term(i + 1).dim:
            conds.append(np.concatenate([c.d(i), -pi[i + 1] if nxt_dim else zeros(c.term(i + 1).dim, 0)], axis=1))
        if nxt_dim and dims.get(i + 2, 0):
            conds.append(np.concatenate([zeros(dims[i + 2], X.dim), dprime[i + 1]], axis=1))
        if tot == 0:
            zrows = zeros(0, 0)
        elif conds:
            zrows = la.kernel_basis(np.concatenate(conds, axis=0))
        else:
            zrows = la.eye(tot)
        P_next = projective_sum(a, verts.get(i + 1, []))[0] if nxt_dim else None
        amb = X.direct_sum(P_next) if P_next is not None and X.dim else (X if P_next is None else P_next)
        if tot == 0 or zrows.shape[0] == 0:
            verts[i], dims[i] = [], 0
            pi[i] = zeros(X.dim, 0)
            if nxt_dim:
                dprime[i] = zeros(nxt_dim, 0)
                elems[i] = [[] for _ in verts[i + 1]]
            i -= 1
            continue
        Z = amb.submodule(zrows)
        bd = la.matmul(c.d(i - 1).T, np.concatenate([la.eye(X.dim), zeros(X.dim, nxt_dim)], axis=1)) if X.dim and c.term(i - 1).dim else zeros(0, tot)
        bcoords = la.coords(Z.basis, Z.pivots, bd) if bd.shape[0] else zeros(0, Z.module.dim)
        q = Z.module.quotient(bcoords)
        qv, qgens = _cover_generators(q.module)
        lifted = []
        for v, g in zip(qv, qgens):
            z = zeros(Z.module.dim)
            for col_idx, col in enumerate(q.lift_columns):
                z[col] = g[col_idx]
            z = la.matmul(Z.module.act(a.idempotents[v]), z)
            lifted.append(la.matmul(z, Z.basis))
        verts[i] = qv
        P, offsets = projective_sum(a, qv)
        dims[i] = P.dim
        cols_x, cols_p, el = [], [], [[None] * len(qv) for _ in verts.get(i + 1, [])]
        for j, (v, vec) in enumerate(zip(qv, lifted)):
            basis, _ = projective_basis(a, v)
            xpart, ppart = vec[: X.dim], vec[X.dim :]
            if X.dim:
                G = np.array([la.matmul(A, xpart) for A in X.action], dtype=object).reshape(a.dim, X.dim)
                cols_x.append(la.matmul(basis, G).T)
            if nxt_dim:
                comps = _split_elements(a, verts[i + 1], _offsets(a, verts[i + 1]), ppart)
                for t in range(len(verts[i + 1])):
                    el[t][j] = comps[t]
        pi[i] = np.concatenate(cols_x, axis=1) if cols_x else zeros(X.dim, P.dim)
        if nxt_dim:
            elems[i] = el
            dprime[i] = element_matrix_map(a, qv, verts[i + 1], el)
        i -= 1
    lo = i + 1
    hi = c.hi
    while hi > lo and not verts.get(hi):
        hi -= 1
    if not any(verts.get(t) for t in range(lo, hi + 1)):
        zero = BoundedComplex(c.lo, [_zero_module_like(c.terms[0])], [], check=False,
                              projective_data=ProjectiveData({c.lo: []}, {}))
        return NormalizeResult(zero, None, "")
    while lo < hi and not verts.get(lo):
        lo += 1
    vertex_lists = [verts.get(t, []) for t in range(lo, hi + 1)]
    element_lists = [elems.get(t, [[] for _ in verts.get(t + 1, [])]) for t in range(lo, hi)]
    out = complex_from_elements(a, lo, vertex_lists, element_lists)
    qi = ChainMap(out, c, {t: pi.get(t, zeros(c.term(t).dim, out.term(t).dim)) for t in range(lo, hi + 1)
                           if c.term(t).dim and out.term(t).dim}, check=True)
    if minimal:
        return NormalizeResult(minimize(out), None, "")
    return NormalizeResult(out, qi, "")


def _offsets(a, verts):
    offs, o = [], 0
    for v in verts:
        offs.append(o)
        o += projective_basis(a, v)[0].shape[0]
    return offs


# ------------------------------------------------------------ width, cowidth
def homological_width(c: BoundedComplex, cap: int = DEFAULT_CAP) -> ExtNat:
    """0 if acyclic, else ``sup - inf + pd(Coker d^(inf-1))``."""
    for i in range(c.lo, c.hi + 1):
        if c.term(i).dim and not is_projective(c.term(i)):
            raise ComplexError(f"term in degree {i} is not projective")
    s, t = sup_inf(c)
    if s == -math.inf:
        return ExtNat.finite(0)
    coker = c.term(t).quotient(c.d(t - 1).T).module
    return ExtNat.finite(int(s - t)) + projective_dimension(coker, cap)


def homological_cowidth(c: BoundedComplex, cap: int = DEFAULT_CAP) -> ExtNat:
    """0 if acyclic, else ``sup - inf + id(Ker d^sup)``."""
    for i in range(c.lo, c.hi + 1):
        if c.term(i).dim and not is_projective(dual_module(c.term(i))):
            raise ComplexError(f"term in degree {i} is not injective")
    s, t = sup_inf(c)
    if s == -math.inf:
        return ExtNat.finite(0)
    X = c.term(s)
    ker = X.submodule(_kernel_rows(c.d(s), X.dim)).module
    return ExtNat.finite(int(s - t)) + injective_dimension(ker, cap)


def dual_complex(c: BoundedComplex) -> BoundedComplex:
    """Degree i holds ``D(X^(-i))``; differentials are transposes."""
    terms = [dual_module(c.term(-i)) for i in range(-c.hi, -c.lo + 1)]
    diffs = [c.d(-i - 1).T.copy() for i in range(-c.hi, -c.lo)]
    return BoundedComplex(-c.hi, terms, diffs, check=False)


# --------------------------------------------------------------- JSON format
def complex_to_json(c: BoundedComplex, algebra_ref=None) -> dict:
    from .modules import module_to_json

    return {
        "algebra": algebra_ref,
        "lo": c.lo,
        "terms": [module_to_json(t, algebra_ref) for t in c.terms],
        "differentials": [la.to_strings(D) for D in c.diffs],
    }


def complex_from_json(data: dict, algebra) -> BoundedComplex:
    from .modules import module_from_json

    try:
        terms = [module_from_json(t, algebra) for t in data["terms"]]
        diffs = []
        for k, D in enumerate(data["differentials"]):
            rows, cols = terms[k + 1].dim, terms[k].dim
            M = la.mat(D) if rows and cols else zeros(rows, cols)
            diffs.append(M)
        return BoundedComplex(int(data.get("lo", 0)), terms, diffs, check=True)
    except (KeyError, TypeError, IndexError) as exc:
        raise ComplexError(f"malformed complex data: {exc}") from exc
