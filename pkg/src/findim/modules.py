"""Finite-dimensional modules: Hom spaces, projective resolutions, Tor and Ext.

A module stores one action matrix per algebra basis element, acting on column
coordinate vectors.  For a left module ``action[i]`` is ``v -> b_i v``; for a
right module it is ``v -> v b_i``, so a right A-module is literally the same
data as a left A^op-module.  Homological routines work with left modules over
split basic algebras and convert right modules through the opposite algebra.

Maps between sums of indecomposable projectives ``Ae_v`` are stored as element
matrices: the entry for summands ``Ae_v -> Ae_w`` is an element
``a in e_v A e_w`` and the map is ``x -> x a``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import sympy

from . import exactla as la
from .algebra import AlgebraError, AlgebraHom, BasedAlgebra, quotient_algebra
from .exactla import ONE, ZERO, zeros
from .extnat import ExtNat

DEFAULT_CAP = 24
SIZE_LIMIT = 600


class ModuleError(ValueError):
    """Raised for invalid module data or unsupported operations."""


def _same_algebra(a: BasedAlgebra, b: BasedAlgebra) -> bool:
    return a is b or a.table_equal(b)


class Module:
    """Finite-dimensional left or right module given by action matrices."""

    def __init__(self, algebra: BasedAlgebra, side: str, action, dim: int | None = None, check=True, name=None):
        if side not in ("left", "right"):
            raise ModuleError("side must be 'left' or 'right'")
        self.algebra = algebra
        self.side = side
        acts = list(action)
        if len(acts) != algebra.dim:
            raise ModuleError(f"need {algebra.dim} action matrices, got {len(acts)}")
        if dim is None:
            dim = np.asarray(acts[0]).shape[0] if acts else 0
        self.dim = dim
        self.action = []
        for A in acts:
            arr = np.asarray(A, dtype=object)
            if arr.size == 0:
                arr = zeros(dim, dim)
            if arr.shape != (dim, dim):
                raise ModuleError("action matrices must be dim x dim")
            self.action.append(arr if all(isinstance(x, type(ZERO)) for x in arr.reshape(-1)) else la.asmat(arr))
        self.name = name
        if check:
            self.validate()

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"<Module{nm} {self.side} dim={self.dim} over {self.algebra.name}>"

    # ----------------------------------------------------------------- basics
    def act(self, x) -> np.ndarray:
        """Action matrix of an algebra element."""
        out = zeros(self.dim, self.dim)
        for i, c in enumerate(np.asarray(x, dtype=object)):
            if c != 0:
                out = out + c * self.action[i]
        return out

    def validate(self) -> None:
        a = self.algebra
        d = self.dim
        if not np.all(self.act(a.unit) == la.eye(d)):
            raise ModuleError("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                if self.side == "left":
                    lhs = la.matmul(self.action[i], self.action[j])
                else:
                    lhs = la.matmul(self.action[j], self.action[i])
                rhs = self.act(a.c[i, j])
                if not np.all(lhs == rhs):
                    raise ModuleError(f"action violates the multiplication table at basis pair ({i}, {j})")

    def as_left(self) -> "Module":
        """The same data viewed as a left module (over the opposite algebra if right)."""
        if self.side == "left":
            return self
        return Module(self.algebra.opposite(), "left", self.action, dim=self.dim, check=False, name=self.name)

    def as_right_over_opposite(self) -> "Module":
        if self.side == "right":
            return self
        return Module(self.algebra.opposite(), "right", self.action, dim=self.dim, check=False, name=self.name)

    def direct_sum(self, other: "Module") -> "Module":
        if other.side != self.side or not _same_algebra(self.algebra, other.algebra):
            raise ModuleError("direct sum needs modules on the same side over the same algebra")
        acts = [la.block_diag(A, B) for A, B in zip(self.action, other.action)]
        return Module(self.algebra, self.side, acts, dim=self.dim + other.dim, check=False)

    def is_zero(self) -> bool:
        return self.dim == 0

    # ------------------------------------------------------ vertex structure
    @cached_property
    def vertex_data(self) -> list[tuple[np.ndarray, list[int], np.ndarray]]:
        """Per vertex v: (rref basis rows of e_v M, pivots, coordinate matrix M -> e_v M)."""
        a = self.algebra
        if a.idempotents is None:
            raise ModuleError("the algebra has no declared idempotents")
        out = []
        for e in a.idempotents:
            E = self.act(e)
            basis, piv = la.row_basis(E.T, self.dim)
            coord = E[piv, :] if piv else zeros(0, self.dim)
            out.append((basis, piv, coord))
        return out

    @cached_property
    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(b.shape[0] for b, _, _ in self.vertex_data)

    def restricted_action(self, x, v: int, w: int) -> np.ndarray:
        """Matrix of ``x`` as a map e_v M -> e_w M in vertex bases."""
        bv, _, _ = self.vertex_data[v]
        _, _, cw = self.vertex_data[w]
        return la.matmul(la.matmul(cw, self.act(x)), bv.T)

    @cached_property
    def radical_basis(self) -> tuple[np.ndarray, list[int]]:
        """rref basis of rad(M) = rad(A) M."""
        a = self.algebra
        if a.split_basic:
            elems = [x for _, _, x in a.arrows]
        else:
            elems = list(a.radical[0])
        cols = [self.act(x).T for x in elems]
        if not cols or self.dim == 0:
            return zeros(0, self.dim), []
        return la.row_basis(np.concatenate(cols, axis=0), self.dim)

    # ----------------------------------------------------- sub and quotients
    def submodule(self, rows) -> "Submodule":
        basis, piv = la.row_basis(np.asarray(rows, dtype=object).reshape(-1, self.dim), self.dim) if np.asarray(rows).size else (zeros(0, self.dim), [])
        k = basis.shape[0]
        acts = []
        for A in self.action:
            if k == 0:
                acts.append(zeros(0, 0))
                continue
            images = la.matmul(basis, A.T)
            c = images[:, piv]
            if not la.is_zero(images - la.matmul(c, basis)):
                raise ModuleError("subspace is not a submodule")
            acts.append(c.T.copy())
        return Submodule(Module(self.algebra, self.side, acts, dim=k, check=False), basis, piv, self)

    def quotient(self, rows) -> "QuotientModule":
        arr = np.asarray(rows, dtype=object)
        basis, piv = la.row_basis(arr.reshape(-1, self.dim), self.dim) if arr.size else (zeros(0, self.dim), [])
        proj = la.quotient_projection(basis, piv, self.dim)
        free = la.complement_columns(piv, self.dim)
        acts = []
        for A in self.action:
            acts.append(la.matmul(proj.T, A[:, free]) if free else zeros(0, 0))
        return QuotientModule(Module(self.algebra, self.side, acts, dim=len(free), check=False), proj, free, self)


@dataclass
class Submodule:
    module: Module
    basis: np.ndarray  # rows in ambient coordinates (rref)
    pivots: list[int]
    ambient: Module


@dataclass
class QuotientModule:
    module: Module
    projection: np.ndarray  # row vector in ambient -> row coordinates in quotient
    lift_columns: list[int]
    ambient: Module


class ModuleHom:
    """Module homomorphism; ``matrix`` is (dim target) x (dim source)."""

    def __init__(self, source: Module, target: Module, matrix, check=True):
        self.source = source
        self.target = target
        m = np.asarray(matrix, dtype=object)
        if m.size == 0:
            m = zeros(target.dim, source.dim)
        if m.shape != (target.dim, source.dim):
            raise ModuleError("hom matrix has the wrong shape")
        self.matrix = m
        if check:
            self.validate()

    def validate(self) -> None:
        if self.source.side != self.target.side or not _same_algebra(self.source.algebra, self.target.algebra):
            raise ModuleError("source and target must be modules on the same side over the same algebra")
        for A, B in zip(self.source.action, self.target.action):
            if not np.all(la.matmul(self.matrix, A) == la.matmul(B, self.matrix)):
                raise ModuleError("matrix does not intertwine the actions")

    def compose(self, after: "ModuleHom") -> "ModuleHom":
        """``after`` following ``self``."""
        return ModuleHom(self.source, after.target, la.matmul(after.matrix, self.matrix), check=False)

    def rank(self) -> int:
        return la.rank(self.matrix)


# ---------------------------------------------------------------- projectives
def _proj_data(a: BasedAlgebra, v: int):
    cache = a.__dict__.setdefault("_proj_cache", {})
    if v not in cache:
        e = a.idempotents[v]
        rows = np.array([a.mul(a.basis_vector(k), e) for k in range(a.dim)], dtype=object).reshape(a.dim, a.dim)
        basis, piv = la.row_basis(rows, a.dim)
        acts = []
        for L in a.left_regular:
            images = la.matmul(basis, L.T)
            acts.append(images[:, piv].T.copy())
        mod = Module(a, "left", acts, dim=basis.shape[0], check=False, name=f"P{v + 1}")
        cache[v] = (mod, basis, piv)
    return cache[v]


def projective_indecomposables(a: BasedAlgebra) -> list[Module]:
    """The modules ``Ae_v``, one per declared idempotent."""
    if not a.split_basic:
        raise ModuleError("projective_indecomposables needs a split basic algebra")
    return [_proj_data(a, v)[0] for v in range(a.num_vertices)]


def projective_module(a: BasedAlgebra, v: int) -> Module:
    return _proj_data(a, v)[0]


def projective_basis(a: BasedAlgebra, v: int) -> tuple[np.ndarray, list[int]]:
    """Basis of ``Ae_v`` as rows in algebra coordinates."""
    _, basis, piv = _proj_data(a, v)
    return basis, piv


def simple_module(a: BasedAlgebra, v: int, side: str = "left") -> Module:
    chi = a.simple_characters[:, v]
    acts = [la.mat([[chi[b]]]) for b in range(a.dim)]
    return Module(a, side, acts, dim=1, check=False, name=f"S{v + 1}")


def regular_module(a: BasedAlgebra, side: str = "left") -> Module:
    acts = a.left_regular if side == "left" else a.right_regular
    return Module(a, side, acts, dim=a.dim, check=False, name="A")


def right_projective(a: BasedAlgebra, v: int) -> Module:
    """The right module ``e_v A``."""
    p = _proj_data(a.opposite(), v)[0]
    return Module(a, "right", p.action, dim=p.dim, check=False, name=f"{v + 1}P")


def injective_module(a: BasedAlgebra, v: int) -> Module:
    """The left injective ``D(e_v A)``."""
    m = dual_module(right_projective(a, v))
    m.name = f"I{v + 1}"
    return m


def projective_sum(a: BasedAlgebra, vertices) -> tuple[Module, list[int]]:
    """``(+)_j Ae_{v_j}`` and the offsets of the summands."""
    mods = [_proj_data(a, v)[0] for v in vertices]
    offsets = []
    off = 0
    for m in mods:
        offsets.append(off)
        off += m.dim
    acts = []
    for i in range(a.dim):
        acts.append(la.block_diag(*[m.action[i] for m in mods]) if mods else zeros(0, 0))
    return Module(a, "left", acts, dim=off, check=False), offsets


def element_block(a: BasedAlgebra, v: int, w: int, elem) -> np.ndarray:
    """Matrix of ``x -> x elem`` from ``Ae_v`` to ``Ae_w``."""
    bv, _ = projective_basis(a, v)
    bw, pw = projective_basis(a, w)
    if bv.shape[0] == 0 or bw.shape[0] == 0:
        return zeros(bw.shape[0], bv.shape[0])
    images = la.matmul(bv, a.right_matrix(elem).T)
    return images[:, pw].T.copy()


def element_matrix_map(a: BasedAlgebra, src, tgt, elems) -> np.ndarray:
    """Module matrix of an element matrix ``elems[k][j]`` (target k, source j)."""
    src_dims = [projective_basis(a, v)[0].shape[0] for v in src]
    tgt_dims = [projective_basis(a, v)[0].shape[0] for v in tgt]
    out = zeros(sum(tgt_dims), sum(src_dims))
    r = 0
    for k, w in enumerate(tgt):
        c = 0
        for j, v in enumerate(src):
            e = elems[k][j]
            if not la.is_zero(e):
                out[r : r + tgt_dims[k], c : c + src_dims[j]] = element_block(a, v, w, e)
            c += src_dims[j]
        r += tgt_dims[k]
    return out


def _require_left_basic(m: Module) -> Module:
    lm = m.as_left()
    if not lm.algebra.split_basic:
        raise ModuleError("this operation needs a split basic algebra (use basic_algebra first)")
    return lm


# -------------------------------------------------------------------- Hom
def _hom_basis_matrices(m: Module, n: Module) -> list[np.ndarray]:
    a = m.algebra
    if a.split_basic:
        r = a.num_vertices
        vm, vn = m.vertex_data, n.vertex_data
        dims = [(vn[v][0].shape[0], vm[v][0].shape[0]) for v in range(r)]
        offs = []
        tot = 0
        for dn, dm in dims:
            offs.append(tot)
            tot += dn * dm
        if tot == 0:
            return []
        blocks = []
        for v, w, x in a.arrows:
            dn_w, dm_w = dims[w]
            dn_v, dm_v = dims[v]
            if dn_w * dm_v == 0:
                continue
            xm = m.restricted_action(x, v, w)  # dm_w x dm_v
            xn = n.restricted_action(x, v, w)  # dn_w x dn_v
            eq = zeros(dn_w * dm_v, tot)
            if dm_w:
                eq[:, offs[w] : offs[w] + dn_w * dm_w] = la.kron(la.eye(dn_w), xm.T)
            if dn_v:
                eq[:, offs[v] : offs[v] + dn_v * dm_v] = eq[:, offs[v] : offs[v] + dn_v * dm_v] - la.kron(xn, la.eye(dm_v))
            blocks.append(eq)
        sols = la.kernel_basis(np.concatenate(blocks, axis=0)) if blocks else la.eye(tot)
        out = []
        for s in sols:
            F = zeros(n.dim, m.dim)
            for v in range(r):
                dn, dm = dims[v]
                if dn * dm == 0:
                    continue
                fv = s[offs[v] : offs[v] + dn * dm].reshape(dn, dm)
                F = F + la.matmul(la.matmul(vn[v][0].T, fv), vm[v][2])
            out.append(F)
        return out
    dm, dn = m.dim, n.dim
    if dm * dn == 0:
        return []
    eqs = [la.kron(la.eye(dn), A.T) - la.kron(B, la.eye(dm)) for A, B in zip(m.action, n.action)]
    sols = la.kernel_basis(np.concatenate(eqs, axis=0))
    return [s.reshape(dn, dm) for s in sols]


def hom_space(m: Module, n: Module) -> list[ModuleHom]:
    """Basis of Hom_A(m, n)."""
    if m.side != n.side or not _same_algebra(m.algebra, n.algebra):
        raise ModuleError("hom_space needs modules on the same side over the same algebra")
    lm, ln = m.as_left(), n.as_left()
    if ln.algebra is not lm.algebra:
        ln = Module(lm.algebra, "left", ln.action, dim=ln.dim, check=False)
    return [ModuleHom(m, n, F, check=False) for F in _hom_basis_matrices(lm, ln)]


def hom_dim(m: Module, n: Module) -> int:
    return len(hom_space(m, n))


def find_module_isomorphism(m: Module, n: Module, tries: int = 32, seed: int = 0) -> np.ndarray | None:
    """Randomized search for an invertible homomorphism; any hit is verified."""
    if m.dim != n.dim or m.side != n.side:
        return None
    if m.dim == 0:
        return zeros(0, 0)
    lm, ln = m.as_left(), n.as_left()
    if lm.algebra.split_basic and lm.dimension_vector != ln.dimension_vector:
        return None
    basis = [h.matrix for h in hom_space(m, n)]
    if not basis:
        return None
    for F in basis:
        if la.rank(F) == m.dim:
            return F
    rng = random.Random(seed)
    for _ in range(tries):
        F = zeros(n.dim, m.dim)
        for B in basis:
            c = rng.randint(-3, 3)
            if c:
                F = F + c * B
        if la.rank(F) == m.dim:
            return F
    return None


# ----------------------------------------------------- top and radical
@dataclass
class TopRadical:
    radical: Submodule
    top: QuotientModule


def top_and_radical(m: Module) -> TopRadical:
    lm = _require_left_basic(m)
    rad, piv = lm.radical_basis
    sub = m.submodule(rad)
    quo = m.quotient(rad)
    return TopRadical(sub, quo)


# --------------------------------------------------------- projective covers
@dataclass
class ResolutionStep:
    """Projective cover ``P -> M`` of a left module."""

    projective: Module
    vertices: list[int]
    offsets: list[int]
    generators: np.ndarray  # one row per summand, in M coordinates
    cover_map: ModuleHom
    kernel: Submodule


def _cover_generators(m: Module) -> tuple[list[int], list[np.ndarray]]:
    rad, piv = m.radical_basis
    verts, gens = [], []
    cur, cpiv = rad, piv
    for v, (basis, _, _) in enumerate(m.vertex_data):
        for row in basis:
            if not la.in_span(cur, cpiv, row):
                verts.append(v)
                gens.append(row.copy())
                cur, cpiv = la.span_sum(cur, row.reshape(1, -1))
    return verts, gens


def _cover_matrix(m: Module, verts, gens) -> np.ndarray:
    a = m.algebra
    cols = []
    for v, g in zip(verts, gens):
        basis, _ = projective_basis(a, v)
        G = np.array([la.matmul(A, g) for A in m.action], dtype=object).reshape(a.dim, m.dim)
        cols.append(la.matmul(basis, G).T)
    if not cols:
        return zeros(m.dim, 0)
    return np.concatenate(cols, axis=1)


def projective_cover(m: Module) -> ResolutionStep:
    """Minimal projective cover of a left module over a split basic algebra.

    Right modules are covered as left modules over the opposite algebra.
    """
    lm = _require_left_basic(m)
    verts, gens = _cover_generators(lm)
    P, offsets = projective_sum(lm.algebra, verts)
    pi = _cover_matrix(lm, verts, gens)
    ker = la.kernel_basis(pi) if P.dim else zeros(0, 0)
    sub = P.submodule(ker) if P.dim else P.submodule(zeros(0, 0))
    g = np.array(gens, dtype=object).reshape(len(gens), lm.dim) if gens else zeros(0, lm.dim)
    return ResolutionStep(P, verts, offsets, g, ModuleHom(P, lm, pi, check=False), sub)


def syzygy(m: Module) -> Module:
    return projective_cover(m).kernel.module


def is_projective(m: Module) -> bool:
    lm = _require_left_basic(m)
    verts, _ = _cover_generators(lm)
    return sum(projective_basis(lm.algebra, v)[0].shape[0] for v in verts) == lm.dim


def _split_elements(a: BasedAlgebra, verts, offsets, vec) -> list[np.ndarray]:
    """Components of a vector of (+) Ae_v as algebra elements."""
    out = []
    for v, off in zip(verts, offsets):
        basis, _ = projective_basis(a, v)
        part = vec[off : off + basis.shape[0]]
        out.append(la.matmul(part, basis) if basis.shape[0] else zeros(a.dim))
    return out


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> M`` of a left module.

    ``differentials[k]`` (k >= 1) is the element matrix of ``P_k -> P_{k-1}``,
    indexed ``[target summand][source summand]``.
    """

    module: Module
    vertices: list[list[int]]
    differentials: list  # index 0 unused
    syzygies: list[Submodule]  # syzygies[k] = Omega^{k+1} inside P_k
    augmentation: np.ndarray
    length: int | None  # projective dimension when the resolution stopped at a zero syzygy
    periodic: tuple[int, int] | None = None

    @property
    def complete(self) -> bool:
        return self.length is not None

    def pd(self, cap: int) -> ExtNat:
        if self.length is not None and self.length <= cap:
            return ExtNat.finite(self.length)
        if self.periodic is not None:
            return ExtNat.infinite()
        return ExtNat.unknown(cap + 1)


def minimal_resolution(
    m: Module, depth: int, detect_period: bool = True, seed: int = 0, size_limit: int = SIZE_LIMIT
) -> Resolution:
    """Resolve a module until the syzygy vanishes or ``depth + 1`` terms exist.

    With ``detect_period`` the computation also stops once a syzygy is
    isomorphic to an earlier syzygy (or to the module), which certifies that
    the resolution never terminates.  It also stops, undecided, once a
    syzygy is larger than ``size_limit``.
    """
    lm = _require_left_basic(m)
    a = lm.algebra
    step = projective_cover(lm)
    verts = [step.vertices]
    diffs: list = [None]
    syz = [step.kernel]
    seen = [lm]
    length = None
    periodic = None
    current = step
    k = 0
    while True:
        if current.kernel.module.dim == 0:
            length = k
            break
        if k >= depth or current.kernel.module.dim > size_limit:
            break
        omega = current.kernel.module
        if detect_period:
            for j, prev in enumerate(seen):
                if prev.dim == omega.dim and prev.dimension_vector == omega.dimension_vector:
                    if find_module_isomorphism(prev, omega, seed=seed) is not None:
                        periodic = (j, k + 1)
                        break
            if periodic is not None:
                break
            seen.append(omega)
        nxt = projective_cover(omega)
        # generators of Omega expressed in the ambient projective P_k
        amb = la.matmul(nxt.generators, current.kernel.basis) if nxt.generators.shape[0] else zeros(0, current.projective.dim)
        elems = [[None] * len(nxt.vertices) for _ in current.vertices]
        for j in range(len(nxt.vertices)):
            comps = _split_elements(a, current.vertices, current.offsets, amb[j])
            for t in range(len(current.vertices)):
                elems[t][j] = comps[t]
        diffs.append(elems)
        verts.append(nxt.vertices)
        syz.append(nxt.kernel)
        current = nxt
        k += 1
    return Resolution(lm, verts, diffs, syz, step.generators, length, periodic)


def projective_dimension(m: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> ExtNat:
    """Exact if at most ``cap``; infinite when certified periodic; else unknown(>= cap+1)."""
    if cap < 0:
        raise ModuleError("cap must be non-negative")
    if m.dim == 0:
        return ExtNat.finite(0)
    lm = _require_left_basic(m)
    if lm.algebra.is_local() and lm.dim > 0:
        # over a local algebra a module of finite pd is free
        return ExtNat.finite(0) if is_projective(lm) else ExtNat.infinite()
    res = minimal_resolution(lm, cap + 1, detect_period=True, seed=seed)
    return res.pd(cap)


def dual_module(m: Module) -> Module:
    """Linear dual: transposed actions on the opposite side over the same algebra."""
    side = "right" if m.side == "left" else "left"
    return Module(m.algebra, side, [A.T.copy() for A in m.action], dim=m.dim, check=False,
                  name=f"D({m.name})" if m.name else None)


def injective_dimension(m: Module, cap: int = DEFAULT_CAP, seed: int = 0) -> ExtNat:
    return projective_dimension(dual_module(m), cap, seed=seed)


def is_injective(m: Module) -> bool:
    return is_projective(dual_module(m))


def restrict_scalars(f: AlgebraHom, m: Module) -> Module:
    if not _same_algebra(f.target, m.algebra):
        raise ModuleError("module is not over the target of the homomorphism")
    acts = [m.act(f.matrix[i]) for i in range(f.source.dim)]
    return Module(f.source, m.side, acts, dim=m.dim, check=False)


# ------------------------------------------------------------------ tensor
@dataclass
class TensorResult:
    dim: int
    space_dim: int
    relation_rank: int


def tensor_over_algebra(m: Module, n: Module) -> TensorResult:
    """Dimension of ``m (x)_A n`` for a right module m and a left module n."""
    if m.side != "right" or n.side != "left":
        raise ModuleError("tensor_over_algebra needs a right module and a left module")
    if not _same_algebra(m.algebra, n.algebra):
        raise ModuleError("modules are over different algebras")
    a = m.algebra
    if a.split_basic:
        r = a.num_vertices
        vm, vn = m.vertex_data, n.vertex_data
        dims = [(vm[v][0].shape[0], vn[v][0].shape[0]) for v in range(r)]
        offs, tot = [], 0
        for dmv, dnv in dims:
            offs.append(tot)
            tot += dmv * dnv
        rows = []
        for v, w, x in a.arrows:
            # x = e_w x e_v: (y x) (x) z - y (x) (x z) for y in m e_w, z in e_v n
            dmw, dnw = dims[w]
            dmv, dnv = dims[v]
            if dmw * dnv == 0:
                continue
            xm = m.restricted_action(x, w, v)  # m e_w -> m e_v  (dmv x dmw)
            xn = n.restricted_action(x, v, w)  # e_v n -> e_w n  (dnw x dnv)
            rel = zeros(dmw * dnv, tot)
            if dmv:
                rel[:, offs[v] : offs[v] + dmv * dnv] = la.kron(xm.T, la.eye(dnv))
            if dnw:
                rel[:, offs[w] : offs[w] + dmw * dnw] = rel[:, offs[w] : offs[w] + dmw * dnw] - la.kron(la.eye(dmw), xn.T)
            rows.append(rel)
        rk = la.rank(np.concatenate(rows, axis=0)) if rows else 0
        return TensorResult(tot - rk, tot, rk)
    dm, dn = m.dim, n.dim
    rows = [la.kron(A.T, la.eye(dn)) - la.kron(la.eye(dm), B.T) for A, B in zip(m.action, n.action)]
    rk = la.rank(np.concatenate(rows, axis=0)) if rows and dm * dn else 0
    return TensorResult(dm * dn - rk, dm * dn, rk)


def _homology_dims(maps, term_dims) -> list[int]:
    """Homology of a chain complex given maps[k]: C_k -> C_{k-1} (k >= 1)."""
    ranks = {}
    for k, M in maps.items():
        ranks[k] = la.rank(M) if M.size else 0
    out = []
    for k in range(len(term_dims)):
        out.append(term_dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


@dataclass
class TorResult:
    dims: list[ExtNat]
    resolution_length: int | None
    truncated: bool
    periodic: tuple[int, int] | None


def tor_dims_detailed(
    m: Module, n: Module, max_i: int = 8, cap: int = DEFAULT_CAP, route: str = "left", resolution: Resolution | None = None
) -> TorResult:
    if m.side != "right" or n.side != "left":
        raise ModuleError("tor_dims needs a right module and a left module")
    if route == "right":
        a_op = m.algebra.opposite()
        mm = Module(a_op, "left", m.action, dim=m.dim, check=False)
        nn = Module(a_op, "right", n.action, dim=n.dim, check=False)
        return tor_dims_detailed(nn, mm, max_i, cap, route="left")
    a = n.algebra
    if not a.split_basic:
        raise ModuleError("tor_dims needs a split basic algebra")
    depth = min(max_i + 1, max(cap, max_i + 1))
    res = resolution if resolution is not None else minimal_resolution(n, depth, detect_period=False)
    mm = m if m.algebra is a else Module(a, "right", m.action, dim=m.dim, check=False)
    vd = mm.vertex_data
    terms = []
    for k in range(max_i + 2):
        terms.append(res.vertices[k] if k < len(res.vertices) else [])
    term_dims = [sum(vd[v][0].shape[0] for v in t) for t in terms]
    maps = {}
    for k in range(1, max_i + 2):
        if k >= len(res.differentials) or not terms[k] or not terms[k - 1]:
            continue
        elems = res.differentials[k]
        blocks = []
        for t, w in enumerate(terms[k - 1]):
            row = []
            for j, v in enumerate(terms[k]):
                row.append(mm.restricted_action(elems[t][j], v, w))
            blocks.append(np.concatenate(row, axis=1) if row else zeros(vd[w][0].shape[0], 0))
        maps[k] = np.concatenate(blocks, axis=0)
    h = _homology_dims(maps, term_dims)
    truncated = res.length is None
    # without the outgoing differential a degree is not computed
    reliable = max_i if not truncated else len(res.vertices) - 2
    dims = [ExtNat.finite(x) if i <= reliable else ExtNat.unknown(0) for i, x in enumerate(h[: max_i + 1])]
    return TorResult(dims, res.length, truncated, res.periodic)


def tor_dims(m: Module, n: Module, max_i: int = 8, cap: int = DEFAULT_CAP, route: str = "left") -> list[ExtNat]:
    """Dimensions of Tor_0 .. Tor_{max_i} of a right module m and a left module n."""
    return tor_dims_detailed(m, n, max_i, cap, route).dims


def tor_vanishing(m: Module, n: Module, start: int, cap: int = DEFAULT_CAP) -> str:
    """Decide ``Tor_i(m, n) = 0 for all i >= start``.

    Returns "holds" (certified by a terminating or periodic resolution of n),
    "fails", or "holds up to cap".
    """
    # cheap shallow pass first: nonvanishing usually shows in low degrees
    shallow = minimal_resolution(n, start + 3, detect_period=False)
    low = tor_dims_detailed(m, n, max_i=start + 2, cap=cap, resolution=shallow).dims
    if any(d.is_finite and d.value != 0 for d in low[start:]):
        return "fails"
    res = minimal_resolution(n, cap + 1, detect_period=True)
    if res.length is not None:
        top = res.length
    elif res.periodic is not None:
        top = res.periodic[1] + 1
    else:
        top = min(cap, len(res.vertices) - 2)
    if res.periodic is not None:
        dims = tor_dims(m, n, max_i=max(top, start), cap=cap)
    else:
        dims = tor_dims_detailed(m, n, max_i=max(top, start), cap=cap, resolution=res).dims
    if any(d.is_finite and d.value != 0 for d in dims[start:]):
        return "fails"
    if res.length is not None or res.periodic is not None:
        return "holds"
    return "holds up to cap"


def ext_dims(m: Module, n: Module, max_i: int = 8, cap: int = DEFAULT_CAP) -> list[ExtNat]:
    """Dimensions of Ext^0 .. Ext^{max_i}(m, n) for modules on the same side."""
    if m.side != n.side or not _same_algebra(m.algebra, n.algebra):
        raise ModuleError("ext_dims needs modules on the same side over the same algebra")
    lm, ln = m.as_left(), n.as_left()
    a = lm.algebra
    if ln.algebra is not a:
        ln = Module(a, "left", ln.action, dim=ln.dim, check=False)
    if not a.split_basic:
        raise ModuleError("ext_dims needs a split basic algebra")
    res = minimal_resolution(lm, max_i + 1, detect_period=False)
    vd = ln.vertex_data
    terms = [res.vertices[k] if k < len(res.vertices) else [] for k in range(max_i + 2)]
    term_dims = [sum(vd[v][0].shape[0] for v in t) for t in terms]
    # cochain maps delta^k: Hom(P_{k-1}) -> Hom(P_k); reuse homology of the dual chain complex
    maps = {}
    for k in range(1, max_i + 2):
        if k >= len(res.differentials) or not terms[k] or not terms[k - 1]:
            continue
        elems = res.differentials[k]
        blocks = []
        for j, v in enumerate(terms[k]):
            row = []
            for t, w in enumerate(terms[k - 1]):
                row.append(ln.restricted_action(elems[t][j], w, v))
            blocks.append(np.concatenate(row, axis=1))
        maps[k] = np.concatenate(blocks, axis=0)
    h = _homology_dims(maps, term_dims)
    return [ExtNat.finite(x) for x in h[: max_i + 1]]


# ---------------------------------------------------- endomorphism algebras
def _flat_basis(mats, shape) -> tuple[np.ndarray, list[int]]:
    if not mats:
        return zeros(0, shape[0] * shape[1]), []
    rows = np.array([M.reshape(-1) for M in mats], dtype=object).reshape(len(mats), -1)
    return la.row_basis(rows, shape[0] * shape[1])


@dataclass
class EndomorphismAlgebra:
    """End(M) with the product ``f * g = g o f`` (f first, then g)."""

    algebra: BasedAlgebra
    maps: list[np.ndarray]
    flat_basis: np.ndarray
    pivots: list[int]
    module: Module
    split_basic: bool

    def coords(self, F) -> np.ndarray:
        return la.coords(self.flat_basis, self.pivots, np.asarray(F, dtype=object).reshape(-1))

    def to_map(self, x) -> np.ndarray:
        d = self.module.dim
        return la.matmul(np.asarray(x, dtype=object), self.flat_basis).reshape(d, d)


def endomorphism_basis(m: Module) -> tuple[np.ndarray, list[int]]:
    mats = [h.matrix for h in hom_space(m, m)]
    return _flat_basis(mats, (m.dim, m.dim))


def endomorphism_algebra(m: Module, decompose: bool = True) -> EndomorphismAlgebra:
    if m.dim == 0:
        raise ModuleError("endomorphism algebra of the zero module")
    flat, piv = endomorphism_basis(m)
    d = m.dim
    maps = [row.reshape(d, d) for row in flat]
    n = len(maps)
    c = np.empty((n, n, n), dtype=object)
    for p in range(n):
        for q in range(n):
            prod = la.matmul(maps[q], maps[p])
            c[p, q, :] = la.coords(flat, piv, prod.reshape(-1))
    unit = la.coords(flat, piv, la.eye(d).reshape(-1))
    alg = BasedAlgebra(c, unit, None, [f"f{i}" for i in range(n)], name=f"End({m.name or 'M'})", check=False)
    if decompose:
        alg.idempotents = decompose_idempotents(alg)
    return EndomorphismAlgebra(alg, maps, flat, piv, m, alg.split_basic if alg.idempotents else False)


# ------------------------------------------------------ idempotent splitting
def _min_poly(a: BasedAlgebra, x, unit) -> list:
    """Monic minimal polynomial of ``x`` in the unital subalgebra with unit ``unit``."""
    powers = [unit]
    basis, piv = la.row_basis(unit.reshape(1, -1), a.dim)
    while True:
        nxt = a.mul(powers[-1], x)
        mat = np.array(powers, dtype=object).reshape(len(powers), a.dim)
        sol = la.solve_linear(mat.T, nxt)
        if sol is not None:
            # x^k = sum sol_i x^i
            return [sympy.Rational(int(-s.numerator), int(s.denominator)) for s in sol] + [sympy.Integer(1)]
        powers.append(nxt)


def _eval_poly(a: BasedAlgebra, coeffs, x, unit) -> np.ndarray:
    out = zeros(a.dim)
    for cf in reversed(coeffs):
        out = a.mul(out, x) + la.rat(f"{cf.p}/{cf.q}") * unit
    return out


def _split_by(a: BasedAlgebra, x, f):
    """Try to split the idempotent ``f`` using a polynomial in ``x`` (x in fAf)."""
    X = sympy.Symbol("X")
    coeffs = _min_poly(a, x, f)
    poly = sympy.Poly(list(reversed(coeffs)), X, domain="QQ")
    _, factors = sympy.factor_list(poly)
    if len(factors) < 2:
        return None
    q1 = factors[0][0] ** factors[0][1]
    q2 = sympy.Poly(1, X, domain="QQ")
    for fac, mult in factors[1:]:
        q2 = q2 * fac ** mult
    s, t, g = sympy.gcdex(q1.as_expr(), q2.as_expr(), X)
    u_poly = sympy.Poly(sympy.expand(t * q2.as_expr()), X, domain="QQ")
    u_poly = u_poly.rem(poly)
    cf = list(reversed(u_poly.all_coeffs()))
    cf = [sympy.Rational(c) for c in cf]
    u = _eval_poly(a, cf, x, f)
    if la.is_zero(u) or np.all(u == f):
        return None
    if not np.all(a.mul(u, u) == u):
        return None
    return u


def _corner_dim(a: BasedAlgebra, f) -> int:
    return a.corner_space(f, f)[0].shape[0]


def _split_semisimple(a: BasedAlgebra, seed: int = 0, budget: int = 400) -> list[np.ndarray]:
    done, todo = [], [a.unit.copy()]
    rng = random.Random(seed)
    while todo:
        f = todo.pop()
        basis, _ = a.corner_space(f, f)
        d = basis.shape[0]
        if d == 1:
            done.append(f)
            continue
        cands = [row for row in basis]
        cands += [a.mul(x, y) for x in basis for y in basis]
        cands += [x + y for i, x in enumerate(basis) for y in basis[i + 1 :]]
        for _ in range(budget):
            z = zeros(a.dim)
            for row in basis:
                c = rng.randint(-2, 2)
                if c:
                    z = z + c * row
            cands.append(z)
        split = None
        for x in cands:
            if la.is_zero(x):
                continue
            split = _split_by(a, x, f)
            if split is not None:
                break
        if split is None:
            raise AlgebraError("non-split; extend scalars out of scope")
        todo.append(split)
        todo.append(f - split)
    # order deterministically by leading coordinate position
    done.sort(key=lambda e: [i for i, x in enumerate(e) if x != 0][0])
    return done


def decompose_idempotents(a: BasedAlgebra, seed: int = 0) -> list[np.ndarray]:
    """Complete set of orthogonal primitive idempotents, lifted from A / rad A."""
    if a.dim == 0:
        return []
    rad, rpiv = a.radical
    bare = BasedAlgebra(a.c, a.unit, None, a.labels, check=False)
    q = quotient_algebra(bare, rad)
    ss = q.algebra
    pieces = _split_semisimple(ss, seed=seed)
    lifts = []
    for e in pieces:
        v = zeros(a.dim)
        for j, col in enumerate(q.lift_columns):
            v[col] = e[j]
        lifts.append(v)
    out = []
    f = a.unit.copy()
    for k, x in enumerate(lifts):
        if k == len(lifts) - 1:
            out.append(f)
            break
        e = a.mul(a.mul(f, x), f)
        for _ in range(64):
            e2 = a.mul(e, e)
            if np.all(e2 == e):
                break
            e = 3 * e2 - 2 * a.mul(e2, e)
        else:
            raise AlgebraError("idempotent lifting did not converge")
        out.append(e)
        f = f - e
    return out


# ------------------------------------------------------------- covariance
def _hom_coords(mats, shape):
    flat, piv = _flat_basis(mats, shape)
    return flat, piv


@dataclass
class CovarianceReport:
    covariant: bool
    injective: bool
    split: bool
    section: np.ndarray | None


def is_covariant_morphism(f: ModuleHom) -> CovarianceReport:
    """Covariance test for ``f: Y -> X``.

    (i) ``h -> f o h`` from Hom(X, Y) to Hom(X, X) is injective;
    (ii) ``g -> f o g`` from End(Y) to Hom(Y, X) has a section that commutes
    with precomposition by End(Y).
    """
    Y, X = f.source, f.target
    F = f.matrix
    hxy = [h.matrix for h in hom_space(X, Y)]
    imgs = [la.matmul(F, H) for H in hxy]
    injective = True
    if hxy:
        injective = la.rank(np.array([I.reshape(-1) for I in imgs], dtype=object).reshape(len(imgs), -1)) == len(hxy)
    endy = [h.matrix for h in hom_space(Y, Y)]
    hyx = [h.matrix for h in hom_space(Y, X)]
    fy, py = _flat_basis(endy, (Y.dim, Y.dim))
    fx, px = _flat_basis(hyx, (X.dim, Y.dim))
    ny, nx = fy.shape[0], fx.shape[0]
    endy_b = [r.reshape(Y.dim, Y.dim) for r in fy]
    hyx_b = [r.reshape(X.dim, Y.dim) for r in fx]
    if nx == 0:
        return CovarianceReport(injective, injective, True, zeros(ny, 0))
    phi = zeros(nx, ny)
    for j, G in enumerate(endy_b):
        phi[:, j] = la.coords(fx, px, la.matmul(F, G).reshape(-1))
    # unknown section S (ny x nx), row-major; phi S = I and S P_a = Q_a S
    eqs, rhs = [], []
    eqs.append(la.kron(phi, la.eye(nx)))
    rhs.append(la.eye(nx).reshape(-1))
    for G in endy_b:
        P = zeros(nx, nx)
        for j, K in enumerate(hyx_b):
            P[:, j] = la.coords(fx, px, la.matmul(K, G).reshape(-1))
        Q = zeros(ny, ny)
        for j, H in enumerate(endy_b):
            Q[:, j] = la.coords(fy, py, la.matmul(H, G).reshape(-1))
        eqs.append(la.kron(la.eye(ny), P.T) - la.kron(Q, la.eye(nx)))
        rhs.append(zeros(ny * nx))
    sol = la.solve_linear(np.concatenate(eqs, axis=0), np.concatenate(rhs))
    split = sol is not None
    section = sol.reshape(ny, nx) if split else None
    return CovarianceReport(injective and split, injective, split, section)


@dataclass
class FactorIdeal:
    end: EndomorphismAlgebra
    ideal: np.ndarray  # rows in End(X) coordinates (rref)
    pivots: list[int]


def factor_through_ideal(x: Module, y: Module, end: EndomorphismAlgebra | None = None) -> FactorIdeal:
    """Ideal of End(x) spanned by endomorphisms factoring through y."""
    if end is None:
        end = endomorphism_algebra(x)
    hxy = [h.matrix for h in hom_space(x, y)]
    hyx = [h.matrix for h in hom_space(y, x)]
    rows = []
    for H in hxy:
        for G in hyx:
            rows.append(end.coords(la.matmul(G, H)))
    n = end.algebra.dim
    basis, piv = la.row_basis(np.array(rows, dtype=object).reshape(len(rows), n), n) if rows else (zeros(0, n), [])
    a = end.algebra
    for r in basis:
        for i in range(n):
            for prod in (a.mul(r, a.basis_vector(i)), a.mul(a.basis_vector(i), r)):
                if not la.in_span(basis, piv, prod):
                    raise ModuleError("factorization span is not a two-sided ideal")
    return FactorIdeal(end, basis, piv)


# ----------------------------------------------------------- random modules
def random_element(a: BasedAlgebra, v: int, w: int, rng: random.Random, radical_only: bool = True) -> np.ndarray:
    """Random element of e_v A e_w (inside the radical by default)."""
    basis, _ = a.vertex_corner(v, w)
    rad, rpiv = a.radical
    out = zeros(a.dim)
    for row in basis:
        c = rng.randint(-2, 2)
        if c:
            out = out + c * row
    if radical_only and v == w:
        out = out - a.top_scalar(out, v) * a.idempotents[v]
    return out


def random_presented_module(a: BasedAlgebra, rng: random.Random, max_top: int = 2, max_rel: int = 2) -> Module:
    """Cokernel of a random map between sums of indecomposable projectives."""
    r = a.num_vertices
    top = [rng.randrange(r) for _ in range(rng.randint(1, max_top))]
    rel = [rng.randrange(r) for _ in range(rng.randint(0, max_rel))]
    P0, _ = projective_sum(a, top)
    if not rel:
        return P0
    elems = [[random_element(a, v, w, rng) for v in rel] for w in top]
    M = element_matrix_map(a, rel, top, elems)
    image = M.T
    q = P0.quotient(image)
    return q.module


# --------------------------------------------------------------- JSON format
def module_to_json(m: Module, algebra_ref=None) -> dict:
    acts = []
    for A in m.action:
        entries = [[int(i), int(j), la.format_rat(A[i, j])] for i, j in zip(*np.nonzero(A != 0))]
        acts.append(entries)
    return {"algebra": algebra_ref, "side": m.side, "dim": m.dim, "action": acts}


def module_from_json(data: dict, algebra: BasedAlgebra, check: bool = True) -> Module:
    try:
        d = int(data["dim"])
        side = data.get("side", "left")
        acts = []
        for entries in data["action"]:
            A = zeros(d, d)
            for i, j, c in entries:
                A[int(i), int(j)] = la.rat(c)
            acts.append(A)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ModuleError(f"malformed module data: {exc}") from exc
    return Module(algebra, side, acts, dim=d, check=check)


def named_module(a: BasedAlgebra, name: str) -> Module:
    """Modules by name: S<i>, P<i>, I<i> (1-based), A (regular), DA (dual of A_A)."""
    if name == "A":
        return regular_module(a)
    if name == "DA":
        return dual_module(regular_module(a, "right"))
    kind, rest = name[:1], name[1:]
    if kind in "SPI" and rest.isdigit():
        v = int(rest) - 1
        if not 0 <= v < a.num_vertices:
            raise ModuleError(f"vertex {rest} out of range")
        if kind == "S":
            return simple_module(a, v)
        if kind == "P":
            return projective_module(a, v)
        return injective_module(a, v)
    raise ModuleError(f"unknown module name {name!r}")
