"""Finite-dimensional algebras given by structure constants.

Conventions
-----------
* Elements are coefficient vectors over the basis ``b_0, ..., b_{n-1}``.
* ``c[i, j, k]`` is the coefficient of ``b_k`` in ``b_i * b_j``.
* Path algebras multiply right-to-left: the product ``p * q`` is the path
  "first q, then p", so an arrow ``x: v -> w`` satisfies ``x = e_w x e_v`` and
  left modules are quiver representations.
* Vertices (declared idempotents) are indexed from 0.  Human-facing names such
  as ``S1`` or ``P1`` are 1-based.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import exactla as la
from .exactla import ONE, ZERO, rat, zeros


class AlgebraError(ValueError):
    """Raised for invalid algebra data or unsupported constructions."""


def _as_vec(x, n: int) -> np.ndarray:
    v = np.asarray(x, dtype=object).reshape(-1)
    if v.shape[0] != n:
        raise AlgebraError(f"expected a vector of length {n}, got {v.shape[0]}")
    out = zeros(n)
    for i in range(n):
        out[i] = rat(v[i])
    return out


def _op_name(name):
    if not name:
        return None
    return name[:-3] if name.endswith("^op") else name + "^op"


class BasedAlgebra:
    """Associative unital algebra over Q with a fixed basis.

    Args:
        mult: dense ``(n, n, n)`` array of structure constants.
        unit: coefficient vector of the identity.
        idempotents: optional list of coefficient vectors of the declared
            orthogonal idempotents.  ``None`` means "not declared yet"
            (see :func:`findim.modules.decompose_idempotents`).
        labels: optional basis names.
        name: optional display name.
        check: verify associativity, unit and idempotent laws.
    """

    def __init__(self, mult, unit, idempotents=None, labels=None, name=None, check=True):
        c = np.asarray(mult, dtype=object)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise AlgebraError("structure constants must be an n x n x n array")
        n = c.shape[0]
        cc = np.empty((n, n, n), dtype=object)
        flat_in = c.reshape(-1)
        flat_out = cc.reshape(-1)
        for i in range(flat_in.shape[0]):
            flat_out[i] = rat(flat_in[i])
        self.c = cc
        self.dim = n
        self.unit = _as_vec(unit, n)
        self.idempotents = None if idempotents is None else [_as_vec(e, n) for e in idempotents]
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(n)]
        if len(self.labels) != n:
            raise AlgebraError("label count does not match dimension")
        self.name = name
        self._opposite = None
        if check:
            self.validate()

    # ------------------------------------------------------------------ basics
    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        r = "?" if self.idempotents is None else len(self.idempotents)
        return f"<BasedAlgebra{nm} dim={self.dim} vertices={r}>"

    def basis_vector(self, i: int) -> np.ndarray:
        v = zeros(self.dim)
        v[i] = ONE
        return v

    def zero(self) -> np.ndarray:
        return zeros(self.dim)

    @cached_property
    def _sparse_table(self) -> dict:
        """Nonzero structure constants as ``{(i, j): [(k, c_ijk), ...]}``."""
        out: dict = {}
        for i, j, k in zip(*np.nonzero(self.c != 0)):
            out.setdefault((int(i), int(j)), []).append((int(k), self.c[i, j, k]))
        return out

    def mul(self, x, y) -> np.ndarray:
        out = zeros(self.dim)
        if self.dim == 0:
            return out
        table = self._sparse_table
        xs = [(i, v) for i, v in enumerate(x) if v != 0]
        ys = [(j, w) for j, w in enumerate(y) if w != 0]
        for i, v in xs:
            for j, w in ys:
                terms = table.get((i, j))
                if terms:
                    vw = v * w
                    for k, c in terms:
                        out[k] += vw * c
        return out

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` acting on coefficient column vectors."""
        if self.dim == 0:
            return zeros(0, 0)
        return np.tensordot(np.asarray(x, dtype=object), self.c, axes=(0, 0)).T.copy()

    def right_matrix(self, y) -> np.ndarray:
        """Matrix of ``x -> x y`` acting on coefficient column vectors."""
        if self.dim == 0:
            return zeros(0, 0)
        return np.tensordot(self.c, np.asarray(y, dtype=object), axes=(1, 0)).T.copy()

    @cached_property
    def left_regular(self) -> list[np.ndarray]:
        return [self.c[i].T.copy() for i in range(self.dim)]

    @cached_property
    def right_regular(self) -> list[np.ndarray]:
        return [self.c[:, j, :].T.copy() for j in range(self.dim)]

    def power(self, x, k: int) -> np.ndarray:
        out = self.unit.copy()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def table_equal(self, other: "BasedAlgebra") -> bool:
        return (
            self.dim == other.dim
            and bool(np.all(self.c == other.c))
            and bool(np.all(self.unit == other.unit))
        )

    @property
    def num_vertices(self) -> int:
        return 0 if self.idempotents is None else len(self.idempotents)

    # -------------------------------------------------------------- validation
    def associativity_failure(self):
        """First basis triple (i, j, k) violating associativity, or None."""
        n = self.dim
        nz = {}
        for i in range(n):
            for j in range(n):
                idx = np.nonzero(self.c[i, j] != 0)[0]
                nz[(i, j)] = [(int(k), self.c[i, j, k]) for k in idx]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = {}
                    for l, c1 in nz[(i, j)]:
                        for m, c2 in nz[(l, k)]:
                            lhs[m] = lhs.get(m, ZERO) + c1 * c2
                    rhs = {}
                    for l, c1 in nz[(j, k)]:
                        for m, c2 in nz[(i, l)]:
                            rhs[m] = rhs.get(m, ZERO) + c1 * c2
                    keys = set(lhs) | set(rhs)
                    if any(lhs.get(m, ZERO) != rhs.get(m, ZERO) for m in keys):
                        return (i, j, k)
        return None

    def validate(self) -> None:
        bad = self.associativity_failure()
        if bad is not None:
            raise AlgebraError(f"multiplication is not associative at basis triple {bad}")
        for i in range(self.dim):
            b = self.basis_vector(i)
            if not (np.all(self.mul(self.unit, b) == b) and np.all(self.mul(b, self.unit) == b)):
                raise AlgebraError(f"unit is not a two-sided identity (fails on basis element {i})")
        if self.idempotents is not None:
            total = zeros(self.dim)
            for a, e in enumerate(self.idempotents):
                total = total + e
                for b, f in enumerate(self.idempotents):
                    prod = self.mul(e, f)
                    expect = e if a == b else zeros(self.dim)
                    if not np.all(prod == expect):
                        raise AlgebraError(f"idempotents {a} and {b} are not orthogonal idempotents")
            if self.idempotents and not np.all(total == self.unit):
                raise AlgebraError("declared idempotents do not sum to the unit")
            if any(la.is_zero(e) for e in self.idempotents):
                raise AlgebraError("a declared idempotent is zero")

    # --------------------------------------------------------------- structure
    @cached_property
    def radical(self) -> tuple[np.ndarray, list[int]]:
        """rref basis of the Jacobson radical (Dickson trace form)."""
        n = self.dim
        if n == 0:
            return zeros(0, 0), []
        traces = zeros(n)
        for k in range(n):
            traces[k] = sum((self.c[k, j, j] for j in range(n)), ZERO)
        form = np.tensordot(self.c, traces, axes=(2, 0))  # form[x, y] = tr(L_{b_x b_y})
        ker = la.left_kernel_basis(form)
        return la.row_basis(ker, n)

    @cached_property
    def radical_square(self) -> tuple[np.ndarray, list[int]]:
        rad, _ = self.radical
        if rad.shape[0] == 0:
            return zeros(0, self.dim), []
        prods = [self.mul(x, y) for x in rad for y in rad]
        return la.row_basis(np.array(prods, dtype=object).reshape(len(prods), self.dim), self.dim)

    def corner_space(self, left, right) -> tuple[np.ndarray, list[int]]:
        """rref basis of ``left * A * right`` for elements ``left``, ``right``."""
        rows = [self.mul(self.mul(left, self.basis_vector(k)), right) for k in range(self.dim)]
        return la.row_basis(np.array(rows, dtype=object).reshape(self.dim, self.dim), self.dim)

    def vertex_corner(self, i: int, j: int) -> tuple[np.ndarray, list[int]]:
        """rref basis of ``e_i A e_j``."""
        key = (i, j)
        cache = self.__dict__.setdefault("_vc_cache", {})
        if key not in cache:
            cache[key] = self.corner_space(self.idempotents[i], self.idempotents[j])
        return cache[key]

    @cached_property
    def cartan(self) -> np.ndarray:
        r = self.num_vertices
        out = np.zeros((r, r), dtype=int)
        for i in range(r):
            for j in range(r):
                out[i, j] = self.vertex_corner(i, j)[0].shape[0]
        return out

    def _sandwich_rank(self, left, right, space) -> int:
        rows = [self.mul(self.mul(left, x), right) for x in space]
        if not rows:
            return 0
        return la.rank(np.array(rows, dtype=object).reshape(len(rows), self.dim))

    @cached_property
    def split_basic(self) -> bool:
        if self.idempotents is None:
            return False
        if self.dim == 0:
            return True
        rad, _ = self.radical
        for i, e in enumerate(self.idempotents):
            for j, f in enumerate(self.idempotents):
                full = self.vertex_corner(i, j)[0].shape[0]
                in_rad = self._sandwich_rank(e, f, rad)
                if full - in_rad != (1 if i == j else 0):
                    return False
        return True

    @cached_property
    def simple_characters(self) -> np.ndarray:
        """``chi[b, v]``: scalar by which basis element b acts on the simple S_v."""
        if not self.split_basic:
            raise AlgebraError("simple characters need a split basic algebra")
        r = self.num_vertices
        rad, piv = self.radical
        proj = la.quotient_projection(rad, piv, self.dim)
        e_img = np.array([e.dot(proj) for e in self.idempotents], dtype=object).reshape(r, -1)
        out = zeros(self.dim, r)
        for b in range(self.dim):
            img = proj[b]
            sol = la.solve_linear(e_img.T, img)
            if sol is None:
                raise AlgebraError("basis element not in span of idempotents modulo radical")
            out[b, :] = sol
        return out

    def top_scalar(self, x, v: int):
        """Coefficient of ``e_v`` in ``x`` modulo the radical."""
        return np.asarray(x, dtype=object).dot(self.simple_characters[:, v])

    @cached_property
    def arrows(self) -> list[tuple[int, int, np.ndarray]]:
        """Lifted bases of ``e_w (rad/rad^2) e_v`` as ``(v, w, element)`` triples.

        Together with the declared idempotents these generate the algebra.
        """
        if not self.split_basic:
            raise AlgebraError("arrows are defined for split basic algebras only")
        rad, _ = self.radical
        rad2, _ = self.radical_square
        out = []
        r = self.num_vertices
        for v in range(r):
            for w in range(r):
                e, f = self.idempotents[w], self.idempotents[v]
                full = [self.mul(self.mul(e, x), f) for x in rad]
                sub = [self.mul(self.mul(e, x), f) for x in rad2]
                sub_b, sub_p = la.row_basis(
                    np.array(sub, dtype=object).reshape(len(sub), self.dim), self.dim
                )
                full_b, _ = la.row_basis(np.array(full, dtype=object).reshape(len(full), self.dim), self.dim)
                for idx in la.extend_basis(sub_b, sub_p, full_b):
                    out.append((v, w, full_b[idx].copy()))
        return out

    def generators(self) -> list[np.ndarray]:
        """Elements generating the algebra (idempotents and arrows, or the basis)."""
        if self.split_basic:
            return [e for e in self.idempotents] + [x for _, _, x in self.arrows]
        return [self.basis_vector(i) for i in range(self.dim)]

    def opposite(self) -> "BasedAlgebra":
        if self._opposite is None:
            op = BasedAlgebra(
                self.c.transpose(1, 0, 2),
                self.unit,
                self.idempotents,
                self.labels,
                name=_op_name(self.name),
                check=False,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def is_local(self) -> bool:
        rad, _ = self.radical
        return self.dim - rad.shape[0] == 1

    def is_semisimple(self) -> bool:
        return self.radical[0].shape[0] == 0

    def loewy_length(self) -> int:
        rad, _ = self.radical
        if self.dim == 0:
            return 0
        cur = rad
        length = 1
        while cur.shape[0]:
            prods = [self.mul(x, y) for x in cur for y in rad]
            cur, _ = la.row_basis(np.array(prods, dtype=object).reshape(len(prods), self.dim), self.dim)
            length += 1
        return length


# ---------------------------------------------------------------- morphisms
class AlgebraHom:
    """Unital algebra homomorphism; ``matrix`` maps coefficient rows."""

    def __init__(self, source: BasedAlgebra, target: BasedAlgebra, matrix, check=True):
        self.source = source
        self.target = target
        m = np.asarray(matrix, dtype=object)
        if m.shape != (source.dim, target.dim):
            raise AlgebraError(f"hom matrix must be {source.dim} x {target.dim}")
        self.matrix = la.asmat(m) if m.size else zeros(source.dim, target.dim)
        if check:
            self.validate()

    def __call__(self, x) -> np.ndarray:
        return la.matmul(np.asarray(x, dtype=object), self.matrix)

    def validate(self) -> None:
        s, t = self.source, self.target
        if not np.all(self(s.unit) == t.unit):
            raise AlgebraError("homomorphism does not preserve the unit")
        lhs = np.tensordot(s.c, self.matrix, axes=(2, 0))  # f(b_i b_j)
        t1 = np.tensordot(self.matrix, t.c, axes=(1, 0))  # [i, q, m]
        rhs = np.tensordot(t1, self.matrix, axes=(1, 1)).transpose(0, 2, 1)
        if s.dim and not np.all(lhs == rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise AlgebraError(f"map is not multiplicative on basis pair {tuple(int(x) for x in bad[:2])}")

    def compose(self, other: "AlgebraHom") -> "AlgebraHom":
        """``other`` after ``self``."""
        return AlgebraHom(self.source, other.target, la.matmul(self.matrix, other.matrix), check=False)

    def is_surjective(self) -> bool:
        return la.rank(self.matrix) == self.target.dim

    def is_injective(self) -> bool:
        return la.rank(self.matrix) == self.source.dim

    def kernel(self) -> tuple[np.ndarray, list[int]]:
        return la.row_basis(la.left_kernel_basis(self.matrix), self.source.dim)


def identity_hom(a: BasedAlgebra) -> AlgebraHom:
    return AlgebraHom(a, a, la.eye(a.dim), check=False)


# ----------------------------------------------------------------- bimodules
class Bimodule:
    """S-T-bimodule: ``left_action[i]`` is ``v -> s_i v``, ``right_action[j]`` is ``v -> v t_j``.

    All matrices act on column coordinate vectors.
    """

    def __init__(self, left_algebra, right_algebra, left_action, right_action, dim=None, check=True):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.left_action = [la.asmat(m) if np.asarray(m).size else zeros(*np.asarray(m).shape) for m in left_action]
        self.right_action = [la.asmat(m) if np.asarray(m).size else zeros(*np.asarray(m).shape) for m in right_action]
        if dim is None:
            if self.left_action:
                dim = self.left_action[0].shape[0]
            elif self.right_action:
                dim = self.right_action[0].shape[0]
            else:
                dim = 0
        self.dim = dim
        if len(self.left_action) != left_algebra.dim or len(self.right_action) != right_algebra.dim:
            raise AlgebraError("one action matrix per basis element is required")
        if check:
            self.validate()

    def __repr__(self) -> str:
        return f"<Bimodule dim={self.dim} over ({self.left_algebra.name}, {self.right_algebra.name})>"

    def validate(self) -> None:
        from .modules import Module

        Module(self.left_algebra, "left", self.left_action, dim=self.dim)
        Module(self.right_algebra, "right", self.right_action, dim=self.dim)
        for i, L in enumerate(self.left_action):
            for j, R in enumerate(self.right_action):
                if not np.all(la.matmul(L, R) == la.matmul(R, L)):
                    raise AlgebraError(f"left action {i} and right action {j} do not commute")

    def left_act(self, x) -> np.ndarray:
        out = zeros(self.dim, self.dim)
        for i, c in enumerate(np.asarray(x, dtype=object)):
            if c != 0:
                out = out + c * self.left_action[i]
        return out

    def right_act(self, y) -> np.ndarray:
        out = zeros(self.dim, self.dim)
        for j, c in enumerate(np.asarray(y, dtype=object)):
            if c != 0:
                out = out + c * self.right_action[j]
        return out

    def as_left_module(self):
        from .modules import Module

        return Module(self.left_algebra, "left", self.left_action, dim=self.dim, check=False)

    def as_right_module(self):
        from .modules import Module

        return Module(self.right_algebra, "right", self.right_action, dim=self.dim, check=False)

    def restrict(self, f_left: AlgebraHom | None = None, f_right: AlgebraHom | None = None) -> "Bimodule":
        """Restrict scalars along homomorphisms into the two acting algebras."""
        left_alg, left = self.left_algebra, self.left_action
        right_alg, right = self.right_algebra, self.right_action
        if f_left is not None:
            left_alg = f_left.source
            left = [self.left_act(f_left.matrix[i]) for i in range(f_left.source.dim)]
        if f_right is not None:
            right_alg = f_right.source
            right = [self.right_act(f_right.matrix[i]) for i in range(f_right.source.dim)]
        return Bimodule(left_alg, right_alg, left, right, dim=self.dim, check=False)

    @staticmethod
    def regular(a: BasedAlgebra) -> "Bimodule":
        return Bimodule(a, a, a.left_regular, a.right_regular, dim=a.dim, check=False)

    @staticmethod
    def dual(a: BasedAlgebra) -> "Bimodule":
        """D(A) = Hom_Q(A, Q) with (a.phi)(x) = phi(x a) and (phi.b)(x) = phi(b x)."""
        left = [R.T.copy() for R in a.right_regular]
        right = [L.T.copy() for L in a.left_regular]
        return Bimodule(a, a, left, right, dim=a.dim, check=False)

    @staticmethod
    def zero(s: BasedAlgebra, t: BasedAlgebra) -> "Bimodule":
        return Bimodule(s, t, [zeros(0, 0)] * s.dim, [zeros(0, 0)] * t.dim, dim=0, check=False)

    @staticmethod
    def simple(s: BasedAlgebra, t: BasedAlgebra, i: int = 0, j: int = 0) -> "Bimodule":
        """One-dimensional bimodule e_i M e_j = Q with both radicals acting as zero."""
        chi_s = s.simple_characters[:, i]
        chi_t = t.simple_characters[:, j]
        left = [la.mat([[chi_s[b]]]) for b in range(s.dim)]
        right = [la.mat([[chi_t[b]]]) for b in range(t.dim)]
        return Bimodule(s, t, left, right, dim=1, check=False)

    @staticmethod
    def from_modules(x, y) -> "Bimodule":
        """X tensor_Q Y for a left S-module X and a right T-module Y."""
        if x.side != "left" or y.side != "right":
            raise AlgebraError("need a left module and a right module")
        ix, iy = la.eye(x.dim), la.eye(y.dim)
        left = [la.kron(A, iy) for A in x.action]
        right = [la.kron(ix, B) for B in y.action]
        return Bimodule(x.algebra, y.algebra, left, right, dim=x.dim * y.dim, check=False)


# ------------------------------------------------------------- constructions
@dataclass
class SubalgebraData:
    """A corner ``eAe`` (or other subspace algebra) with its basis inside ``A``."""

    algebra: BasedAlgebra
    basis: np.ndarray  # rows in the ambient coordinates
    pivots: list[int]
    ambient: BasedAlgebra
    idempotent: np.ndarray

    def embed(self, x) -> np.ndarray:
        return la.matmul(np.asarray(x, dtype=object), self.basis)

    def coords(self, y) -> np.ndarray:
        return la.coords(self.basis, self.pivots, y)


def radical_algebra(a: BasedAlgebra) -> np.ndarray:
    return a.radical[0].copy()


def is_split_basic(a: BasedAlgebra) -> bool:
    return a.split_basic


def opposite(a: BasedAlgebra) -> BasedAlgebra:
    return a.opposite()


def _algebra_on_subspace(a: BasedAlgebra, basis: np.ndarray, pivots: list[int], unit) -> np.ndarray:
    d = basis.shape[0]
    c = np.empty((d, d, d), dtype=object)
    for p in range(d):
        for q in range(d):
            prod = a.mul(basis[p], basis[q])
            c[p, q, :] = la.coords(basis, pivots, prod)
    return c


def corner(a: BasedAlgebra, e) -> SubalgebraData:
    """The corner algebra ``eAe`` with unit ``e``."""
    e = _as_vec(e, a.dim)
    if not np.all(a.mul(e, e) == e):
        raise AlgebraError("corner needs an idempotent element")
    basis, piv = a.corner_space(e, e)
    d = basis.shape[0]
    c = _algebra_on_subspace(a, basis, piv, e)
    unit = la.coords(basis, piv, e)
    idem = []
    if a.idempotents is not None:
        for f in a.idempotents:
            if not la.is_zero(f) and la.in_span(basis, piv, f) and np.all(a.mul(e, f) == f) and np.all(a.mul(f, e) == f):
                idem.append(la.coords(basis, piv, f))
        total = zeros(d)
        for f in idem:
            total = total + f
        if d and not np.all(total == unit):
            idem = None
    else:
        idem = None
    labels = None
    if basis.shape == (a.dim, a.dim) and np.all(basis == la.eye(a.dim)):
        labels = a.labels
    sub = BasedAlgebra(c, unit, idem, labels, name=f"{a.name}-corner" if a.name else None, check=False)
    if idem is None and d:
        from .modules import decompose_idempotents

        sub.idempotents = decompose_idempotents(sub)
    return SubalgebraData(sub, basis, piv, a, e)


def ideal_closure(a: BasedAlgebra, generators) -> tuple[np.ndarray, list[int]]:
    """Smallest two-sided ideal containing the given rows."""
    g = np.asarray(generators, dtype=object)
    if g.size == 0:
        return zeros(0, a.dim), []
    g = g.reshape(-1, a.dim)
    basis, piv = la.row_basis(g, a.dim)
    while True:
        new = [basis]
        L = a.left_regular
        R = a.right_regular
        for i in range(a.dim):
            new.append(la.matmul(basis, L[i].T))
            new.append(la.matmul(basis, R[i].T))
        nb, npiv = la.row_basis(np.concatenate(new, axis=0), a.dim)
        if nb.shape[0] == basis.shape[0]:
            return nb, npiv
        basis, piv = nb, npiv


@dataclass
class QuotientData:
    algebra: BasedAlgebra
    projection: AlgebraHom
    ideal: np.ndarray
    ideal_pivots: list[int]
    lift_columns: list[int]  # basis element of A lifting each quotient basis element


def quotient_algebra(a: BasedAlgebra, ideal) -> QuotientData:
    """``A / I``; the quotient basis is the image of the non-pivot basis elements."""
    ib, ipiv = la.row_basis(np.asarray(ideal, dtype=object).reshape(-1, a.dim), a.dim) if np.asarray(ideal).size else (zeros(0, a.dim), [])
    if la.in_span(ib, ipiv, a.unit):
        raise AlgebraError("quotient is zero ring")
    proj = la.quotient_projection(ib, ipiv, a.dim)
    free = la.complement_columns(ipiv, a.dim)
    q = len(free)
    c = np.empty((q, q, q), dtype=object)
    for p, fp in enumerate(free):
        for r, fr in enumerate(free):
            c[p, r, :] = la.matmul(a.c[fp, fr], proj)
    unit = la.matmul(a.unit, proj)
    idem = None
    if a.idempotents is not None:
        idem = [la.matmul(e, proj) for e in a.idempotents]
        idem = [e for e in idem if not la.is_zero(e)]
    labels = [a.labels[f] for f in free]
    qa = BasedAlgebra(c, unit, idem, labels, name=f"{a.name}/I" if a.name else None, check=False)
    hom = AlgebraHom(a, qa, proj, check=False)
    return QuotientData(qa, hom, ib, ipiv, free)


def triangular_matrix_algebra(s: BasedAlgebra, t: BasedAlgebra, m: Bimodule) -> BasedAlgebra:
    """``[[S, M], [0, T]]`` with matrix multiplication; basis order S, M, T."""
    if m.left_algebra is not s or m.right_algebra is not t:
        if not (m.left_algebra.table_equal(s) and m.right_algebra.table_equal(t)):
            raise AlgebraError("bimodule is not over the given pair of algebras")
    ns, nm, nt = s.dim, m.dim, t.dim
    n = ns + nm + nt
    c = zeros(n, n, n)
    c[:ns, :ns, :ns] = s.c
    o = ns + nm
    c[o:, o:, o:] = t.c
    for i in range(ns):
        L = m.left_action[i]
        for v in range(nm):
            c[i, ns + v, ns : ns + nm] = L[:, v]
    for j in range(nt):
        R = m.right_action[j]
        for v in range(nm):
            c[ns + v, o + j, ns : ns + nm] = R[:, v]
    unit = np.concatenate([s.unit, zeros(nm), t.unit])
    idem = None
    if s.idempotents is not None and t.idempotents is not None:
        idem = [np.concatenate([e, zeros(nm + nt)]) for e in s.idempotents]
        idem += [np.concatenate([zeros(ns + nm), e]) for e in t.idempotents]
    labels = [f"S:{x}" for x in s.labels] + [f"M:{v}" for v in range(nm)] + [f"T:{x}" for x in t.labels]
    return BasedAlgebra(c, unit, idem, labels, name=f"[[{s.name},M],[0,{t.name}]]", check=True)


@dataclass
class TrivialExtensionData:
    algebra: BasedAlgebra
    inclusion: AlgebraHom  # R -> R x M
    projection: AlgebraHom  # R x M -> R


def trivial_extension(r: BasedAlgebra, m: Bimodule) -> TrivialExtensionData:
    """``R x M`` with (r, m)(r', m') = (r r', r m' + m r')."""
    if m.left_algebra is not r and not m.left_algebra.table_equal(r):
        raise AlgebraError("bimodule must be over the base algebra on both sides")
    if m.right_algebra is not r and not m.right_algebra.table_equal(r):
        raise AlgebraError("bimodule must be over the base algebra on both sides")
    nr, nm = r.dim, m.dim
    n = nr + nm
    c = zeros(n, n, n)
    c[:nr, :nr, :nr] = r.c
    for i in range(nr):
        L = m.left_action[i]
        R = m.right_action[i]
        for v in range(nm):
            c[i, nr + v, nr:] = L[:, v]
            c[nr + v, i, nr:] = R[:, v]
    unit = np.concatenate([r.unit, zeros(nm)])
    idem = None if r.idempotents is None else [np.concatenate([e, zeros(nm)]) for e in r.idempotents]
    labels = list(r.labels) + [f"m{v}" for v in range(nm)]
    te = BasedAlgebra(c, unit, idem, labels, name=f"{r.name}xM", check=True)
    inc = zeros(nr, n)
    inc[:, :nr] = la.eye(nr)
    pr = zeros(n, nr)
    pr[:nr, :] = la.eye(nr)
    return TrivialExtensionData(te, AlgebraHom(r, te, inc), AlgebraHom(te, r, pr))


def path_algebra_monomial(
    num_vertices: int,
    arrows: Sequence[tuple],
    relations: Sequence[Sequence[int]] = (),
    nilpotency_cap: int = 32,
    vertex_labels: Sequence[str] | None = None,
    name: str | None = None,
) -> BasedAlgebra:
    """Path algebra of a quiver modulo monomial relations.

    Args:
        num_vertices: vertices are ``0 .. num_vertices-1``.
        arrows: ``(source, target)`` or ``(source, target, label)`` tuples.
        relations: paths given as arrow-index sequences in traversal order
            (first arrow first); every path containing one is zero.
        nilpotency_cap: a relation-free path this long on a quiver with
            oriented cycles means the algebra is infinite-dimensional.
    """
    arr = []
    for k, a in enumerate(arrows):
        s, t = int(a[0]), int(a[1])
        lab = a[2] if len(a) > 2 else f"a{k}"
        if not (0 <= s < num_vertices and 0 <= t < num_vertices):
            raise AlgebraError(f"arrow {k} has an endpoint outside the vertex range")
        arr.append((s, t, lab))
    rels = [tuple(int(x) for x in r) for r in relations]
    for r in rels:
        if len(r) < 2:
            raise AlgebraError("relations must be paths of length at least 2")
        for x, y in zip(r, r[1:]):
            if arr[x][1] != arr[y][0]:
                raise AlgebraError(f"relation {r} is not a path")

    def contains_relation(p):
        for r in rels:
            L = len(r)
            for i in range(len(p) - L + 1):
                if p[i : i + L] == r:
                    return True
        return False

    paths = []
    frontier = [(a,) for a in range(len(arr))]
    while frontier:
        nxt = []
        for p in frontier:
            if contains_relation(p):
                continue
            if len(p) >= nilpotency_cap:
                verts = [arr[p[0]][0]] + [arr[x][1] for x in p]
                first = {}
                for idx, v in enumerate(verts):
                    if v in first:
                        cyc = verts[first[v] : idx + 1]
                        raise AlgebraError(
                            f"infinite-dimensional: cycle through vertices {cyc} has no relation killing it"
                        )
                    first[v] = idx
            paths.append(p)
            end = arr[p[-1]][1]
            for b, (s, _, _) in enumerate(arr):
                if s == end:
                    nxt.append(p + (b,))
        frontier = nxt
    paths.sort(key=lambda p: (len(p), p))
    n = num_vertices + len(paths)
    index = {p: num_vertices + i for i, p in enumerate(paths)}

    def src(p):
        return arr[p[0]][0]

    def tgt(p):
        return arr[p[-1]][1]

    c = zeros(n, n, n)
    for v in range(num_vertices):
        c[v, v, v] = ONE
        for p, k in index.items():
            if tgt(p) == v:
                c[v, k, k] = ONE
            if src(p) == v:
                c[k, v, k] = ONE
    for p, kp in index.items():
        for q, kq in index.items():
            if src(p) == tgt(q):
                comp = q + p
                if comp in index:
                    c[kp, kq, index[comp]] = ONE
    unit = zeros(n)
    unit[:num_vertices] = ONE
    idem = []
    for v in range(num_vertices):
        e = zeros(n)
        e[v] = ONE
        idem.append(e)
    vl = list(vertex_labels) if vertex_labels else [f"e{v + 1}" for v in range(num_vertices)]
    labels = vl + ["".join(arr[x][2] for x in reversed(p)) for p in paths]
    return BasedAlgebra(c, unit, idem, labels, name=name, check=True)


def is_ring_epimorphism(f: AlgebraHom) -> bool:
    """Multiplication ``S (x)_R S -> S`` is bijective (dimension count)."""
    from .modules import Module, tensor_over_algebra

    s = f.target
    right = Module(f.source, "right", [s.right_matrix(f.matrix[i]) for i in range(f.source.dim)], dim=s.dim, check=False)
    left = Module(f.source, "left", [s.left_matrix(f.matrix[i]) for i in range(f.source.dim)], dim=s.dim, check=False)
    return tensor_over_algebra(right, left).dim == s.dim


# --------------------------------------------------------- isomorphism search
def _word_basis(a: BasedAlgebra, gens: list[np.ndarray], n_idem: int):
    """Words in the generators whose products form a basis of ``a``."""
    words, rows = [], []
    cur, piv = zeros(0, a.dim), []
    frontier = []
    for g in range(n_idem):
        w = (g,)
        val = gens[g]
        if not la.in_span(cur, piv, val):
            words.append(w)
            rows.append(val)
            cur, piv = la.span_sum(cur, val.reshape(1, -1))
        frontier.append((w, val))
    while frontier and cur.shape[0] < a.dim:
        nxt = []
        for w, val in frontier:
            for g in range(n_idem, len(gens)):
                nv = a.mul(val, gens[g])
                if la.is_zero(nv):
                    continue
                nw = w + (g,)
                if not la.in_span(cur, piv, nv):
                    words.append(nw)
                    rows.append(nv)
                    cur, piv = la.span_sum(cur, nv.reshape(1, -1))
                nxt.append((nw, nv))
        frontier = nxt
        if len(frontier) > 4 * a.dim * max(1, len(gens)):
            frontier = frontier[: 4 * a.dim * max(1, len(gens))]
    if cur.shape[0] < a.dim:
        return None
    return words, np.array(rows, dtype=object).reshape(len(rows), a.dim)


def _check_iso(a, b, m) -> bool:
    if la.rank(m) != a.dim:
        return False
    try:
        AlgebraHom(a, b, m, check=True)
    except AlgebraError:
        return False
    return True


def find_isomorphism(a: BasedAlgebra, b: BasedAlgebra, tries: int = 32, seed: int = 0) -> AlgebraHom | None:
    """Bounded search for a unital algebra isomorphism ``a -> b``.

    Returns a verified isomorphism or None ("not found"; never a proof of
    non-isomorphism).
    """
    if a.dim != b.dim:
        return None
    if a.dim == 0:
        return AlgebraHom(a, b, zeros(0, 0), check=False)
    if a.table_equal(b) and _check_iso(a, b, la.eye(a.dim)):
        return AlgebraHom(a, b, la.eye(a.dim), check=False)
    if not (a.split_basic and b.split_basic) or a.num_vertices != b.num_vertices:
        return None
    r = a.num_vertices
    ca, cb = a.cartan, b.cartan
    groups_a: dict[tuple[int, int], list[np.ndarray]] = {}
    for v, w, x in a.arrows:
        groups_a.setdefault((v, w), []).append(x)
    groups_b: dict[tuple[int, int], list[np.ndarray]] = {}
    for v, w, x in b.arrows:
        groups_b.setdefault((v, w), []).append(x)
    gens_a = list(a.idempotents)
    keys = sorted(groups_a)
    for key in keys:
        gens_a.extend(groups_a[key])
    wb = _word_basis(a, gens_a, r)
    if wb is None:
        return None
    words, rows_a = wb
    inv_rows = la.inverse(rows_a)
    if inv_rows is None:
        return None
    rng = random.Random(seed)
    rad2_b = b.radical_square[0]
    for perm in itertools.permutations(range(r)):
        if any(cb[perm[i], perm[j]] != ca[i, j] for i in range(r) for j in range(r)):
            continue
        if any(len(groups_b.get((perm[v], perm[w]), [])) != len(groups_a[(v, w)]) for (v, w) in keys):
            continue
        for attempt in range(tries + 1):
            images = [b.idempotents[perm[v]] for v in range(r)]
            for (v, w) in keys:
                tgt = groups_b[(perm[v], perm[w])]
                k = len(tgt)
                if attempt == 0:
                    g = la.eye(k)
                else:
                    while True:
                        g = la.mat([[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)])
                        if la.rank(g) == k:
                            break
                ev, ew = b.idempotents[perm[v]], b.idempotents[perm[w]]
                corner2 = [b.mul(b.mul(ew, y), ev) for y in rad2_b]
                for row in range(k):
                    img = zeros(b.dim)
                    for col in range(k):
                        img = img + g[row, col] * tgt[col]
                    if attempt > 0:
                        for y in corner2:
                            cf = rng.randint(-1, 1)
                            if cf:
                                img = img + cf * y
                    images.append(img)
            rows_b = []
            for w in words:
                val = images[w[0]]
                for g_idx in w[1:]:
                    val = b.mul(val, images[g_idx])
                rows_b.append(val)
            m = la.matmul(inv_rows, np.array(rows_b, dtype=object).reshape(len(rows_b), b.dim))
            if _check_iso(a, b, m):
                return AlgebraHom(a, b, m, check=False)
    return None


# ------------------------------------------------------------ Morita reduction
def basic_algebra(a: BasedAlgebra) -> SubalgebraData:
    """Morita-equivalent basic corner ``eAe`` (one primitive idempotent per class)."""
    if a.idempotents is None:
        from .modules import decompose_idempotents

        a.idempotents = decompose_idempotents(a)
    rad, piv = a.radical
    reps: list[int] = []
    for i, e in enumerate(a.idempotents):
        same = False
        for j in reps:
            f = a.idempotents[j]
            for x in a.vertex_corner(i, j)[0]:
                if not la.in_span(rad, piv, x):
                    same = True
                    break
            if same:
                break
        if not same:
            reps.append(i)
    e = zeros(a.dim)
    for i in reps:
        e = e + a.idempotents[i]
    data = corner(a, e)
    if not data.algebra.split_basic:
        raise AlgebraError("basic reduction did not produce a split basic algebra")
    return data


# ------------------------------------------------------------------ presets
def _ut2() -> BasedAlgebra:
    # basis e11, e12, e22 with e22 e12 = e12 = e12 e11
    c = zeros(3, 3, 3)
    c[0, 0, 0] = ONE
    c[2, 2, 2] = ONE
    c[2, 1, 1] = ONE
    c[1, 0, 1] = ONE
    unit = la.vec([1, 0, 1])
    return BasedAlgebra(c, unit, [la.vec([1, 0, 0]), la.vec([0, 0, 1])], ["e11", "e12", "e22"], name="ut2")


def _local2() -> BasedAlgebra:
    rel = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return path_algebra_monomial(1, [(0, 0, "x"), (0, 0, "y")], rel, vertex_labels=["1"], name="local2")


PRESETS = {
    "k": lambda: path_algebra_monomial(1, [], vertex_labels=["1"], name="k"),
    "A2": lambda: path_algebra_monomial(2, [(0, 1, "a")], name="A2"),
    "dual": lambda: path_algebra_monomial(1, [(0, 0, "x")], [(0, 0)], vertex_labels=["1"], name="dual"),
    "nak3": lambda: path_algebra_monomial(1, [(0, 0, "x")], [(0, 0, 0)], vertex_labels=["1"], name="nak3"),
    "ut2": _ut2,
    "kronecker-trunc": lambda: path_algebra_monomial(2, [(0, 1, "a"), (0, 1, "b")], name="kronecker-trunc"),
    # extras used by the verification suite
    "nak4": lambda: path_algebra_monomial(1, [(0, 0, "x")], [(0, 0, 0, 0)], vertex_labels=["1"], name="nak4"),
    "A3": lambda: path_algebra_monomial(3, [(0, 1, "a"), (1, 2, "b")], name="A3"),
    "A3-rad2": lambda: path_algebra_monomial(3, [(0, 1, "a"), (1, 2, "b")], [(0, 1)], name="A3-rad2"),
    "local2": _local2,
    "cyc2": lambda: path_algebra_monomial(2, [(0, 1, "a"), (1, 0, "b")], [(0, 1), (1, 0)], name="cyc2"),
    "nak32": lambda: path_algebra_monomial(2, [(0, 1, "a"), (1, 0, "b")], [(1, 0)], name="nak32"),
}

REQUIRED_PRESETS = ("k", "A2", "dual", "nak3", "ut2", "kronecker-trunc")


def preset(name: str) -> BasedAlgebra:
    if name not in PRESETS:
        raise AlgebraError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}")
    return PRESETS[name]()


# --------------------------------------------------------------- JSON format
def algebra_to_json(a: BasedAlgebra) -> dict:
    entries = []
    for i, j, k in zip(*np.nonzero(a.c != 0)):
        entries.append([int(i), int(j), int(k), la.format_rat(a.c[i, j, k])])
    out = {
        "dim": a.dim,
        "labels": list(a.labels),
        "mult": entries,
        "unit": [la.format_rat(x) for x in a.unit],
        "idempotents": [[la.format_rat(x) for x in e] for e in (a.idempotents or [])],
    }
    if a.name:
        out["name"] = a.name
    return out


def algebra_from_json(data: dict, check: bool = True) -> BasedAlgebra:
    try:
        n = int(data["dim"])
        c = zeros(n, n, n)
        for entry in data["mult"]:
            i, j, k, coeff = entry
            c[int(i), int(j), int(k)] = rat(coeff)
        unit = [rat(x) for x in data["unit"]]
        idem = data.get("idempotents")
        idem = [[rat(x) for x in e] for e in idem] if idem else None
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise AlgebraError(f"malformed algebra data: {exc}") from exc
    return BasedAlgebra(c, unit, idem, data.get("labels"), name=data.get("name"), check=check)


def load_algebra(spec: str) -> BasedAlgebra:
    """Preset name or path to an algebra JSON file."""
    if spec in PRESETS:
        return preset(spec)
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise AlgebraError(f"unknown preset or missing file: {spec}") from exc
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"{spec}: invalid JSON ({exc})") from exc
    return algebra_from_json(data)
