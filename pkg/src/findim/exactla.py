"""Exact linear algebra over the rationals.

Matrices are numpy arrays of dtype ``object`` whose entries are ``gmpy2.mpq``.
Row vectors are the default orientation for subspace bases: a subspace of
``Q^n`` is stored as a matrix whose rows form a basis in reduced row echelon
form, together with its pivot columns.  With that normal form the coordinates
of a member vector ``v`` are simply ``v[pivots]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


def rat(x) -> mpq:
    """Convert an int, str ("a/b"), Fraction or mpq to ``mpq``."""
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/")
            return mpq(int(num), int(den))
        return mpq(int(s))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return mpq(x)


def format_rat(x) -> str:
    """Serialize a rational as "num/den", omitting the denominator when 1."""
    q = rat(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> mpq:
    return rat(s)


def mat(rows: Iterable[Iterable]) -> np.ndarray:
    """Build an object matrix of rationals from nested iterables."""
    data = [[rat(x) for x in row] for row in rows]
    if not data:
        return np.empty((0, 0), dtype=object)
    out = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        if len(row) != out.shape[1]:
            raise ValueError("ragged matrix rows")
        out[i, :] = row
    return out


def vec(values: Iterable) -> np.ndarray:
    vals = [rat(x) for x in values]
    out = np.empty(len(vals), dtype=object)
    out[:] = vals
    return out


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(ZERO)
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def asmat(a) -> np.ndarray:
    """Coerce to a 2-d object matrix of mpq (copying)."""
    arr = np.asarray(a, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    out = np.empty(arr.shape, dtype=object)
    flat = out.reshape(-1)
    for i, x in enumerate(arr.reshape(-1)):
        flat[i] = rat(x)
    return out


def is_zero(a) -> bool:
    arr = np.asarray(a, dtype=object)
    if arr.size == 0:
        return True
    return not bool(np.any(arr != 0))


def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with deterministic first-nonzero pivoting.

    Returns the full-size reduced matrix (zero rows last) and the strictly
    increasing list of pivot columns.
    """
    a = asmat(m) if not (isinstance(m, np.ndarray) and m.dtype == object) else m.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col != 0)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        if piv != 1:
            a[r, c:] = a[r, c:] / piv
        others = np.nonzero(a[:, c] != 0)[0]
        others = others[others != r]
        if others.size:
            a[others, c:] = a[others, c:] - np.outer(a[others, c], a[r, c:])
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    arr = np.asarray(m, dtype=object)
    if arr.size == 0:
        return 0
    return len(rref(arr)[1])


def row_basis(m, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Canonical basis (nonzero rref rows) of the row space of ``m``."""
    arr = np.asarray(m, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, ncols or 0)
    if arr.shape[0] == 0:
        width = arr.shape[1] if ncols is None else ncols
        return zeros(0, width), []
    r, piv = rref(arr)
    return r[: len(piv)].copy(), piv


def kernel_basis(m) -> np.ndarray:
    """Rows spanning the right null space {v : m v = 0}."""
    a = np.asarray(m, dtype=object)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    rows, cols = a.shape
    if rows == 0:
        return eye(cols)
    r, piv = rref(a)
    free = [c for c in range(cols) if c not in set(piv)]
    out = zeros(len(free), cols)
    for k, f in enumerate(free):
        out[k, f] = ONE
        for i, p in enumerate(piv):
            out[k, p] = -r[i, f]
    return out


def left_kernel_basis(m) -> np.ndarray:
    """Rows spanning {v : v m = 0}."""
    return kernel_basis(np.asarray(m, dtype=object).T)


def solve_linear(a, b) -> np.ndarray | None:
    """Return one solution ``x`` of ``a x = b`` or None if inconsistent.

    ``b`` may be a vector or a matrix; the result has the matching shape.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vector_rhs = b.ndim == 1
    if vector_rhs:
        b = b.reshape(-1, 1)
    if a.ndim != 2 or a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: a has {a.shape[0] if a.ndim == 2 else '?'} rows, b has {b.shape[0]}")
    n = a.shape[1]
    aug = np.concatenate([a, b], axis=1) if a.size or b.size else zeros(a.shape[0], n + b.shape[1])
    if aug.shape[0] == 0:
        x = zeros(n, b.shape[1])
        return x.reshape(-1) if vector_rhs else x
    r, piv = rref(aug)
    if piv and piv[-1] >= n:
        return None
    x = zeros(n, b.shape[1])
    for i, p in enumerate(piv):
        x[p, :] = r[i, n:]
    return x.reshape(-1) if vector_rhs else x


def coords(basis_rref: np.ndarray, pivots: Sequence[int], v) -> np.ndarray:
    """Coordinates of ``v`` (rows allowed) in an rref basis; no membership check."""
    v = np.asarray(v, dtype=object)
    if v.ndim == 1:
        return v[list(pivots)].copy()
    return v[:, list(pivots)].copy()


def reduce_mod(basis_rref: np.ndarray, pivots: Sequence[int], v) -> np.ndarray:
    """Subtract the component of ``v`` (vector or rows) along an rref basis."""
    v = np.asarray(v, dtype=object)
    if len(pivots) == 0:
        return v.copy()
    c = coords(basis_rref, pivots, v)
    return v - c.dot(basis_rref)


def in_span(basis_rref: np.ndarray, pivots: Sequence[int], v) -> bool:
    return is_zero(reduce_mod(basis_rref, pivots, v))


def span_sum(*mats) -> tuple[np.ndarray, list[int]]:
    parts = [np.asarray(m, dtype=object) for m in mats if np.asarray(m).size]
    width = None
    for m in mats:
        arr = np.asarray(m, dtype=object)
        if arr.ndim == 2:
            width = arr.shape[1]
            break
    if not parts:
        return zeros(0, width or 0), []
    return row_basis(np.concatenate(parts, axis=0))


def intersect(u, v) -> tuple[np.ndarray, list[int]]:
    """Intersection of two row spaces."""
    u = np.asarray(u, dtype=object)
    v = np.asarray(v, dtype=object)
    n = u.shape[1] if u.ndim == 2 else v.shape[1]
    if u.shape[0] == 0 or v.shape[0] == 0:
        return zeros(0, n), []
    # x u = y v  <=>  [x, -y] [u; v] = 0
    stacked = np.concatenate([u, -v], axis=0)
    k = left_kernel_basis(stacked)
    if k.shape[0] == 0:
        return zeros(0, n), []
    return row_basis(k[:, : u.shape[0]].dot(u))


def complement_columns(pivots: Sequence[int], n: int) -> list[int]:
    ps = set(pivots)
    return [c for c in range(n) if c not in ps]


def quotient_projection(basis_rref: np.ndarray, pivots: Sequence[int], n: int) -> np.ndarray:
    """Matrix (n x q) sending a row vector to its coordinates in Q^n / span.

    The quotient basis is the image of the standard vectors at non-pivot columns.
    """
    free = complement_columns(pivots, n)
    out = zeros(n, len(free))
    for j, f in enumerate(free):
        out[f, j] = ONE
    for i, p in enumerate(pivots):
        out[p, :] = -basis_rref[i, free]
    return out


def extend_basis(sub_rref: np.ndarray, sub_pivots: Sequence[int], candidates) -> list[int]:
    """Greedy: indices of candidate rows independent modulo the subspace, in order."""
    cur, piv = sub_rref, list(sub_pivots)
    chosen = []
    cand = np.asarray(candidates, dtype=object)
    for i in range(cand.shape[0]):
        if not in_span(cur, piv, cand[i]):
            chosen.append(i)
            cur, piv = span_sum(cur, cand[i : i + 1])
    return chosen


def inverse(a) -> np.ndarray | None:
    a = np.asarray(a, dtype=object)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return zeros(0, 0)
    r, piv = rref(np.concatenate([a, eye(n)], axis=1))
    if len(piv) != n or piv[-1] >= n:
        return None
    return r[:, n:].copy()


def block_diag(*blocks) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def kron(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    out = zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            x = a[i, j]
            if x != 0:
                out[i * b.shape[0] : (i + 1) * b.shape[0], j * b.shape[1] : (j + 1) * b.shape[1]] = x * b
    return out


def matmul(a, b) -> np.ndarray:
    """Object-matrix product that tolerates empty dimensions."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.ndim == 2 and b.ndim == 2 and (a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0):
        return zeros(a.shape[0], b.shape[1])
    if a.ndim == 2 and b.ndim == 1 and a.shape[1] == 0:
        return zeros(a.shape[0])
    if a.ndim == 1 and b.ndim == 2 and b.shape[0] == 0:
        return zeros(b.shape[1])
    return a.dot(b)


def to_strings(a) -> list:
    arr = np.asarray(a, dtype=object)
    if arr.ndim == 1:
        return [format_rat(x) for x in arr]
    return [to_strings(row) for row in arr]
