"""Independent oracles.  Nothing here imports findim.

* Nakayama combinatorics: for a Nakayama algebra with successor map sigma
  (arrow v -> sigma(v)) and Kupisch lengths c_v = dim P_v, every
  indecomposable is M(v, t) = P_v / rad^t P_v, and its syzygy is
  rad^t P_v = M(sigma^t(v), c_v - t).
* sympy rank / nullity for exact linear algebra.
"""

import math

import sympy

# vertex -> successor (None at a sink) and Kupisch lengths, read off the quivers by hand
KUPISCH = {
    "k": ([None], [1]),
    "A2": ([1, None], [2, 1]),
    "ut2": ([1, None], [2, 1]),
    "dual": ([0], [2]),
    "nak3": ([0], [3]),
    "nak4": ([0], [4]),
    "A3": ([1, 2, None], [3, 2, 1]),
    "A3-rad2": ([1, 2, None], [2, 2, 1]),
    "cyc2": ([1, 0], [2, 2]),
    "nak32": ([1, 0], [3, 2]),
}


def _step(sigma, v, t):
    for _ in range(t):
        v = sigma[v]
    return v


def nakayama_pd(name: str, v: int, t: int) -> float:
    """pd of P_v / rad^t P_v (0-based vertex, 1 <= t <= c_v)."""
    sigma, c = KUPISCH[name]
    seen = set()
    depth = 0
    while True:
        if t == c[v]:
            return depth
        if (v, t) in seen:
            return math.inf
        seen.add((v, t))
        v, t = _step(sigma, v, t), c[v] - t
        depth += 1


def nakayama_table(name: str) -> dict:
    """pd of every indecomposable, plus fd and gd."""
    _, c = KUPISCH[name]
    pds = {f"P{v + 1}/rad^{t}": nakayama_pd(name, v, t) for v in range(len(c)) for t in range(1, c[v] + 1)}
    finite = [p for p in pds.values() if p != math.inf]
    simples = [nakayama_pd(name, v, 1) for v in range(len(c))]
    return {"pd": pds, "fd": max(finite), "gd": max(simples)}


def sympy_rank(rows) -> int:
    return sympy.Matrix(rows).rank() if rows and rows[0] else 0


def sympy_nullity(rows) -> int:
    m = sympy.Matrix(rows)
    return m.cols - m.rank()
