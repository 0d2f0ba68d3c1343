"""Weakly Hadamard matrices and Laplacian diagonalizers built from the
parallel classes of the full point-line array.

A square {-1, 0, 1} matrix is weakly Hadamard when its columns can be
ordered so that non-consecutive columns are orthogonal; equivalently the
column non-orthogonality graph is a disjoint union of simple paths.  The
builder takes consecutive differences of line indicators across all
q + 1 slopes, giving q^2 integer eigenvectors of the Cayley graph that
assemble into such a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .errors import BadEntries, CertificationFailed, NotSquare
from .graphs import Graph, srg_certify
from .oa import SubarraySelection


@dataclass
class WeakHadamardResult:
    ok: bool
    ordering: Optional[tuple[int, ...]] = None
    obstruction: Optional[tuple] = None  # ("degree", v) or ("cycle", (...))


def _as_matrix(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquare(f"shape {a.shape} is not square")
    bad = np.argwhere((a < -1) | (a > 1))
    if bad.size:
        i, j = map(int, bad[0])
        raise BadEntries(f"entry {int(a[i, j])} at ({i}, {j}) outside -1..1")
    return a


def nonorthogonality_edges(matrix: np.ndarray) -> list[tuple[int, int]]:
    gram = matrix.T @ matrix
    n = gram.shape[0]
    return [(i, j) for i in range(n) for j in range(i + 1, n) if gram[i, j] != 0]


def is_weakly_hadamard(matrix) -> WeakHadamardResult:
    """Decide the path-union condition and produce an ordering or an
    obstruction (a column of non-orthogonality degree 3, or a cycle)."""
    a = _as_matrix(matrix)
    n = a.shape[1]
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in nonorthogonality_edges(a):
        nbrs[i].append(j)
        nbrs[j].append(i)
    for v in range(n):
        if len(nbrs[v]) > 2:
            return WeakHadamardResult(False, obstruction=("degree", v))

    seen = [False] * n
    ordering: list[int] = []
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        ends = [v for v in comp if len(nbrs[v]) <= 1]
        if not ends:
            return WeakHadamardResult(False, obstruction=("cycle", tuple(sorted(comp))))
        # walk the path from its least endpoint
        cur = min(ends)
        prev = -1
        walk = [cur]
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            walk.append(cur)
        assert len(walk) == len(comp), "component is not a single path"
        ordering.extend(walk)
    return WeakHadamardResult(True, ordering=tuple(ordering))


def check_ordering(matrix, ordering: Sequence[int]) -> bool:
    """True iff non-consecutive columns (under the ordering) are orthogonal."""
    a = _as_matrix(matrix)
    gram = a.T @ a
    n = a.shape[1]
    assert sorted(ordering) == list(range(n))
    pos = {c: i for i, c in enumerate(ordering)}
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i, j] != 0 and abs(pos[i] - pos[j]) != 1:
                return False
    return True


@dataclass
class WhdCertificate:
    """Weakly Hadamard P with L P = P D for the Laplacian of the graph.

    Column 0 is all ones; the rest are consecutive line-indicator
    differences, slope by slope (field slopes ascending, infinity last).
    adjacency_eigenvalue and diagonal record, per column, the exact
    eigenvalue under A and under L = k I - A.
    """
    matrix: np.ndarray
    ordering: tuple[int, ...]
    adjacency_eigenvalue: tuple[int, ...]
    diagonal: tuple[int, ...]
    used_slopes: tuple[int, ...]


def build_whd(x: Graph, sel: SubarraySelection) -> WhdCertificate:
    """Assemble and certify the diagonalizer for a Peisert-type graph.

    The certificate has four parts, each checked exactly: every column is
    an eigenvector of A (q - m on the m used slopes, -m on the rest);
    the matrix passes is_weakly_hadamard and its natural ordering is
    admissible; the columns have full rank; and L P = P D entrywise.
    """
    ctx = sel.ctx
    q = sel.q
    m = sel.m
    n = x.n
    assert n == q * q
    params = x.srg if x.srg is not None else srg_certify(x)
    k = params.k
    assert k == m * (q - 1)

    sub = ctx.subfield_elements()
    used = set(sel.slope_of_coset.values())

    def line(slope, delta):
        """Vertices of the slope line with intercept delta (slope None
        means the vertical lines x = delta)."""
        if slope is None:
            return [ctx.add(delta, ctx.mul(t, sel.alpha)) for t in sub]
        base = ctx.add(1, ctx.mul(slope, sel.alpha))
        return [ctx.add(ctx.mul(base, t), ctx.mul(delta, sel.alpha)) for t in sub]

    slopes: list = list(sub) + [None]
    cols = [np.ones(n, dtype=np.int64)]
    eigs = [k]
    for s in slopes:
        theta = q - m if s in used else -m
        ind = []
        for delta in sub:
            v = np.zeros(n, dtype=np.int64)
            v[line(s, delta)] = 1
            ind.append(v)
        cover = np.sum(ind, axis=0)
        assert (cover == 1).all(), "slope lines must partition the vertices"
        for i in range(q - 1):
            cols.append(ind[i] - ind[i + 1])
            eigs.append(theta)
    P = np.stack(cols, axis=1)
    assert P.shape == (n, n)

    A = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if (x.adj[u] >> v) & 1:
                A[u, v] = A[v, u] = 1

    eig = np.array(eigs, dtype=np.int64)
    if not np.array_equal(A @ P, P * eig[None, :]):
        raise CertificationFailed("a column fails its adjacency eigenvalue")

    wh = is_weakly_hadamard(P)
    if not wh.ok:
        raise CertificationFailed(f"matrix is not weakly Hadamard: {wh.obstruction}")
    natural = tuple(range(n))
    if not check_ordering(P, natural):
        raise CertificationFailed("natural column ordering is not admissible")

    if not linalg.certified_full_column_rank(P):
        raise CertificationFailed("columns are rank deficient")

    diag = tuple(int(k - e) for e in eigs)
    L = k * np.eye(n, dtype=np.int64) - A
    D = np.diag(np.array(diag, dtype=np.int64))
    if not np.array_equal(L @ P, P @ D):
        raise CertificationFailed("L P != P D")

    return WhdCertificate(P, natural, tuple(int(e) for e in eigs), diag,
                          tuple(sorted(used)))


def whd_to_csv(cert: WhdCertificate) -> str:
    """First line the Laplacian diagonal, then the matrix rows."""
    lines = [",".join(str(d) for d in cert.diagonal)]
    for row in cert.matrix:
        lines.append(",".join(str(int(e)) for e in row))
    return "\n".join(lines) + "\n"


def whd_from_csv(text: str) -> tuple[np.ndarray, tuple[int, ...]]:
    rows = [line.split(",") for line in text.strip().splitlines()]
    diag = tuple(int(e) for e in rows[0])
    mat = np.array([[int(e) for e in row] for row in rows[1:]], dtype=np.int64)
    return mat, diag
