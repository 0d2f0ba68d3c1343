"""Graphs on integer bitsets, Cayley builders, and exact SRG certificates.

Adjacency rows are Python ints used as bitsets, which keeps the common
neighbor counts, clique search and complement operations exact and fast
at the few-hundred-vertex scale this package targets.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    BadDivisor,
    IndexOutOfRange,
    LengthMismatch,
    MissingBaseCoset,
    NotHoffmanTight,
    NotRegular,
    NotStronglyRegular,
    SearchTimeout,
    TooManyCosets,
    VerificationFailed,
    WrongCharacteristicResidue,
)
from .field import FieldCtx

DEFAULT_BUDGET = 300.0


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected graph; adj[v] is the neighbor bitset of vertex v."""

    __slots__ = ("n", "adj", "labels", "srg", "field", "cosets", "line_cliques")

    def __init__(self, n: int, adj: list[int], labels: Optional[Sequence] = None):
        assert len(adj) == n
        self.n = n
        self.adj = adj
        self.labels = list(labels) if labels is not None else list(range(n))
        self.srg: Optional[SrgParams] = None
        self.field: Optional[FieldCtx] = None
        self.cosets: Optional[frozenset[int]] = None
        self.line_cliques = None  # filled by orthogonal-array block graphs

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_adjacent(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        adj = [(~self.adj[v]) & full & ~(1 << v) for v in range(self.n)]
        return Graph(self.n, adj, self.labels)

    def check_symmetric(self):
        for u in range(self.n):
            assert (self.adj[u] >> u) & 1 == 0, f"loop at {u}"
            for v in _bits(self.adj[u]):
                assert (self.adj[v] >> u) & 1, f"asymmetric pair ({u}, {v})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        assert u != v
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# ----- strongly regular certification -----------------------------------

@dataclass(frozen=True)
class SrgParams:
    """Certified parameter set (n, k, lambda, mu) with exact spectrum.

    eigenvalues holds (value, multiplicity) pairs: the valency, then the
    positive and negative restricted eigenvalues.  For a complete graph
    mu is None and the restricted spectrum is the single value -1.
    """
    n: int
    k: int
    lam: Optional[int]
    mu: Optional[int]
    eigenvalues: tuple[tuple[int, int], ...]
    complete: bool = False
    disconnected: bool = False

    @property
    def least_eigenvalue(self) -> int:
        return self.eigenvalues[-1][0]

    def hoffman_bound(self) -> Fraction:
        return 1 + Fraction(self.k, -self.least_eigenvalue)


def srg_certify(g: Graph) -> SrgParams:
    """Verify A^2 = kI + lambda*A + mu*(J - I - A) pair by pair.

    Raises NotRegular / NotStronglyRegular with a witness.  Complete
    graphs come back flagged with mu = None; mu = 0 flags a disconnected
    union of cliques.  The result is cached on the graph.
    """
    n = g.n
    assert n >= 2, "need at least one vertex pair"
    k = g.degree(0)
    for v in range(1, n):
        if g.degree(v) != k:
            raise NotRegular(f"deg({v}) = {g.degree(v)} but deg(0) = {k}")

    if k == n - 1:
        params = SrgParams(n, k, n - 2, None, ((k, 1), (-1, n - 1)), complete=True)
        g.srg = params
        return params

    lam = mu = None
    for u in range(n):
        au = g.adj[u]
        for v in range(u + 1, n):
            common = (au & g.adj[v]).bit_count()
            if (au >> v) & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    raise NotStronglyRegular(
                        f"adjacent pair ({u}, {v}) has {common} common neighbors, "
                        f"expected {lam}")
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise NotStronglyRegular(
                        f"non-adjacent pair ({u}, {v}) has {common} common neighbors, "
                        f"expected {mu}")
    if lam is None:
        lam, mu = 0, 0 if mu is None else mu  # edgeless
    assert mu is not None
    assert k * (k - lam - 1) == (n - k - 1) * mu, "SRG feasibility identity"

    disc = math.isqrt((lam - mu) ** 2 + 4 * (k - mu))
    if disc * disc != (lam - mu) ** 2 + 4 * (k - mu):
        raise NotStronglyRegular(
            f"irrational restricted eigenvalues for (n,k,lam,mu)=({n},{k},{lam},{mu})")
    theta = (lam - mu + disc) // 2
    tau = (lam - mu - disc) // 2
    assert theta - tau == disc and (lam - mu + disc) % 2 == 0

    num = 2 * k + (n - 1) * (lam - mu)
    assert num % disc == 0 if disc else num == 0
    shift = num // disc if disc else 0
    assert (n - 1 - shift) % 2 == 0 and (n - 1 + shift) % 2 == 0
    f = (n - 1 - shift) // 2
    fg = (n - 1 + shift) // 2
    assert f >= 0 and fg >= 0 and f + fg == n - 1
    assert k + f * theta + fg * tau == 0, "trace check"

    params = SrgParams(n, k, lam, mu, ((k, 1), (theta, f), (tau, fg)),
                       disconnected=(mu == 0))
    g.srg = params
    return params


# ----- Cayley construction ----------------------------------------------

def connection_set(ctx: FieldCtx, coset_indices: Iterable[int]) -> list[int]:
    """Labels of the union of the selected F_q^* cosets, ascending."""
    idx = set(coset_indices)
    return [x for x in range(1, ctx.order)
            if ctx.dlog(x) % (ctx.subfield_order + 1) in idx]


def build_cayley(ctx: FieldCtx, coset_indices: Iterable[int]) -> Graph:
    """Cayley graph on GF(q^2)+ whose connection set is a union of
    F_q^* cosets including F_q^* itself (index 0).

    Vertex i is the field element with label i.  Symmetry is automatic
    because -1 lies in F_q^*, but it is asserted anyway.
    """
    q = ctx.subfield_order
    idx = sorted(set(int(i) for i in coset_indices))
    for i in idx:
        if not 0 <= i <= q:
            raise IndexOutOfRange(f"coset index {i} outside [0, {q}]")
    if 0 not in idx:
        raise MissingBaseCoset("connection set must include coset 0 (F_q^*)")
    if len(idx) > q:
        raise TooManyCosets(f"m = {len(idx)} exceeds q = {q}")

    s_labels = connection_set(ctx, idx)
    n = ctx.order
    adj = [0] * n
    for u in range(n):
        row = 0
        for s in s_labels:
            row |= 1 << ctx.add(u, s)
        adj[u] = row
    g = Graph(n, adj)
    g.field = ctx
    g.cosets = frozenset(idx)
    g.check_symmetric()
    return g


def family_cosets(ctx: FieldCtx, name: str, d: Optional[int] = None) -> frozenset[int]:
    """Coset indices of a named connection-set family, verified element
    by element against the defining multiplicative condition.

    paley    squares of GF(q^2)
    peisert  exponents 0, 1 mod 4 (needs q = 3 mod 4)
    gp       d-th powers, d | q + 1, d > 1
    gpstar   exponents with residue mod d below d/2, d | q + 1, d even
    """
    q = ctx.subfield_order
    n = ctx.order - 1

    if name == "paley":
        indices = frozenset(range(0, q + 1, 2))
        member = lambda e: e % 2 == 0
    elif name == "peisert":
        if q % 4 != 3:
            raise WrongCharacteristicResidue(f"peisert family needs q = 3 mod 4, got q = {q}")
        indices = frozenset(i for i in range(q + 1) if i % 4 in (0, 1))
        member = lambda e: e % 4 in (0, 1)
    elif name == "gp":
        if d is None or d <= 1 or (q + 1) % d != 0:
            raise BadDivisor(f"gp needs d > 1 dividing q + 1 = {q + 1}, got {d}")
        indices = frozenset(range(0, q + 1, d))
        member = lambda e: e % d == 0
    elif name == "gpstar":
        if d is None or d % 2 != 0 or (q + 1) % d != 0:
            raise BadDivisor(f"gpstar needs even d dividing q + 1 = {q + 1}, got {d}")
        half = d // 2
        indices = frozenset(i for i in range(q + 1) if i % d < half)
        member = lambda e: e % d < half
    else:
        raise ValueError(f"unknown family {name!r}")

    defining = {x for x in range(1, ctx.order) if member(ctx.dlog(x))}
    from_cosets = set(connection_set(ctx, indices))
    if defining != from_cosets:
        raise VerificationFailed(
            f"family {name} indices {sorted(indices)} disagree with the defining set")
    return indices


# ----- colorings and clique regularity -----------------------------------

def verify_coloring(g: Graph, colors: Sequence[int]) -> Optional[tuple[int, int]]:
    """None if proper, else one violating edge (u, v)."""
    if len(colors) != g.n:
        raise LengthMismatch(f"coloring length {len(colors)} != {g.n} vertices")
    for u in range(g.n):
        for v in _bits(g.adj[u] >> (u + 1)):
            v += u + 1
            if colors[u] == colors[v]:
                return (u, v)
    return None


def clique_regularity(g: Graph, clique: Sequence[int]) -> bool:
    """Check every outside vertex sees exactly mu/m clique vertices.

    Only defined for Hoffman-tight cliques of a certified SRG with
    integral least eigenvalue -m; anything else raises NotHoffmanTight.
    """
    params = g.srg if g.srg is not None else srg_certify(g)
    if params.complete or params.mu is None:
        raise NotHoffmanTight("complete graph has no Hoffman-tight cliques")
    m = -params.least_eigenvalue
    bound = params.hoffman_bound()
    if Fraction(len(clique)) != bound:
        raise NotHoffmanTight(f"|C| = {len(clique)} but Hoffman bound is {bound}")
    expected = Fraction(params.mu, m)
    assert expected.denominator == 1, "mu/m must be integral at a tight clique"
    expected = int(expected)
    cmask = _mask_of(clique)
    for v in range(g.n):
        if (cmask >> v) & 1:
            continue
        if (g.adj[v] & cmask).bit_count() != expected:
            return False
    return True


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    mask = _mask_of(vertices)
    return all((g.adj[v] & mask).bit_count() == len(vertices) - 1 for v in vertices)


def is_maximal_clique(g: Graph, vertices: Sequence[int]) -> bool:
    if not is_clique(g, vertices):
        return False
    mask = _mask_of(vertices)
    common = (1 << g.n) - 1
    for v in vertices:
        common &= g.adj[v]
    return common & ~mask == 0


# ----- clique search ------------------------------------------------------

class _Deadline:
    __slots__ = ("t",)

    def __init__(self, budget: Optional[float]):
        if budget is not None and budget <= 0:
            raise SearchTimeout("zero budget")
        self.t = None if budget is None else time.monotonic() + budget

    def check(self):
        if self.t is not None and time.monotonic() > self.t:
            raise SearchTimeout("clique search exceeded its budget")


def _color_sort(P: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; returns vertices ordered by
    color class with the per-position clique upper bound."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = P
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_size(adj, start_size, P, deadline, cap=None) -> int:
    best = start_size

    def expand(size, cand):
        nonlocal best
        deadline.check()
        order, bounds = _color_sort(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            nxt = cand & adj[v]
            if nxt:
                expand(size + 1, nxt)
            else:
                if size + 1 > best:
                    best = size + 1
            if cap is not None and best >= cap:
                return
            cand &= ~(1 << v)

    expand(start_size, P)
    return best


def _collect_size_t(adj, R, P, target, out, deadline):
    deadline.check()
    if len(R) == target:
        out.append(tuple(sorted(R)))
        return
    need = target - len(R)
    if P.bit_count() < need:
        return
    order, bounds = _color_sort(P, adj)
    for i in range(len(order) - 1, -1, -1):
        if len(R) + bounds[i] < target:
            return
        v = order[i]
        R.append(v)
        _collect_size_t(adj, R, P & adj[v], target, out, deadline)
        R.pop()
        P &= ~(1 << v)


def enumerate_max_cliques(g: Graph,
                          target: Optional[int] = None,
                          through_vertex: Optional[int] = None,
                          budget: Optional[float] = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All cliques of maximum size, or of size exactly `target`.

    Deterministic: the result is lexicographically sorted.  When the graph
    carries an SRG certificate the Hoffman bound caps the search.  Raises
    SearchTimeout if the budget runs out; no partial output is returned.
    """
    deadline = _Deadline(budget)
    if g.n == 0:
        return []
    full = (1 << g.n) - 1

    cap = None
    if g.srg is not None and not g.srg.complete and g.srg.least_eigenvalue < 0:
        b = g.srg.hoffman_bound()
        cap = int(b) if b.denominator == 1 else int(b.numerator // b.denominator)

    if through_vertex is not None:
        seed = [through_vertex]
        P0 = g.adj[through_vertex]
    else:
        seed = []
        P0 = full

    if target is None:
        target = _max_clique_size(g.adj, len(seed), P0, deadline, cap)
    if target > g.n or target <= 0:
        return []

    out: list[tuple[int, ...]] = []
    if len(seed) == target:
        out.append(tuple(seed))
    else:
        _collect_size_t(g.adj, list(seed), P0, target, out, deadline)
    out.sort()
    assert len(set(out)) == len(out)
    return out


def enumerate_maximal_cliques(g: Graph,
                              through_vertex: Optional[int] = None,
                              budget: Optional[float] = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All maximal cliques (optionally through one vertex), pivoted
    Bron-Kerbosch, lexicographically sorted."""
    deadline = _Deadline(budget)
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def bk(R: list[int], P: int, X: int):
        deadline.check()
        if P == 0 and X == 0:
            out.append(tuple(sorted(R)))
            return
        # pivot with the most candidates, lowest index breaking ties
        pivot, best = -1, -1
        both = P | X
        while both:
            u = (both & -both).bit_length() - 1
            both &= both - 1
            c = (P & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        ext = P & ~adj[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            R.append(v)
            bk(R, P & adj[v], X & adj[v])
            R.pop()
            P &= ~(1 << v)
            X |= 1 << v

    if through_vertex is None:
        bk([], (1 << g.n) - 1, 0)
    else:
        bk([through_vertex], g.adj[through_vertex], 0)
    out.sort()
    return out


# ----- DIMACS -------------------------------------------------------------

def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u in range(g.n):
        for v in _bits(g.adj[u] >> (u + 1)):
            lines.append(f"e {u + 1} {v + u + 2}")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            assert parts[1] == "edge"
            n = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    assert n is not None, "missing problem line"
    return from_edges(n, edges)
