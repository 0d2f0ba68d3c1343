"""Cayley construction, SRG certification, clique search, colorings.

Clique-search results are checked against a brute-force subset oracle on
every graph small enough to afford one.
"""

import random
from itertools import combinations

import pytest

from peisert import (
    Graph,
    build_cayley,
    connection_set,
    create,
    enumerate_max_cliques,
    enumerate_maximal_cliques,
    family_cosets,
    from_dimacs,
    srg_certify,
    to_dimacs,
    verify_coloring,
)
from peisert.errors import (
    IndexOutOfRange,
    LengthMismatch,
    MissingBaseCoset,
    NotHoffmanTight,
    NotRegular,
    NotStronglyRegular,
    SearchTimeout,
    TooManyCosets,
)
from peisert.graphs import clique_regularity, family_cosets as _families, from_edges


# ----- oracles ---------------------------------------------------------------

def brute_max_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximum cliques by exhaustive subset search, n <= ~30."""
    best: list[tuple[int, ...]] = [()]
    size = 0
    # grow level by level; level k holds all k-cliques
    level = [((v,), g.adj[v]) for v in range(g.n)]
    while level:
        best = [c for c, _ in level]
        size += 1
        nxt = []
        for clique, common in level:
            u = clique[-1]
            cand = common
            while cand:
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                if v > u:
                    nxt.append((clique + (v,), common & g.adj[v]))
        level = nxt
    return sorted(best)


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every maximal clique of a small graph by scanning all subsets."""
    assert g.n <= 16
    out = []
    verts = range(g.n)
    for size in range(1, g.n + 1):
        for sub in combinations(verts, size):
            if all(g.is_adjacent(u, v) for u, v in combinations(sub, 2)):
                ext = [w for w in verts if w not in sub
                       and all(g.is_adjacent(w, u) for u in sub)]
                if not ext:
                    out.append(sub)
    return sorted(out)


def srg_oracle(g: Graph):
    """(n, k, lam, mu) by direct common-neighbor counting, or None."""
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        return None
    k = degs.pop()
    lams, mus = set(), set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = bin(g.adj[u] & g.adj[v]).count("1")
            (lams if g.is_adjacent(u, v) else mus).add(c)
    if len(lams) > 1 or len(mus) > 1:
        return None
    return (g.n, k, lams.pop() if lams else 0, mus.pop() if mus else None)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


# ----- construction ----------------------------------------------------------

def test_connection_set_is_union_of_cosets():
    ctx = create(3, 2)
    assert connection_set(ctx, (0, 2)) == [1, 2, 5, 7]
    assert connection_set(ctx, (0, 2)) == sorted(
        {ctx.mul(t, t) for t in range(1, 9)})  # paley = nonzero squares
    assert connection_set(ctx, range(4)) == list(range(1, 9))


def test_build_cayley_symmetry_and_regularity():
    ctx = create(5, 2)
    g = build_cayley(ctx, (0, 1, 3))
    q = 5
    assert g.n == 25
    assert all(g.degree(v) == 3 * (q - 1) for v in range(g.n))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.is_adjacent(u, v) == g.is_adjacent(v, u)
            assert g.is_adjacent(u, v) == (
                ctx.coset_index(ctx.sub(u, v)) in (0, 1, 3))


def test_build_cayley_input_checks():
    ctx = create(3, 2)
    with pytest.raises(MissingBaseCoset):
        build_cayley(ctx, (1, 2))
    with pytest.raises(IndexOutOfRange):
        build_cayley(ctx, (0, 4))
    with pytest.raises(IndexOutOfRange):
        build_cayley(ctx, (0, -1))
    with pytest.raises(TooManyCosets):
        build_cayley(ctx, (0, 1, 2, 3))


def test_family_cosets_frozen():
    assert _families(create(3, 2), "paley") == frozenset({0, 2})
    assert _families(create(3, 2), "peisert") == frozenset({0, 1})
    ctx81 = create(3, 4)
    assert _families(ctx81, "paley") == frozenset({0, 2, 4, 6, 8})
    assert _families(ctx81, "gp", 5) == frozenset({0, 5})
    assert _families(ctx81, "gpstar", 10) == frozenset({0, 1, 2, 3, 4})
    assert _families(create(7, 2), "peisert") == frozenset({0, 1, 4, 5})


def test_family_element_level_oracles():
    # peisert: S = {g^j : j = 0, 1 mod 4}
    ctx = create(7, 2)
    idx = family_cosets(ctx, "peisert")
    want = set()
    for j in range(0, ctx.order - 1, 4):
        want.add(ctx.gen_pow(j))
        want.add(ctx.gen_pow(j + 1))
    assert set(connection_set(ctx, idx)) == want
    # gp(d): S = {x != 0 : x^((q^2-1)/d) = 1}, the d-th power residues
    ctx81 = create(3, 4)
    idx = family_cosets(ctx81, "gp", 5)
    e = (ctx81.order - 1) // 5
    assert set(connection_set(ctx81, idx)) == {
        t for t in range(1, 81) if ctx81.pow(t, e) == 1}


def test_family_validation():
    from peisert.errors import BadDivisor, WrongCharacteristicResidue
    with pytest.raises(WrongCharacteristicResidue):
        family_cosets(create(5, 2), "peisert")  # needs q = 3 mod 4
    with pytest.raises(BadDivisor):
        family_cosets(create(3, 2), "gp", 3)  # 3 does not divide q + 1
    with pytest.raises(BadDivisor):
        family_cosets(create(3, 2), "gpstar", 1)
    with pytest.raises(BadDivisor):
        family_cosets(create(3, 4), "gpstar", 5)  # gpstar needs even d
    with pytest.raises(ValueError):
        family_cosets(create(3, 2), "nosuch")


# ----- srg certification ------------------------------------------------------

@pytest.mark.parametrize("q,idx", [
    (3, (0, 2)), (3, (0,)), (3, (0, 1, 2)), (5, (0, 1)), (5, (0, 2, 4)),
])
def test_srg_matches_counting_oracle(q, idx):
    ctx = create(q, 2)
    g = build_cayley(ctx, idx)
    params = srg_certify(g)
    m = len(idx)
    assert srg_oracle(g) == (params.n, params.k, params.lam, params.mu)
    assert (params.n, params.k) == (q * q, m * (q - 1))
    assert params.lam == (m - 1) * (m - 2) + q - 2
    if m > 1:
        assert params.mu == m * (m - 1)
    else:
        assert params.mu == 0 and params.disconnected


@pytest.mark.parametrize("q,idx", [(3, (0, 2)), (5, (0, 1, 2)), (7, (0, 3))])
def test_srg_spectrum(q, idx):
    g = build_cayley(create(q, 2), idx)
    params = srg_certify(g)
    m = len(idx)
    k = m * (q - 1)
    assert params.eigenvalues == ((k, 1), (q - m, k), (-m, q * q - 1 - k))
    assert sum(mult for _, mult in params.eigenvalues) == q * q
    assert sum(v * mult for v, mult in params.eigenvalues) == 0  # trace


def test_srg_rejects_irregular_and_non_srg():
    with pytest.raises(NotRegular):
        srg_certify(from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    hexagon = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(NotStronglyRegular):
        srg_certify(hexagon)


def test_srg_complete_graph_flag():
    k4 = from_edges(4, list(combinations(range(4), 2)))
    params = srg_certify(k4)
    assert params.complete and params.mu is None


def test_hoffman_bound_and_clique_regularity():
    g = build_cayley(create(3, 2), (0, 2))
    params = srg_certify(g)
    assert params.hoffman_bound() == 3
    assert clique_regularity(g, (0, 1, 2))
    pg = petersen()
    srg_certify(pg)  # (10, 3, 0, 1)
    assert pg.srg.least_eigenvalue == -2
    with pytest.raises(NotHoffmanTight):
        clique_regularity(pg, (0, 1))  # bound 5/2 is not an integer


# ----- clique search ----------------------------------------------------------

@pytest.mark.parametrize("idx", [(0,), (0, 1), (0, 2), (0, 3),
                                 (0, 1, 2), (0, 1, 3), (0, 2, 3)])
def test_max_cliques_q3_all_sets(idx):
    g = build_cayley(create(3, 2), idx)
    srg_certify(g)
    assert enumerate_max_cliques(g) == brute_max_cliques(g)


def test_max_cliques_p9_frozen():
    g = build_cayley(create(3, 2), (0, 2))
    srg_certify(g)
    assert enumerate_max_cliques(g) == [
        (0, 1, 2), (0, 5, 7), (1, 3, 8), (2, 4, 6), (3, 4, 5), (6, 7, 8)]


def test_max_cliques_q5_sampled_against_oracle():
    rng = random.Random(55)
    ctx = create(5, 2)
    for _ in range(4):
        rest = rng.sample(range(1, 6), rng.randint(1, 2))
        g = build_cayley(ctx, tuple([0] + rest))
        srg_certify(g)
        assert enumerate_max_cliques(g) == brute_max_cliques(g)


def test_max_cliques_through_vertex():
    g = build_cayley(create(3, 2), (0, 2))
    srg_certify(g)
    through = enumerate_max_cliques(g, through_vertex=4)
    assert through == [c for c in brute_max_cliques(g) if 4 in c]


def test_max_cliques_with_target_size():
    g = build_cayley(create(3, 2), (0, 2))
    srg_certify(g)
    assert enumerate_max_cliques(g, target=3) == brute_max_cliques(g)


def test_maximal_cliques_random_graphs():
    rng = random.Random(99)
    for trial in range(12):
        n = rng.randint(4, 11)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        g = from_edges(n, edges)
        assert sorted(enumerate_maximal_cliques(g)) == brute_maximal_cliques(g)


def test_maximal_cliques_through_vertex_petersen():
    pg = petersen()
    got = enumerate_maximal_cliques(pg, through_vertex=0)
    assert sorted(got) == [c for c in brute_maximal_cliques(pg) if 0 in c]


def test_search_budget_exhaustion():
    g = build_cayley(create(3, 4), (0, 1, 2, 3, 4))
    srg_certify(g)
    with pytest.raises(SearchTimeout):
        enumerate_max_cliques(g, budget=0)
    with pytest.raises(SearchTimeout):
        enumerate_maximal_cliques(g, budget=0)


# ----- colorings and serialization --------------------------------------------

def test_verify_coloring():
    g = build_cayley(create(3, 2), (0, 2))
    proper = [0, 0, 0, 1, 1, 1, 2, 2, 2]
    # cosets of the line {0,3,6} are color classes only if independent;
    # check against the graph instead of assuming
    witness = verify_coloring(g, proper)
    if witness is not None:
        u, v = witness
        assert g.is_adjacent(u, v) and proper[u] == proper[v]
    bad = [0] * 9
    u, v = verify_coloring(g, bad)
    assert g.is_adjacent(u, v)
    with pytest.raises(LengthMismatch):
        verify_coloring(g, [0, 1])


def test_dimacs_round_trip():
    g = build_cayley(create(5, 2), (0, 2))
    h = from_dimacs(to_dimacs(g))
    assert h.n == g.n and h.adj == g.adj
    assert to_dimacs(h) == to_dimacs(g)


def test_complement_involution():
    g = build_cayley(create(3, 2), (0, 1))
    gc = g.complement()
    assert gc.complement().adj == g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.is_adjacent(u, v) != gc.is_adjacent(u, v)
