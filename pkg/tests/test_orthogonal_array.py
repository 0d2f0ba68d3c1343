"""Point-line arrays, subarrays, block graphs, and the clique bound."""

from itertools import combinations, product

import pytest

from peisert import (
    INFINITY_SLOPE,
    block_graph,
    build_cayley,
    build_pointline_oa,
    canonical_correspondence,
    create,
    default_alpha,
    enumerate_max_cliques,
    family_cosets,
    noncanonical_clique_bound,
    oa_from_csv,
    oa_to_csv,
    srg_certify,
    subarray_for_connection_set,
    unused_slope_coloring,
    verify_coloring,
    verify_isomorphism,
)
from peisert.errors import (
    AlphaInSubfield,
    NotIsomorphicUnderF,
    OAVerificationFailed,
    SearchTimeout,
)
from peisert.oa import noncanonical_zero_rows, translate_to_zero


def strength2_oracle(arr) -> bool:
    """Every row pair must show every ordered symbol pair exactly once."""
    for r1, r2 in combinations(range(arr.num_rows), 2):
        seen = sorted(zip(arr.entries[r1], arr.entries[r2]))
        if seen != sorted(product(range(arr.n), repeat=2)):
            return False
    return True


def test_q3_array_frozen():
    arr = build_pointline_oa(create(3, 2), 3)
    assert arr.n == 3
    assert arr.row_labels == [0, 1, 2, INFINITY_SLOPE]
    assert arr.column_labels == [(x, y) for x in range(3) for y in range(3)]
    assert arr.entries == [
        [0, 1, 2, 0, 1, 2, 0, 1, 2],
        [0, 1, 2, 2, 0, 1, 1, 2, 0],
        [0, 1, 2, 1, 2, 0, 2, 0, 1],
        [0, 0, 0, 1, 1, 1, 2, 2, 2],
    ]
    # slope-1 line through (2,1): symbol of y - x = 1 - 2
    assert arr.entries[1][arr.column_labels.index((2, 1))] == 2


@pytest.mark.parametrize("q", [3, 5, 7])
def test_full_array_strength_two(q):
    ctx = create(q, 2)
    arr = build_pointline_oa(ctx, default_alpha(ctx, set()))
    assert arr.num_rows == q + 1
    arr.verify()
    assert strength2_oracle(arr)


def test_alpha_must_leave_the_subfield():
    ctx = create(3, 2)
    with pytest.raises(AlphaInSubfield):
        build_pointline_oa(ctx, 1)
    with pytest.raises(AlphaInSubfield):
        build_pointline_oa(ctx, 0)


def test_default_alpha_rule():
    ctx = create(3, 2)
    # free cosets of {0,2} are {1,3}; least element of coset 1
    assert default_alpha(ctx, {0, 2}) == min(ctx.coset_elements(1)) == 3
    assert default_alpha(ctx, set()) == 3  # coset 0 never supplies alpha
    assert default_alpha(ctx, {0, 1}) == min(ctx.coset_elements(2))


def test_verify_catches_corruption():
    arr = build_pointline_oa(create(3, 2), 3)
    arr.entries[0][0], arr.entries[0][1] = arr.entries[0][1], arr.entries[0][0]
    with pytest.raises(OAVerificationFailed):
        arr.verify()
    assert not strength2_oracle(arr)


def test_subarray_selection_rows():
    ctx = create(3, 2)
    sel = subarray_for_connection_set(ctx, (0, 2))
    assert sel.q == 3 and sel.m == 2
    assert sel.slope_of_coset == {0: 0, 2: 2}
    assert sel.row_positions == (0, 2)
    sel.subarray.verify()
    # the slope of coset i solves c_i = u + v*alpha, slope = v/u
    for i, slope in sel.slope_of_coset.items():
        c = ctx.gen_pow(i)
        for u in ctx.subfield_elements():
            for v in ctx.subfield_elements():
                if ctx.add(u, ctx.mul(v, sel.alpha)) == c:
                    assert u != 0
                    assert ctx.div(v, u) == slope


def test_block_graph_of_full_array_is_complete():
    arr = build_pointline_oa(create(3, 2), 3)
    g = block_graph(arr)
    assert g.n == 9 and g.edge_count() == 36
    params = srg_certify(g)
    assert params.complete and params.mu is None


@pytest.mark.parametrize("q,family,d", [
    (3, "paley", None), (3, "peisert", None), (5, "paley", None),
    (5, "gp", 3), (7, "peisert", None), (9, "gpstar", 10),
])
def test_isomorphism_families(q, family, d):
    p, r = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2)}[q]
    ctx = create(p, 2 * r)
    idx = family_cosets(ctx, family, d)
    x = build_cayley(ctx, idx)
    sel = subarray_for_connection_set(ctx, idx)
    mapping = verify_isomorphism(x, sel)  # block column -> Cayley label
    bg = block_graph(sel.subarray)
    # independent edge-by-edge audit of the returned vertex map
    assert sorted(mapping) == list(range(x.n))
    for c in range(bg.n):
        for d in range(c + 1, bg.n):
            assert bg.is_adjacent(c, d) == x.is_adjacent(mapping[c], mapping[d])


def test_isomorphism_rejects_wrong_graph():
    ctx = create(3, 2)
    sel = subarray_for_connection_set(ctx, (0, 2))
    other = build_cayley(ctx, (0, 1))
    with pytest.raises(NotIsomorphicUnderF):
        verify_isomorphism(other, sel)


def test_canonical_correspondence_counts():
    ctx = create(3, 4)
    sel = subarray_for_connection_set(ctx, (0, 1, 2, 3, 4))
    pairs = canonical_correspondence(sel)
    assert len(pairs) == 5 * 9  # one line per coset and intercept


def test_unused_slope_coloring_proper():
    for q, idx in [(3, (0, 2)), (3, (0, 1, 2)), (5, (0, 1, 4))]:
        p, r = (3, 1) if q == 3 else (5, 1)
        ctx = create(p, 2 * r)
        sel = subarray_for_connection_set(ctx, idx)
        x = build_cayley(ctx, idx)
        colors = unused_slope_coloring(sel)
        assert verify_coloring(x, colors) is None
        assert len(set(colors)) == q
        # color classes are lines, hence equal sized
        sizes = sorted(colors.count(c) for c in set(colors))
        assert sizes == [q] * q


def test_translate_to_zero():
    ctx = create(3, 2)
    sel = subarray_for_connection_set(ctx, (0, 2))
    arr = translate_to_zero(sel.subarray, 4)
    assert [row[4] for row in arr.entries] == [0] * arr.num_rows
    arr.verify()


def test_zero_rows_partition():
    ctx = create(3, 4)
    sel = subarray_for_connection_set(ctx, (0, 1, 2, 3, 4))
    x = build_cayley(ctx, (0, 1, 2, 3, 4))
    srg_certify(x)
    mapping = verify_isomorphism(x, sel)
    pos_of = {label: c for c, label in enumerate(mapping)}
    cliques = enumerate_max_cliques(x, target=9, through_vertex=mapping[0])
    arr = translate_to_zero(sel.subarray, 0)
    for c in cliques:
        cols = tuple(sorted(pos_of[v] for v in c))
        rows = noncanonical_zero_rows(arr, cols, 0)
        # every non-base column of the clique agrees with column 0 in
        # exactly one row
        assert sum(len(v) for v in rows.values()) == len(cols) - 1


def test_noncanonical_clique_bound_gp81():
    ctx = create(3, 4)
    sel = subarray_for_connection_set(ctx, (0, 1, 2, 3, 4))
    res = noncanonical_clique_bound(sel, 0)
    assert res["ok"]
    assert res["bound"] == 16  # (m - 1)^2
    assert res["maximal_through"] == 289
    assert len(res["noncanonical"]) == 284
    for item in res["noncanonical"]:
        assert len(item["clique"]) <= 16
        # the agreement rows partition the clique minus the base column
        assert sum(len(v) for v in item["parts"].values()) == len(item["clique"]) - 1


def test_noncanonical_clique_bound_small():
    ctx = create(3, 2)
    sel = subarray_for_connection_set(ctx, (0, 2))
    res = noncanonical_clique_bound(sel, 0)
    assert res["ok"] and res["bound"] == 1


def test_bound_budget():
    ctx = create(3, 4)
    sel = subarray_for_connection_set(ctx, (0, 1, 2, 3, 4))
    with pytest.raises(SearchTimeout):
        noncanonical_clique_bound(sel, 0, budget=0)


def test_csv_round_trip():
    for q in (3, 5):
        ctx = create(q, 2)
        arr = build_pointline_oa(ctx, default_alpha(ctx, set()))
        text = oa_to_csv(arr)
        back = oa_from_csv(text)
        assert back.entries == arr.entries
        assert back.row_labels == arr.row_labels
        assert oa_to_csv(back) == text
        back.verify()
