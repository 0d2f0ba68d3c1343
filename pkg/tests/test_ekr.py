"""Canonical cliques, the clique module basis, decompositions, audits."""

from fractions import Fraction

import pytest

from peisert import (
    build_cayley,
    build_counterexample,
    build_ekr_basis,
    canonical_cliques,
    create,
    decompose_clique,
    enumerate_max_cliques,
    srg_certify,
    strict_ekr_audit,
    subarray_for_connection_set,
)
from peisert.ekr import balanced_indicator, eigenfunction_check, indicator
from peisert.errors import (
    NotMaximumClique,
    NotProperSubfield,
    SearchTimeout,
    ZeroVector,
)
from peisert.linalg import solve_exact

PINNED81 = (-1, 0, 0, -1, 1)


def build(q, idx, modulus=None):
    p, r = {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2), 25: (5, 2)}[q]
    ctx = create(p, 2 * r, modulus)
    x = build_cayley(ctx, idx)
    srg_certify(x)
    sel = subarray_for_connection_set(ctx, idx)
    return ctx, x, sel


# ----- canonical cliques -------------------------------------------------------

def test_canonical_cliques_are_coset_translates():
    ctx, x, sel = build(3, (0, 2))
    cliques = canonical_cliques(x, sel)
    assert len(cliques) == 2 * 3  # m * q
    sub = ctx.subfield_elements()
    for c in cliques:
        rep = ctx.gen_pow(c.coset)
        base = {ctx.mul(rep, t) for t in sub}
        shift = ctx.sub(c.vertices[0], min(base)) if False else None
        # subtracting any member of the clique from all others lands in
        # the scaled subfield
        v0 = c.vertices[0]
        diffs = {ctx.sub(v, v0) for v in c.vertices}
        assert {ctx.div(d, rep) for d in diffs if d} <= set(sub)
        assert len(c.vertices) == 3


def test_canonical_cliques_partition_per_coset():
    ctx, x, sel = build(5, (0, 1, 2))
    cliques = canonical_cliques(x, sel)
    assert len(cliques) == 15
    by_coset = {}
    for c in cliques:
        by_coset.setdefault(c.coset, []).append(c.vertices)
    for coset, group in by_coset.items():
        flat = [v for verts in group for v in verts]
        assert sorted(flat) == list(range(25))  # q parallel lines tile the plane


# ----- eigenfunctions ----------------------------------------------------------

def test_balanced_indicator_eigenvector():
    ctx, x, sel = build(3, (0, 2))
    q, m = 3, 2
    for c in canonical_cliques(x, sel):
        g = balanced_indicator(c.vertices, x.n)
        assert eigenfunction_check(x, g, q - m)
        chi = indicator(c.vertices, x.n)
        # q * balanced = scaled column q*chi - 1
        assert [q * b for b in g] == [q * a - 1 for a in chi]
        # indicator itself is not an eigenvector (J component)
        assert not eigenfunction_check(x, chi, q - m)


def test_class_sums_vanish():
    ctx, x, sel = build(5, (0, 2, 3))
    cliques = canonical_cliques(x, sel)
    by_coset = {}
    for c in cliques:
        by_coset.setdefault(c.coset, []).append(
            balanced_indicator(c.vertices, x.n))
    assert len(by_coset) == 3
    for group in by_coset.values():
        assert len(group) == 5
        total = [sum(col) for col in zip(*group)]
        assert all(t == 0 for t in total)


def test_eigenfunction_difference_identity():
    # f = chi_base - chi_other equals the scaled-vector difference / q
    ctx, x, sel = build(3, (0, 1))
    cliques = canonical_cliques(x, sel)
    q, m = 3, 2
    for coset in (0, 1):
        group = [c for c in cliques if c.coset == coset]
        base = group[0]
        sb = [q * a - 1 for a in indicator(base.vertices, x.n)]
        for other in group[1:]:
            f = [a - b for a, b in zip(indicator(base.vertices, x.n),
                                       indicator(other.vertices, x.n))]
            so = [q * a - 1 for a in indicator(other.vertices, x.n)]
            assert [Fraction(a - b, q) for a, b in zip(sb, so)] == f
            assert eigenfunction_check(x, f, q - m)


def test_eigenfunction_check_guards():
    ctx, x, sel = build(3, (0, 2))
    with pytest.raises(ZeroVector):
        eigenfunction_check(x, [0] * 9, 1)


# ----- basis -------------------------------------------------------------------

@pytest.mark.parametrize("q,idx", [(3, (0, 2)), (3, (0, 1, 2)), (5, (0, 1, 4))])
def test_basis_shape_and_rank(q, idx):
    ctx, x, sel = build(q, idx)
    basis = build_ekr_basis(x, sel)
    m = len(idx)
    assert basis.q == q and basis.m == m
    assert basis.matrix.shape == (q * q, m * (q - 1))
    assert basis.rank == m * (q - 1)
    assert len(basis.all_cliques) == m * q
    assert len(basis.basis_cliques) == m * (q - 1)
    assert all(basis.base_vertex not in c.vertices for c in basis.basis_cliques)
    assert sorted(basis.base_clique_of_coset) == sorted(set(idx))


def test_basis_gram_structure():
    import numpy as np
    ctx, x, sel = build(5, (0, 1, 2))
    basis = build_ekr_basis(x, sel)
    q = 5
    gram = basis.matrix.T @ basis.matrix
    block = q * q * (q * np.eye(q - 1, dtype=np.int64)
                     - np.ones((q - 1, q - 1), dtype=np.int64))
    for bi in range(3):
        for bj in range(3):
            sub = gram[bi * 4:(bi + 1) * 4, bj * 4:(bj + 1) * 4]
            if bi == bj:
                assert (sub == block).all()
            else:
                assert not sub.any()


# ----- decomposition -----------------------------------------------------------

def test_basis_clique_decomposes_to_unit_vector():
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    basis = build_ekr_basis(x, sel)
    for j in (0, 7, 23):
        dec = decompose_clique(x, basis, basis.basis_cliques[j].vertices)
        assert dec.residual_zero
        assert dec.coefficients[j] == 1
        assert dec.zero_count == len(basis.basis_cliques) - 1


def test_base_clique_decomposes_to_class_sum():
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    basis = build_ekr_basis(x, sel)
    dec = decompose_clique(x, basis, basis.base_clique_of_coset[0].vertices)
    assert dec.residual_zero
    assert dec.histogram == {Fraction(-1): 8, Fraction(0): 32}
    for cl, b in zip(basis.basis_cliques, dec.coefficients):
        assert b == (Fraction(-1) if cl.coset == 0 else Fraction(0))


def test_case_study_clique_decomposition():
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    basis = build_ekr_basis(x, sel)
    # the span {c1*g + c2*g^10} as a vertex set
    c2 = tuple(sorted(ctx.add(ctx.mul(u, ctx.gen_pow(1)), ctx.mul(v, ctx.gen_pow(10)))
                      for u in (0, 1, 2) for v in (0, 1, 2)))
    dec = decompose_clique(x, basis, c2)
    assert dec.residual_zero
    assert dec.zero_count == 16
    assert dec.histogram == {Fraction(0): 16, Fraction(-1, 3): 24}
    # unbalanced lift sums to the plain indicator
    chi = indicator(c2, x.n)
    recon = [Fraction(0)] * x.n
    for cl, b in dec.unbalanced.items():
        verts = next(c.vertices for c in basis.all_cliques
                     if (c.coset, c.intercept) == cl)
        for v in verts:
            recon[v] += b
    assert recon == [Fraction(t) for t in chi]


def test_decomposition_matches_exact_elimination():
    # same coefficients from plain Fraction elimination over the basis
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    basis = build_ekr_basis(x, sel)
    c2 = tuple(sorted(ctx.add(ctx.mul(u, ctx.gen_pow(1)), ctx.mul(v, ctx.gen_pow(10)))
                      for u in (0, 1, 2) for v in (0, 1, 2)))
    dec = decompose_clique(x, basis, c2)
    # matrix columns are q * balanced, so elimination yields coeffs / q
    cols = [[int(v) for v in basis.matrix[:, j]]
            for j in range(basis.matrix.shape[1])]
    sol = solve_exact(cols, balanced_indicator(c2, x.n))
    assert sol is not None
    assert [s * 9 for s in sol] == list(dec.coefficients)


def test_decompose_rejects_non_maximum():
    ctx, x, sel = build(3, (0, 2))
    basis = build_ekr_basis(x, sel)
    with pytest.raises(NotMaximumClique):
        decompose_clique(x, basis, (0, 1))  # too small
    with pytest.raises(NotMaximumClique):
        decompose_clique(x, basis, (0, 3, 4))  # not a clique


# ----- audits ------------------------------------------------------------------

def test_audit_paley9_strict():
    ctx, x, sel = build(3, (0, 2))
    report = strict_ekr_audit(x, sel)
    assert report.strict
    assert report.omega == 3
    assert report.clique_count == 6
    assert report.canonical_count == 6
    assert report.non_canonical == ()


def test_audit_full_m3_q3_not_strict():
    ctx, x, sel = build(3, (0, 1, 2))
    report = strict_ekr_audit(x, sel)
    assert not report.strict
    assert report.clique_count == 27
    assert report.canonical_count == 9
    assert len(report.non_canonical) == 18
    assert all(len(c) == 3 for c in report.non_canonical)


def test_audit_through_vertex_case_study():
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    report = strict_ekr_audit(x, sel, through_vertex=0)
    assert report.omega == 9
    assert report.clique_count == 9
    assert report.canonical_count == 5
    assert len(report.non_canonical) == 4
    assert not report.strict


def test_audit_budget():
    ctx, x, sel = build(9, (0, 1, 2, 3, 4), PINNED81)
    with pytest.raises(SearchTimeout):
        strict_ekr_audit(x, sel, budget=0)


# ----- counterexamples ---------------------------------------------------------

def test_counterexample_q9():
    ctx = create(3, 4)
    ce = build_counterexample(ctx, 3)
    assert ce.q == 9 and ce.m == 4
    assert ce.coset_indices == (0, 1, 7, 8)
    # C = K + g*K as labels
    want = tuple(sorted(ctx.add(u, ctx.mul(v, ctx.generator))
                        for u in (0, 1, 2) for v in (0, 1, 2)))
    assert ce.clique == want
    report = strict_ekr_audit(ce.graph)
    assert not report.strict
    assert report.clique_count == 72
    assert report.canonical_count == 36
    assert ce.clique in report.non_canonical


def test_counterexample_q25():
    ctx = create(5, 4)
    ce = build_counterexample(ctx, 5)
    assert ce.q == 25 and ce.m == 6
    assert ce.coset_indices == (0, 1, 6, 18, 23, 24)
    p = ce.graph.srg
    assert (p.n, p.k, p.lam, p.mu) == (625, 144, 43, 30)
    assert ce.clique in strict_ekr_audit(
        ce.graph, through_vertex=0).non_canonical


def test_counterexample_rejects_improper_subfield():
    ctx = create(3, 4)
    with pytest.raises(NotProperSubfield):
        build_counterexample(ctx, 9)  # K = F_q itself
    with pytest.raises(NotProperSubfield):
        build_counterexample(ctx, 2)  # wrong characteristic


def test_strict_threshold_q_vs_m():
    # q > (m-1)^2 forces strict; every non-strict case here has q <= (m-1)^2
    for q, idx in [(3, (0, 1)), (3, (0, 3)), (5, (0, 1)), (5, (0, 2, 4))]:
        ctx, x, sel = build(q, idx)
        report = strict_ekr_audit(x, sel)
        m = len(idx)
        if q > (m - 1) ** 2:
            assert report.strict
        if not report.strict:
            assert q <= (m - 1) ** 2
