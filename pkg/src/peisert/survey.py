"""Sweep orchestration: enumerate connection sets for a given q, run the
whole certificate stack on each graph, and assemble deterministic
per-graph reports.

Index-set policy: every named family available at q is always included;
q = 3 additionally gets every valid index set (there are only seven);
larger q are topped up to the requested count with a seeded sample of
index sets, capped at m <= (q + 1) / 2 so exhaustive clique enumeration
and per-clique decomposition stay cheap.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from . import ekr, graphs, oa, whd
from .errors import SearchTimeout, WrongCharacteristicResidue
from .field import FieldCtx, create

DEFAULT_SEED = 20240
Q_CHOICES = (3, 5, 7, 9)


def field_params(q: int) -> tuple[int, int]:
    """(p, r) with q = p^r; raises on non prime powers."""
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            while q % p == 0:
                q //= p
                r += 1
            if q != 1:
                raise ValueError("q is not a prime power")
            return p, r
    raise ValueError(f"bad q {q}")


def ambient_field(q: int, modulus=None) -> FieldCtx:
    p, r = field_params(q)
    return create(p, 2 * r, modulus)


def family_index_sets(ctx: FieldCtx) -> dict[str, frozenset[int]]:
    """All named families definable at this q, keyed by family label."""
    q = ctx.subfield_order
    out = {"paley": graphs.family_cosets(ctx, "paley")}
    try:
        out["peisert"] = graphs.family_cosets(ctx, "peisert")
    except WrongCharacteristicResidue:
        pass
    for d in range(2, q + 2):
        if (q + 1) % d == 0:
            out[f"gp_d{d}"] = graphs.family_cosets(ctx, "gp", d)
            if d % 2 == 0:
                out[f"gpstar_d{d}"] = graphs.family_cosets(ctx, "gpstar", d)
    return out


def sweep_index_sets(ctx: FieldCtx, minimum: int = 10,
                     seed: int = DEFAULT_SEED,
                     extra: tuple[tuple[int, ...], ...] = ()) -> list[tuple[str, tuple[int, ...]]]:
    """Deterministic (name, indices) list for one q.

    Families first, then any caller-supplied sets, then seeded samples up
    to `minimum` distinct sets.  At q = 3 the seven valid sets are
    exhausted instead.
    """
    q = ctx.subfield_order
    chosen: dict[tuple[int, ...], str] = {}
    for name, idx in sorted(family_index_sets(ctx).items()):
        chosen.setdefault(tuple(sorted(idx)), name)
    for idx in extra:
        chosen.setdefault(tuple(sorted(idx)), "extra")

    if q == 3:
        for size in range(0, 3):
            for rest in itertools.combinations(range(1, 4), size):
                chosen.setdefault((0,) + rest, "exhaustive")
    else:
        m_cap = (q + 1) // 2
        rng = random.Random(seed + q)
        guard = 0
        while len(chosen) < minimum and guard < 10000:
            guard += 1
            m = rng.randint(2, m_cap)
            rest = rng.sample(range(1, q + 1), m - 1)
            idx = tuple(sorted([0] + rest))
            chosen.setdefault(idx, "sampled")
    return sorted(((name, idx) for idx, name in chosen.items()),
                  key=lambda pair: (len(pair[1]), pair[1]))


@dataclass
class GraphReport:
    """Everything the acceptance criteria need for one graph."""
    name: str
    q: int
    m: int
    indices: tuple[int, ...]
    graph: graphs.Graph
    selection: oa.SubarraySelection
    srg: graphs.SrgParams
    isomorphism: list[int]
    coloring: list[int]
    coloring_proper: bool
    chromatic: int
    audit: Optional[ekr.AuditReport]
    basis: Optional[ekr.EkrBasis]
    decompositions: Optional[list[ekr.Decomposition]]
    whd_cert: whd.WhdCertificate
    bound_check: dict


def analyze_graph(ctx: FieldCtx, indices, name: str = "",
                  budget: Optional[float] = graphs.DEFAULT_BUDGET) -> GraphReport:
    """Run the full stack on one connection set."""
    q = ctx.subfield_order
    idx = tuple(sorted(set(int(i) for i in indices)))
    x = graphs.build_cayley(ctx, idx)
    params = graphs.srg_certify(x)
    sel = oa.subarray_for_connection_set(ctx, idx)
    mapping = oa.verify_isomorphism(x, sel)
    oa.canonical_correspondence(sel)

    colors = oa.unused_slope_coloring(sel)
    proper = graphs.verify_coloring(x, colors) is None
    # omega = q (coset cliques meet the Hoffman bound), so q colors pin chi
    chromatic = len(set(colors))

    audit: Optional[ekr.AuditReport] = None
    basis: Optional[ekr.EkrBasis] = None
    decs: Optional[list[ekr.Decomposition]] = None
    try:
        audit = ekr.strict_ekr_audit(x, sel, budget=budget)
        basis = ekr.build_ekr_basis(x, sel)
        all_cliques = graphs.enumerate_max_cliques(x, target=q, budget=budget)
        decs = [ekr.decompose_clique(x, basis, c) for c in all_cliques]
    except SearchTimeout:
        pass

    cert = whd.build_whd(x, sel)
    bound = oa.noncanonical_clique_bound(sel, 0, budget=budget)

    return GraphReport(name or f"q{q}_" + "-".join(map(str, idx)), q, len(idx),
                       idx, x, sel, params, mapping, colors, proper, chromatic,
                       audit, basis, decs, cert, bound)


def run_sweep(q_values=Q_CHOICES, minimum: int = 10, seed: int = DEFAULT_SEED,
              budget: Optional[float] = graphs.DEFAULT_BUDGET) -> list[GraphReport]:
    """Analyze every selected index set for each q.

    The q = 9 sweep always includes the subfield counterexample type so
    a strict-EKR failure is exercised.
    """
    reports = []
    for q in q_values:
        ctx = ambient_field(q)
        extra: tuple[tuple[int, ...], ...] = ()
        if q == 9:
            ce = ekr.build_counterexample(ctx, 3)
            extra = (ce.coset_indices,)
        for name, idx in sweep_index_sets(ctx, minimum, seed, extra):
            reports.append(analyze_graph(ctx, idx, f"q{q}:{name}:" + "-".join(map(str, idx)),
                                         budget))
    return reports
