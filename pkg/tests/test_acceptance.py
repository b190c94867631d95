"""Acceptance criteria, all exact.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per
criterion is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import io
import random
import sys
import time

import pytest

import inventory
import oracles
from mutations import complex_mutations, map_mutations
from equilef import data_path
from equilef.cli import main
from equilef.complexes import Cell, generator_map, is_valid, solve_chain_maps
from equilef.formats import load
from equilef.groups import element_classes
from equilef.invariants import analytical_lefschetz, decompose, fixed_orbit_index, homological_lefschetz
from equilef.laws import commutativity, conjugation_invariance, cofibration, suspension_sign, wedge_additivity
from equilef.library import by_name, small_groups
from equilef.orbits import MorphismSum, _admissible, morphism_set
from equilef.rings import ConjClassSum, TomDieckElement, cc_augment, project
from equilef.traces import MorphismMatrix, hs_trace

RESULTS = {}


def record(n, title, ok, detail, seconds):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n} ({title}): {detail} [{seconds:.2f}s]"
    RESULTS[n] = line
    return line


def timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


# 1 -----------------------------------------------------------------------------


def reflection_circle():
    out = io.StringIO()
    code = main(["lefschetz", data_path("z2_circle_f0.map"), "--method", "both"], out=out)
    lines = out.getvalue().splitlines()
    f = load(data_path("z2_circle_f0.map"))
    i_G = str(fixed_orbit_index(f))
    ok = code == 0 and lines == ["-1*(H1_0) + 1*(H2_0)"] * 2 and i_G == "-1*(H1_0) + 2*(H2_0)"
    return ok, f"L_G = {lines[0] if lines else '?'} (both methods), i_G = {i_G}"


# 2 -----------------------------------------------------------------------------

GENERATOR_GROUPS = ["C2", "C3", "C4", "C2xC2", "S3", "D4"]


def generator_suite():
    checked = 0
    bad = []
    for name in GENERATOR_GROUPS:
        G = by_name(name)
        for cls in G.subgroup_classes():
            H = cls.representative
            W = G.weyl(H)
            one = TomDieckElement.basis(H)
            for q in range(W.order):
                w = W.lift(q)
                f = generator_map(H, w)
                ok = homological_lefschetz(f) == one and analytical_lefschetz(f)[0] == one
                expected = ConjClassSum.from_elements(W, {q: 1})
                for k, v in decompose(f).items():
                    ok = ok and (v == expected if k == cls else not v)
                checked += 1
                if not ok:
                    bad.append(f"{name} ({cls.label}) w={G.names[w]}")
    return not bad, f"{checked} generator maps over {len(GENERATOR_GROUPS)} groups, {len(bad)} mismatches"


# 3 / 4 -------------------------------------------------------------------------


def _has_nonzero_d2(X):
    return any(X.cell(s).dim >= 2 for (_, s) in X.differential)


def chain_level_equality():
    rows = inventory.inventory()
    maps = [f for _, _, fs in rows for f in fs]
    kinds = {
        "wedge": sum(" v " in n for n, _, _ in rows),
        "suspension": sum("suspended" in n for n, _, _ in rows),
        "2-dim with d": sum(_has_nonzero_d2(X) for _, X, _ in rows),
    }
    orders = {X.group.order for _, X, _ in rows}
    bad = 0
    for f in maps:
        L = homological_lefschetz(f)
        ok = L == analytical_lefschetz(f)[0]
        ok = ok and all(project(L, c) == cc_augment(p) for c, p in decompose(f).items())
        bad += not ok
    ok = not bad and len(maps) >= 500 and len(rows) >= 20 and all(kinds.values()) and max(orders) <= 12
    detail = f"{len(maps)} maps on {len(rows)} complexes ({', '.join(f'{k}: {v}' for k, v in kinds.items())}), {bad} mismatches"
    return ok, detail


def cross_pairs(rng, want):
    """Maps ``a: X -> Y`` and ``b: Y -> X`` between different complexes over one group."""
    cx = inventory.complexes()
    by_group = {}
    for _, X in cx:
        by_group.setdefault(X.group, []).append(X)
    pairs = []
    pools = [xs for xs in by_group.values() if len(xs) > 1]
    while len(pairs) < want:
        xs = rng.choice(pools)
        X, Y = rng.sample(xs, 2)
        a = rng.choice(solve_chain_maps(X, 1, 8, seed=rng.randrange(10**6), codomain=Y)[1:] or [None])
        b = rng.choice(solve_chain_maps(Y, 1, 8, seed=rng.randrange(10**6), codomain=X)[1:] or [None])
        if a is not None and b is not None:
            pairs.append((a, b))
    return pairs


def axiom_suite():
    rows = inventory.inventory()
    counts = {"suspension": 0, "wedge": 0, "cofibration": 0, "commutativity": 0, "conjugation": 0}
    failures = []
    for name, X, fs in rows:
        for f in fs:
            for key, law in (("suspension", suspension_sign), ("wedge", wedge_additivity), ("cofibration", cofibration)):
                r = law(f)
                counts[key] += 1
                if not r.ok:
                    failures.append(f"{name}: {r.law} {r.detail}")
        for a, b in zip(fs, fs[1:]):
            r = commutativity(a, b)
            counts["commutativity"] += 1
            if not r.ok:
                failures.append(f"{name}: commutativity")
    cross = cross_pairs(random.Random(4), 120)
    for a, b in cross:
        counts["commutativity"] += 1
        if not commutativity(a, b).ok:
            failures.append("cross-map commutativity")
    for G in {X.group for _, X, _ in rows}:
        counts["conjugation"] += 1
        if not conjugation_invariance(G).ok:
            failures.append("conjugation invariance")
    ok = not failures and len(cross) >= 100
    detail = ", ".join(f"{k} {v}" for k, v in counts.items()) + f" (cross-map pairs {len(cross)}), {len(failures)} failures"
    return ok, detail


# 5 -----------------------------------------------------------------------------


def _random_basis(G, rng, size, tag):
    subs = G.subgroups()
    return tuple(Cell(f"{tag}{i}", 0, rng.choice(subs)) for i in range(size))


def _random_matrix(G, rows, cols, rng, skip=lambda r, c: False):
    entries = {}
    for r in rows:
        for c in cols:
            reps = _admissible(c.cell_type, r.cell_type)
            if reps and not skip(r, c) and rng.random() < 0.8:
                items = [(rng.choice(reps), rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))]
                entries[(r.id, c.id)] = MorphismSum.build(c.cell_type, r.cell_type, items)
    return MorphismMatrix(rows, cols, entries, G)


def trace_laws():
    rng = random.Random(2024)
    bad = pairs = blocks = 0
    for name in ("S3", "D4"):
        G = by_name(name)
        for _ in range(100):
            X = _random_basis(G, rng, rng.randint(1, 5), "x")
            Y = _random_basis(G, rng, rng.randint(1, 5), "y")
            a, b = _random_matrix(G, Y, X, rng), _random_matrix(G, X, Y, rng)
            bad += hs_trace(a.then(b)) != hs_trace(b.then(a))
            pairs += 1
    for k in range(100):
        G = by_name(("S3", "D4")[k % 2])
        A = _random_basis(G, rng, rng.randint(1, 3), "a")
        Q = _random_basis(G, rng, rng.randint(1, 3), "q")
        m = _random_matrix(G, A + Q, A + Q, rng, skip=lambda r, c: r.id[0] == "q" and c.id[0] == "a")
        ia, iq = [c.id for c in A], [c.id for c in Q]
        bad += hs_trace(m) != hs_trace(m.submatrix(ia, ia)) + hs_trace(m.submatrix(iq, iq))
        blocks += 1
    return not bad, f"{pairs} composable pairs, {blocks} block-triangular matrices, {bad} failures"


# 6 -----------------------------------------------------------------------------


def validator_sensitivity():
    # every complex with a nonzero differential, plus one non-trivial self-map of each
    items = []
    for _, X in inventory.complexes() + inventory.cones():
        if X.differential:
            items.append((X, complex_mutations, oracles.d_squared_zero))
            f = solve_chain_maps(X, 1, 4, seed=9)[-1]
            items.append((f, map_mutations, oracles.chain_law_holds))
    broken = caught = intact = false_reject = 0
    for x, mutations, law in items:
        for _, y in mutations(x):
            if law(y):
                intact += 1
                false_reject += not is_valid(y)
            else:
                broken += 1
                caught += not is_valid(y)
    ok = len(items) >= 50 and broken > 0 and caught == broken and false_reject == 0
    return ok, f"{len(items)} objects, {broken} breaking mutations all rejected: {caught == broken}, {broken - caught} false accepts, {false_reject} false rejects of {intact} harmless"


# 7 -----------------------------------------------------------------------------


def oracle_checks():
    groups = small_groups(12)
    bad = []
    pairs = 0
    for name, G in groups.items():
        subs = G.subgroups()
        if {frozenset(H.elements) for H in subs} != set(oracles.subgroups_by_subsets(G)):
            bad.append(f"{name} subgroups")
        for K in subs:
            for H in subs:
                pairs += 1
                if len(morphism_set(K, H)) != len(oracles.fixed_cosets(G, K.elements, H.elements)):
                    bad.append(f"{name} morphisms")
        if {frozenset(c) for c in element_classes(G).classes} != set(oracles.element_classes(G)):
            bad.append(f"{name} classes")
    return not bad, f"{len(groups)} groups, {pairs} morphism sets, {len(bad)} disagreements"


CRITERIA = [
    (1, "reflection circle", reflection_circle, 1.0),
    (2, "generator suite", generator_suite, 10.0),
    (3, "chain-level equality at scale", chain_level_equality, 60.0),
    (4, "axiom suite", axiom_suite, None),
    (5, "trace laws", trace_laws, 10.0),
    (6, "validator sensitivity", validator_sensitivity, None),
    (7, "oracle checks", oracle_checks, None),
]


def _run(n, title, fn, limit):
    ok, detail, seconds = timed(fn)
    if limit is not None and seconds >= limit:
        ok = False
        detail += f"; over the {limit:.0f}s limit"
    return ok, record(n, title, ok, detail, seconds)


@pytest.mark.parametrize("n, title, fn, limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(n, title, fn, limit):
    ok, line = _run(n, title, fn, limit)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        ok, line = _run(*c)
        print(line, flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
