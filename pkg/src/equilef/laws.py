"""Executable forms of the laws the invariants satisfy.

Each check returns a :class:`LawResult`; nothing here raises on a failed
law, so callers can collect a full report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    CellMap,
    add_maps,
    compose_maps,
    generator_map,
    induced_on_quotient,
    restrict_to,
    skeleton_ids,
    stratum_ids,
    suspend,
    wedge,
    wedge_maps,
)
from .invariants import analytical_lefschetz, decompose, ell_component, homological_lefschetz
from .rings import ConjClassSum, TomDieckElement, cc_augment, project


@dataclass(frozen=True)
class LawResult:
    law: str
    ok: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.law}" + (f": {self.detail}" if self.detail else "")


def _neg(d):
    return {k: -v for k, v in d.items()}


def chain_level_equality(f: CellMap) -> LawResult:
    hom = homological_lefschetz(f)
    an = analytical_lefschetz(f)[0]
    return LawResult("homological = analytical", hom == an, "" if hom == an else f"{hom} vs {an}")


def component_compatibility(f: CellMap) -> LawResult:
    L = homological_lefschetz(f)
    bad = []
    for cls in f.group.subgroup_classes():
        a, b = project(L, cls), cc_augment(ell_component(f, cls))
        if a != b:
            bad.append(f"({cls.label}) {a} vs {b}")
    return LawResult("project(L_G) = augmented ell_H", not bad, "; ".join(bad))


def suspension_sign(f: CellMap) -> LawResult:
    s = suspend(f)
    ok = homological_lefschetz(s) == -homological_lefschetz(f) and decompose(s) == _neg(decompose(f))
    return LawResult("suspension sign", ok)


def wedge_additivity(f: CellMap, h: CellMap = None) -> LawResult:
    """``L(f v h) = L(f) + L(h)``; for ``h = f`` also with an off-diagonal block."""
    h = f if h is None else h
    w = wedge_maps([f, h])
    expected = homological_lefschetz(f) + homological_lefschetz(h)
    ok = homological_lefschetz(w) == expected and analytical_lefschetz(w)[0] == expected
    if f.domain == h.domain:
        _, inj, proj = wedge([f.domain, h.domain], with_maps=True)
        cross = compose_maps(compose_maps(proj[0], f), inj[1])
        ok = ok and homological_lefschetz(add_maps(w, cross)) == expected
    return LawResult("wedge additivity", ok)


def _split(f, ids):
    return homological_lefschetz(restrict_to(f, ids)) + homological_lefschetz(induced_on_quotient(f, ids))


def cofibration(f: CellMap) -> LawResult:
    """``L(f) = L(f|A) + L(f on X/A)`` for every skeleton and every stratum ``A``."""
    X = f.domain
    L = homological_lefschetz(f)
    bad = []
    for n in range(X.dim):
        if _split(f, skeleton_ids(X, n)) != L:
            bad.append(f"skeleton {n}")
    for cls in f.group.subgroup_classes():
        for strict in (False, True):
            if _split(f, stratum_ids(X, cls, strict)) != L:
                bad.append(f"stratum {'>' if strict else '>='}({cls.label})")
    return LawResult("cofibration", not bad, ", ".join(bad))


def commutativity(a: CellMap, b: CellMap) -> LawResult:
    """``a: X -> Y`` and ``b: Y -> X``: both invariants agree on ``b a`` and ``a b``."""
    ba, ab = compose_maps(a, b), compose_maps(b, a)
    ok = homological_lefschetz(ba) == homological_lefschetz(ab)
    ok = ok and decompose(ba) == decompose(ab)
    return LawResult("commutativity", ok)


def conjugation_invariance(G) -> LawResult:
    """``ell(r_{v w v^-1}) = ell(r_w)`` for every class (H), ``w, v`` in N(H)."""
    bad = []
    for cls in G.subgroup_classes():
        H = cls.representative
        N = G.normalizer(H).elements
        for w in N:
            base = decompose(generator_map(H, w))
            for v in N:
                if decompose(generator_map(H, G.product(v, w, G.inv(v)))) != base:
                    bad.append(f"({cls.label}) w={G.names[w]} v={G.names[v]}")
    return LawResult("conjugation invariance", not bad, "; ".join(bad[:3]))


def generator_values(G) -> LawResult:
    """``r_w`` has ``L_G = 1*(H)`` and ``ell = [w]`` at (H), zero elsewhere."""
    bad = []
    for cls in G.subgroup_classes():
        H = cls.representative
        W = G.weyl(H)
        for w in G.normalizer(H).elements:
            f = generator_map(H, w)
            one = TomDieckElement.basis(H)
            if homological_lefschetz(f) != one or analytical_lefschetz(f)[0] != one:
                bad.append(f"L of r_{G.names[w]} at ({cls.label})")
            expected = ConjClassSum.from_elements(W, {W.projection[w]: 1})
            for k, v in decompose(f).items():
                if v != (expected if k == cls else ConjClassSum.zero(G.weyl(k.representative))):
                    bad.append(f"ell of r_{G.names[w]} at ({cls.label})")
                    break
    return LawResult("generator values", not bad, "; ".join(bad[:3]))


def map_laws(f: CellMap):
    return [
        chain_level_equality(f),
        component_compatibility(f),
        suspension_sign(f),
        wedge_additivity(f),
        cofibration(f),
    ]


def run_all(maps):
    """Every applicable law for a list of self-maps, in a fixed order."""
    results = []
    for k, f in enumerate(maps):
        results.extend(LawResult(f"map {k}: {r.law}", r.ok, r.detail) for r in map_laws(f))
    for i, f in enumerate(maps):
        for j, h in enumerate(maps):
            if i < j and f.domain == h.domain:
                r = commutativity(f, h)
                results.append(LawResult(f"maps {i},{j}: {r.law}", r.ok, r.detail))
    seen = []
    for k, f in enumerate(maps):
        if f.group not in seen:
            seen.append(f.group)
            for r in (generator_values(f.group), conjugation_invariance(f.group)):
                results.append(LawResult(f"group of map {k}: {r.law}", r.ok, r.detail))
    return results
