"""Equivariant Lefschetz invariants of cellular self-maps.

All numbers are chain-level alternating traces (the Hopf trace principle
makes them equal to the homological ones), computed on reduced chains.
The omitted base point is a 0-cell of type (G); unreduced values are
recovered by adding ``1*(G)`` (equivariantly) or ``1`` (ordinarily).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CellMap, IntegerChainData, fixed_relative_data, quotient_data, restrict_map
from .groups import SubgroupClass
from .rings import ConjClassSum, TomDieckElement, project
from .traces import group_ring_trace, hs_trace, integer_trace


def _require_self_map(f: CellMap):
    if not f.is_self_map():
        raise ValueError("Lefschetz invariants need a self-map")


def homological_lefschetz(f: CellMap) -> TomDieckElement:
    """Alternating sum of augmented Hattori-Stallings traces (reduced L_G)."""
    _require_self_map(f)
    total = TomDieckElement.zero(f.group)
    for n in f.degrees():
        t = hs_trace(f.block_matrix(n))
        total = total + t if n % 2 == 0 else total - t
    return total


def unreduced_homological_lefschetz(f: CellMap) -> TomDieckElement:
    return homological_lefschetz(f) + TomDieckElement.basis(f.group.whole())


def ordinary_reduced_lefschetz(m: IntegerChainData) -> int:
    if m.kind != "map":
        raise ValueError("expected the integer data of a map")
    return sum((-1) ** n * integer_trace(mat) for n, mat in m.matrices.items())


@dataclass(frozen=True)
class IndexRow:
    subgroup_class: SubgroupClass
    L_geq: int  # reduced Lefschetz number on X_{>=(H)}/G
    L_gt: int  # reduced Lefschetz number on X_{>(H)}/G
    i_H: int  # unreduced fixed orbit index component


@dataclass(frozen=True)
class IndexTable:
    group: object
    rows: tuple

    def reduced(self) -> TomDieckElement:
        return TomDieckElement(self.group, tuple((r.subgroup_class.index, r.L_geq - r.L_gt) for r in self.rows if r.L_geq != r.L_gt))

    def unreduced(self) -> TomDieckElement:
        """The fixed orbit index ``i_G = L_G + 1*(G)``."""
        return TomDieckElement.from_dict(self.group, {r.subgroup_class: r.i_H for r in self.rows})

    def row(self, H):
        i = H.index if isinstance(H, SubgroupClass) else self.group.class_index(H)
        return self.rows[i]


def analytical_lefschetz(f: CellMap):
    """Stratum-by-stratum fixed orbit index: ``(L_G, IndexTable)``.

    For each class (H) the coefficient is
    ``L(f_bar on X_{>=(H)}/G) - L(f_bar on X_{>(H)}/G)`` with reduced
    ordinary Lefschetz numbers.  Every stratum contains the base point
    except ``X_{>(G)}``, which is empty, so only the (G) row of the
    unreduced table differs, by +1.
    """
    _require_self_map(f)
    G = f.group
    rows = []
    top = G.class_index(G.whole())
    for cls in G.subgroup_classes():
        geq = ordinary_reduced_lefschetz(quotient_data(restrict_map(f, cls, strict=False)))
        gt = ordinary_reduced_lefschetz(quotient_data(restrict_map(f, cls, strict=True)))
        rows.append(IndexRow(cls, geq, gt, geq - gt + (1 if cls.index == top else 0)))
    table = IndexTable(G, tuple(rows))
    return table.reduced(), table


def fixed_orbit_index(f: CellMap) -> TomDieckElement:
    return analytical_lefschetz(f)[1].unreduced()


def ell_component(f: CellMap, H) -> ConjClassSum:
    """Alternating group-ring trace of ``f`` on the cells of type exactly (H)."""
    _require_self_map(f)
    G = f.group
    cls = H if isinstance(H, SubgroupClass) else G.class_of(H)
    W = G.weyl(cls.representative)
    total = ConjClassSum.zero(W)
    for n, m in fixed_relative_data(f, cls).items():
        t = group_ring_trace(m)
        total = total + t if n % 2 == 0 else total - t
    return total


def decompose(f: CellMap) -> dict:
    """``{SubgroupClass: ell_component}`` for every class, in canonical order."""
    return {cls: ell_component(f, cls) for cls in f.group.subgroup_classes()}


@dataclass(frozen=True)
class FixedOrbitReport:
    lefschetz: TomDieckElement
    witnesses: tuple  # SubgroupClass with nonzero projection
    conclusions: tuple  # one sentence per witness

    def lines(self):
        out = [f"L_G = {self.lefschetz}"]
        if not self.witnesses:
            out.append("no nonzero components; no fixed orbit is forced")
        out.extend(self.conclusions)
        return out


def fixed_orbit_report(f: CellMap) -> FixedOrbitReport:
    L = homological_lefschetz(f)
    G = f.group
    top = G.class_index(G.whole())
    witnesses = []
    conclusions = []
    for cls in G.subgroup_classes():
        c = project(L, cls)
        if not c:
            continue
        witnesses.append(cls)
        if cls.index == top:
            conclusions.append(
                f"({cls.label}): coefficient {c}; if the base point is an isolated point, "
                f"f has a fixed orbit of type ({cls.label}) other than the base point"
            )
        else:
            conclusions.append(
                f"({cls.label}): coefficient {c}; f has a non-trivial fixed orbit of orbit type at least ({cls.label})"
            )
    return FixedOrbitReport(L, tuple(witnesses), tuple(conclusions))
