"""Exact traces.

* :func:`hs_trace` - Hattori-Stallings trace of an endomorphism of a free
  module over the isotropy ring, pushed into the tom Dieck group.  The cell
  ``sigma`` of type H contributes the module ``I(G/H)`` whose dual-basis
  pair is ``([id], identity functional)``; the trace is therefore the image
  of each diagonal entry under the augmentation.
* :func:`group_ring_trace` - diagonal sum over ``Z[W]`` followed by the
  projection onto conjugacy classes (the abelianization).
* :func:`integer_trace` - the plain diagonal sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import NotComposable, NotSquare
from .groups import WeylGroup
from .orbits import MorphismSum, epsilon_endo, sum_compose
from .rings import ConjClassSum, TomDieckElement


@dataclass(frozen=True, eq=False)
class MorphismMatrix:
    """Matrix over the isotropy ring between two cell bases.

    ``entries[(row_id, col_id)]`` is a MorphismSum from the orbit of the
    column cell to the orbit of the row cell (the image of a column
    generator is read down its column).
    """

    rows: tuple
    cols: tuple
    entries: Mapping = field(default_factory=dict)
    group: object = None

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})
        if self.group is None:
            cells = self.rows or self.cols
            if not cells:
                raise ValueError("an empty matrix needs an explicit group")
            object.__setattr__(self, "group", cells[0].cell_type.parent)

    def get(self, row_id, col_id):
        m = self.entries.get((row_id, col_id))
        if m is None:
            r = next(c for c in self.rows if c.id == row_id)
            k = next(c for c in self.cols if c.id == col_id)
            return MorphismSum.zero(k.cell_type, r.cell_type)
        return m

    def is_square(self):
        return [c.id for c in self.rows] == [c.id for c in self.cols]

    def then(self, other: MorphismMatrix) -> MorphismMatrix:
        """Apply ``self`` first, then ``other``."""
        if [c.id for c in self.rows] != [c.id for c in other.cols]:
            raise NotComposable("row basis of the first matrix differs from the column basis of the second")
        by_mid = {}
        for (mid, col), m in self.entries.items():
            by_mid.setdefault(mid, []).append((col, m))
        out = {}
        for (row, mid), m2 in other.entries.items():
            for col, m1 in by_mid.get(mid, ()):
                prod = sum_compose(m1, m2)
                if prod:
                    key = (row, col)
                    out[key] = out[key] + prod if key in out else prod
        return MorphismMatrix(other.rows, self.cols, out, self.group)

    def submatrix(self, row_ids, col_ids):
        rs = set(row_ids)
        cs = set(col_ids)
        return MorphismMatrix(
            tuple(c for c in self.rows if c.id in rs),
            tuple(c for c in self.cols if c.id in cs),
            {k: v for k, v in self.entries.items() if k[0] in rs and k[1] in cs},
            self.group,
        )


# A square matrix on one basis; same representation.
EndoMatrix = MorphismMatrix


@dataclass(frozen=True, eq=False)
class GroupRingMatrix:
    """Matrix over ``Z[W]`` for a Weyl group ``W``.

    ``entries[(row_id, col_id)]`` is a tuple of ``(quotient element, coeff)``
    pairs.  Products follow the same "first, then second" order as
    :class:`MorphismMatrix`, with ring elements multiplied first-times-second.
    """

    weyl: WeylGroup
    rows: tuple
    cols: tuple
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.entries.items():
            items = dict(v) if not isinstance(v, dict) else v
            items = tuple(sorted((q, c) for q, c in items.items() if c))
            if items:
                clean[k] = items
        object.__setattr__(self, "entries", clean)

    def __eq__(self, other):
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        return (
            self.weyl.base == other.weyl.base
            and tuple(self.rows) == tuple(other.rows)
            and tuple(self.cols) == tuple(other.cols)
            and self.entries == other.entries
        )

    def then(self, other: GroupRingMatrix) -> GroupRingMatrix:
        if tuple(self.rows) != tuple(other.cols):
            raise NotComposable("row basis of the first matrix differs from the column basis of the second")
        mul = self.weyl.quotient.table
        by_mid = {}
        for (mid, col), v in self.entries.items():
            by_mid.setdefault(mid, []).append((col, v))
        acc = {}
        for (row, mid), v2 in other.entries.items():
            for col, v1 in by_mid.get(mid, ()):
                slot = acc.setdefault((row, col), {})
                for q1, c1 in v1:
                    for q2, c2 in v2:
                        q = mul[q1][q2]
                        slot[q] = slot.get(q, 0) + c1 * c2
        return GroupRingMatrix(self.weyl, other.rows, self.cols, acc)

    @classmethod
    def identity(cls, weyl, ids):
        e = weyl.quotient.identity
        return cls(weyl, tuple(ids), tuple(ids), {(i, i): {e: 1} for i in ids})


def hs_trace(m: MorphismMatrix) -> TomDieckElement:
    if not m.is_square():
        raise NotSquare("trace needs a square matrix on one basis")
    total = TomDieckElement.zero(m.group)
    for c in m.rows:
        entry = m.entries.get((c.id, c.id))
        if entry:
            total = total + epsilon_endo(entry)
    return total


def hs_trace_commutes(a: MorphismMatrix, b: MorphismMatrix):
    """``(trace(a o b), trace(b o a))`` for ``a: X -> Y`` and ``b: Y -> X``."""
    return hs_trace(b.then(a)), hs_trace(a.then(b))


def group_ring_trace(m: GroupRingMatrix) -> ConjClassSum:
    if tuple(m.rows) != tuple(m.cols):
        raise NotSquare("trace needs a square matrix on one basis")
    acc = {}
    for r in m.rows:
        for q, c in m.entries.get((r, r), ()):
            acc[q] = acc.get(q, 0) + c
    return ConjClassSum.from_elements(m.weyl, acc)


def integer_trace(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotSquare(f"integer matrix is not square ({n} rows)")
    return sum(m[i][i] for i in range(n))
