"""Finite groups given by Cayley tables, and their subgroup lattices.

Elements are integer indices ``0 .. order-1``; ``table[a][b]`` is the index of
the product ``a*b``.  Everything else (inverses, subgroups, conjugacy,
normalizers, Weyl groups) is derived from the table and cached lazily on
the group object, which is otherwise immutable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    DuplicateName,
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    ParentMismatch,
)
from .kernels import make_kernel

DEFAULT_GROUP_CAP = 64


def group_cap():
    """Largest group order accepted by subgroup enumeration."""
    raw = os.environ.get("EQUILEF_GROUP_CAP")
    return int(raw) if raw else DEFAULT_GROUP_CAP


def _mask(elements):
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def _unmask(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class FiniteGroup:
    """A validated finite group.  Build one with :func:`load_group`."""

    def __init__(self, table, names, identity, subgroup_names=None, backend=None):
        self.table = tuple(tuple(row) for row in table)
        self.names = tuple(names)
        self.identity = identity
        self.order = len(self.table)
        inverse = [0] * self.order
        for a in range(self.order):
            inverse[a] = self.table[a].index(identity)
        self.inverse = tuple(inverse)
        # user labels for subgroups, keyed by sorted element tuple
        self.subgroup_names = dict(subgroup_names or {})
        self._backend = backend
        self._cache = {}
        self._hash = hash((self.table, self.names))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or (self.table == other.table and self.names == other.names)

    def __hash__(self):
        return self._hash

    @property
    def kernel(self):
        k = self._cache.get("kernel")
        if k is None:
            k = self._cache["kernel"] = make_kernel(self.table, self.inverse, self.identity, self._backend)
        return k

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, g, x):
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def product(self, *xs):
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def index_of(self, name):
        return self.names.index(name)

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, elements):
        """The subgroup with exactly these elements; raises ValueError otherwise."""
        elems = tuple(sorted(set(elements)))
        mask = _mask(elems)
        if not elems or any(not 0 <= x < self.order for x in elems):
            raise ValueError(f"elements {list(elements)} are not indices of this group")
        if self.kernel.closure(elems) != mask:
            raise ValueError(f"elements {list(elems)} do not form a subgroup")
        return Subgroup(self, elems)

    def generated(self, gens):
        return Subgroup(self, _unmask(self.kernel.closure(tuple(gens))))

    def trivial_subgroup(self):
        return Subgroup(self, (self.identity,))

    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    def normalizer(self, H):
        _check_parent(self, H)
        mask = H.mask
        return Subgroup(self, tuple(g for g, c in enumerate(self.kernel.conjugates(mask)) if c == mask))

    def conjugate_subgroup(self, g, H):
        """``g H g^-1``."""
        return Subgroup(self, _unmask(self.kernel.conjugate(H.mask, g)))

    def subgroups(self):
        subs = self._cache.get("subgroups")
        if subs is None:
            cap = group_cap()
            if self.order > cap:
                raise GroupTooLarge(f"group order {self.order} exceeds cap {cap} (set EQUILEF_GROUP_CAP)")
            masks = self.kernel.subgroup_masks()
            subs = sorted((Subgroup(self, _unmask(m)) for m in masks), key=lambda s: (s.order, s.elements))
            subs = self._cache["subgroups"] = tuple(subs)
        return subs

    def subgroup_classes(self):
        classes = self._cache.get("classes")
        if classes is None:
            classes = self._cache["classes"] = self._build_classes()
        return classes

    def _build_classes(self):
        by_mask = {s.mask: s for s in self.subgroups()}
        assigned = set()
        raw = []
        for s in self.subgroups():
            if s.mask in assigned:
                continue
            conj = self.kernel.conjugates(s.mask)
            member_masks = sorted(set(conj), key=lambda m: _unmask(m))
            members = sorted((by_mask[m] for m in member_masks), key=lambda t: t.elements)
            rep = members[0]
            # a with a^-1 M a = rep, i.e. M = a rep a^-1
            rep_conj = self.kernel.conjugates(rep.mask)
            conjugators = {rep.mask: self.identity}
            for g, m in enumerate(rep_conj):
                conjugators.setdefault(m, g)
            raw.append((rep, tuple(members), {m: conjugators[m.mask] for m in members}))
            assigned.update(member_masks)
        raw.sort(key=lambda r: (r[0].order, r[0].elements))
        per_order = {}
        classes = []
        for idx, (rep, members, conjugators) in enumerate(raw):
            k = per_order.get(rep.order, 0)
            per_order[rep.order] = k + 1
            label = self.subgroup_names.get(rep.elements, f"H{rep.order}_{k}")
            classes.append(SubgroupClass(rep, members, label, idx, conjugators))
        return tuple(classes)

    def class_index(self, H):
        """Index in :meth:`subgroup_classes` of the conjugacy class of ``H``."""
        _check_parent(self, H)
        lookup = self._cache.get("class_lookup")
        if lookup is None:
            lookup = {m.elements: c.index for c in self.subgroup_classes() for m in c.members}
            self._cache["class_lookup"] = lookup
        return lookup[H.elements]

    def class_of(self, H):
        return self.subgroup_classes()[self.class_index(H)]

    def class_leq(self):
        """Matrix ``M[i][j]`` true iff class i is subconjugate to class j."""
        leq = self._cache.get("class_leq")
        if leq is None:
            classes = self.subgroup_classes()
            leq = []
            for ci in classes:
                row = []
                for cj in classes:
                    kmask = cj.representative.mask
                    row.append(
                        ci.representative.order <= cj.representative.order
                        and any(m.mask & ~kmask == 0 for m in ci.members)
                    )
                leq.append(tuple(row))
            leq = self._cache["class_leq"] = tuple(leq)
        return leq

    def weyl(self, H):
        _check_parent(self, H)
        cache = self._cache.setdefault("weyl", {})
        w = cache.get(H.elements)
        if w is None:
            w = cache[H.elements] = _build_weyl(self, H)
        return w


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False)
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    @property
    def mask(self):
        return _mask(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def names(self):
        return [self.parent.names[x] for x in self.elements]


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    members: tuple = field(compare=False)
    label: str = field(compare=False)
    index: int = field(compare=False)
    # member M -> element a with a^-1 M a == representative
    conjugators: Mapping = field(compare=False, repr=False)

    @property
    def group(self):
        return self.representative.parent


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """``W(H) = N(H)/H`` with its coset bookkeeping."""

    base: Subgroup
    normalizer: Subgroup
    quotient: FiniteGroup
    cosets: tuple
    projection: Mapping = field(repr=False)

    @property
    def order(self):
        return self.quotient.order

    def lift(self, q):
        """Canonical representative (least element) of quotient element ``q``."""
        return self.cosets[q][0]

    def classes(self):
        return element_classes(self.quotient)


@dataclass(frozen=True, eq=False)
class ElementClassTable:
    group: FiniteGroup
    classes: tuple
    class_of: tuple

    def __len__(self):
        return len(self.classes)


def _check_parent(G, *subs):
    for s in subs:
        if s.parent != G:
            raise ParentMismatch("subgroup belongs to a different group")


def _build_weyl(G, H):
    N = G.normalizer(H)
    hmask = H.mask
    seen = 0
    cosets = []
    for g in N.elements:
        if seen >> g & 1:
            continue
        coset = tuple(sorted(G.mul(g, h) for h in H.elements))
        seen |= _mask(coset)
        cosets.append(coset)
    cosets.sort()
    projection = {}
    for q, coset in enumerate(cosets):
        for x in coset:
            projection[x] = q
    table = [[projection[G.mul(a[0], b[0])] for b in cosets] for a in cosets]
    names = [G.names[c[0]] for c in cosets]
    identity = projection[G.identity]
    assert hmask == _mask(cosets[identity])
    quotient = FiniteGroup(table, names, identity, backend=G._backend)
    return WeylGroup(H, N, quotient, tuple(cosets), projection)


# -- module-level operations --------------------------------------------------


def load_group(table: Sequence[Sequence[int]], names: Sequence[str] | None = None, subgroup_names=None, backend=None):
    """Validate raw Cayley data and build a :class:`FiniteGroup`.

    Checks run in the order square shape, Latin square, names, identity,
    inverses, associativity; the raised error carries the first bad cell.
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("empty table", cell=None)
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}", cell=(i, None))
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise NotLatinSquare(f"entry ({i}, {j}) = {x!r} is not an element index", cell=(i, j))
    for i, row in enumerate(table):
        seen = {}
        for j, x in enumerate(row):
            if x in seen:
                raise NotLatinSquare(f"row {i} repeats {x} at columns {seen[x]} and {j}", cell=(i, j))
            seen[x] = j
    for j in range(n):
        seen = {}
        for i in range(n):
            x = table[i][j]
            if x in seen:
                raise NotLatinSquare(f"column {j} repeats {x} at rows {seen[x]} and {i}", cell=(i, j))
            seen[x] = i
    if names is None:
        names = [f"g{i}" for i in range(n)]
    if len(names) != n:
        raise DuplicateName(f"expected {n} names, got {len(names)}", cell=None)
    seen_names = {}
    for i, nm in enumerate(names):
        if nm in seen_names:
            raise DuplicateName(f"name {nm!r} used for elements {seen_names[nm]} and {i}", cell=(i, i))
        seen_names[nm] = i
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element", cell=(0, 0))
    for a in range(n):
        right = table[a].index(identity)
        if table[right][a] != identity:
            raise NoInverse(f"element {a} has no two-sided inverse", cell=(a, right))
    G = FiniteGroup(table, names, identity, subgroup_names=subgroup_names, backend=backend)
    bad = G.kernel.find_nonassociative()
    if bad is not None:
        a, b, c = bad
        raise NotAssociative(f"(g{a} g{b}) g{c} != g{a} (g{b} g{c})", cell=bad)
    return G


def all_subgroups(G: FiniteGroup):
    return list(G.subgroups())


def subgroup_classes(G: FiniteGroup):
    return list(G.subgroup_classes())


def is_subconjugate(H: Subgroup, K: Subgroup) -> bool:
    """True iff ``g H g^-1`` is contained in ``K`` for some ``g``."""
    if H.parent != K.parent:
        raise ParentMismatch("subgroups of different groups")
    if H.order > K.order or K.order % H.order:
        return False
    kmask = K.mask
    return any(c & ~kmask == 0 for c in H.parent.kernel.conjugates(H.mask))


def weyl(H: Subgroup) -> WeylGroup:
    return H.parent.weyl(H)


def element_classes(W: FiniteGroup) -> ElementClassTable:
    cached = W._cache.get("element_classes")
    if cached is not None:
        return cached
    class_of = [-1] * W.order
    classes = []
    for x in range(W.order):
        if class_of[x] >= 0:
            continue
        orbit = sorted({W.conj(g, x) for g in range(W.order)})
        for y in orbit:
            class_of[y] = len(classes)
        classes.append(tuple(orbit))
    table = ElementClassTable(W, tuple(classes), tuple(class_of))
    W._cache["element_classes"] = table
    return table
