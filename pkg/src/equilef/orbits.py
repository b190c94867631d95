"""The orbit category: G-maps between coset spaces and their integer sums.

A G-map ``G/K -> G/H`` is right multiplication ``[x] -> [x g]`` by an element
``g`` with ``g^-1 K g`` contained in ``H``; it only depends on the coset
``gH``, so morphisms are stored by the least element of that coset.
Composition "first, then second" multiplies representatives in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotComposable, NotInNormalizer, ParentMismatch, SourceTargetMismatch
from .groups import Subgroup
from .rings import TomDieckElement


def coset_minima(H: Subgroup):
    """Tuple mapping each element ``g`` to ``min(gH)``."""
    G = H.parent
    cache = G._cache.setdefault("coset_min", {})
    out = cache.get(H.elements)
    if out is None:
        out = [0] * G.order
        for g in range(G.order):
            out[g] = min(G.mul(g, h) for h in H.elements)
        out = cache[H.elements] = tuple(out)
    return out


def _admissible(K: Subgroup, H: Subgroup):
    """Sorted canonical representatives of ``[G/K, G/H]``."""
    if K.parent != H.parent:
        raise ParentMismatch("orbits of different groups")
    G = K.parent
    cache = G._cache.setdefault("morphisms", {})
    key = (K.elements, H.elements)
    reps = cache.get(key)
    if reps is None:
        hmask = H.mask
        kmask = K.mask
        mins = coset_minima(H)
        found = []
        for g in sorted(set(mins)):
            if G.kernel.conjugate(kmask, G.inv(g)) & ~hmask == 0:
                found.append(g)
        reps = cache[key] = tuple(found)
    return reps


@dataclass(frozen=True, order=False)
class OrbitMorphism:
    source: Subgroup
    target: Subgroup
    rep: int

    def __repr__(self):
        return f"R[{self.source.parent.names[self.rep]}]"


def make_morphism(K: Subgroup, H: Subgroup, g: int) -> OrbitMorphism:
    """The morphism ``[x] -> [x g]`` from G/K to G/H, canonicalized."""
    rep = coset_minima(H)[g]
    if rep not in _admissible(K, H):
        raise ValueError(f"g={g} does not define a G-map G/K -> G/H (g^-1 K g not in H)")
    return OrbitMorphism(K, H, rep)


def identity_morphism(H: Subgroup) -> OrbitMorphism:
    return OrbitMorphism(H, H, coset_minima(H)[H.parent.identity])


def weyl_morphism(H: Subgroup, w: int) -> OrbitMorphism:
    """``r_w`` on G/H for ``w`` in the normalizer of ``H``."""
    G = H.parent
    if G.kernel.conjugate(H.mask, w) != H.mask:
        raise NotInNormalizer(f"{G.names[w]} does not normalize the subgroup")
    return OrbitMorphism(H, H, coset_minima(H)[w])


def morphism_set(K: Subgroup, H: Subgroup) -> list:
    return [OrbitMorphism(K, H, g) for g in _admissible(K, H)]


def compose(first: OrbitMorphism, second: OrbitMorphism) -> OrbitMorphism:
    """``second o first`` as a G-map: ``[x] -> [x first.rep second.rep]``."""
    if first.target != second.source:
        raise NotComposable("first.target differs from second.source")
    G = first.source.parent
    return OrbitMorphism(first.source, second.target, coset_minima(second.target)[G.mul(first.rep, second.rep)])


@dataclass(frozen=True)
class MorphismSum:
    """Integer combination of morphisms G/source -> G/target.

    ``terms`` holds ``(rep, coeff)`` pairs sorted by rep, with no zero
    coefficients; equality of sums is equality of these tuples.
    """

    source: Subgroup
    target: Subgroup
    terms: tuple = ()

    @classmethod
    def build(cls, source, target, items, check=True):
        """From ``(g, coeff)`` pairs; each ``g`` is canonicalized to its coset minimum."""
        mins = coset_minima(target)
        allowed = _admissible(source, target) if check else None
        acc = {}
        for g, c in items:
            if not c:
                continue
            r = mins[g]
            if check and r not in allowed:
                raise ValueError(f"g={g} does not define a G-map between these orbits")
            acc[r] = acc.get(r, 0) + c
        return cls(source, target, tuple(sorted((r, c) for r, c in acc.items() if c)))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, ())

    @classmethod
    def of(cls, morphism: OrbitMorphism, coeff=1):
        return cls(morphism.source, morphism.target, ((morphism.rep, coeff),) if coeff else ())

    @classmethod
    def identity(cls, H):
        return cls.of(identity_morphism(H))

    def __bool__(self):
        return bool(self.terms)

    def morphisms(self):
        return [(OrbitMorphism(self.source, self.target, r), c) for r, c in self.terms]

    def coefficient_sum(self):
        return sum(c for _, c in self.terms)

    def _check(self, other):
        if self.source != other.source or self.target != other.target:
            raise SourceTargetMismatch("sums over different hom-sets")

    def __add__(self, other):
        if not isinstance(other, MorphismSum):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for r, c in other.terms:
            acc[r] = acc.get(r, 0) + c
        return MorphismSum(self.source, self.target, tuple(sorted((r, c) for r, c in acc.items() if c)))

    def __neg__(self):
        return MorphismSum(self.source, self.target, tuple((r, -c) for r, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if not k:
            return MorphismSum(self.source, self.target, ())
        return MorphismSum(self.source, self.target, tuple((r, k * c) for r, c in self.terms))

    __rmul__ = __mul__

    def then(self, other: MorphismSum) -> MorphismSum:
        return sum_compose(self, other)

    def __repr__(self):
        G = self.source.parent
        body = " + ".join(f"{c}*R[{G.names[r]}]" for r, c in self.terms) or "0"
        return f"MorphismSum({body})"


def sum_compose(a: MorphismSum, b: MorphismSum) -> MorphismSum:
    """Bilinear composition: ``a`` first, then ``b``."""
    if a.target != b.source:
        raise NotComposable("a.target differs from b.source")
    G = a.source.parent
    mins = coset_minima(b.target)
    table = G.table
    acc = {}
    for r1, c1 in a.terms:
        row = table[r1]
        for r2, c2 in b.terms:
            r = mins[row[r2]]
            acc[r] = acc.get(r, 0) + c1 * c2
    return MorphismSum(a.source, b.target, tuple(sorted((r, c) for r, c in acc.items() if c)))


def epsilon_endo(m: MorphismSum) -> TomDieckElement:
    """Augmentation of an endomorphism sum: total coefficient times ``(H)``."""
    if m.source != m.target:
        raise SourceTargetMismatch("augmentation is defined on endomorphisms of one orbit")
    return TomDieckElement.basis(m.source, m.coefficient_sum())
