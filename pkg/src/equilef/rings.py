"""Value groups of the invariants.

``TomDieckElement`` is an integer combination of conjugacy classes of
subgroups, ``ConjClassSum`` an integer combination of element conjugacy
classes of a Weyl group.  Only the additive structure exists here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupMismatch
from .groups import FiniteGroup, Subgroup, SubgroupClass, WeylGroup, element_classes


def _canonical(items):
    acc = {}
    for k, c in items:
        if c:
            acc[k] = acc.get(k, 0) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def _signed_terms(terms):
    """Render ``[(coeff, body), ...]`` as ``-1*x + 2*y - 3*z``; empty gives ``0``."""
    if not terms:
        return "0"
    out = []
    for i, (c, body) in enumerate(terms):
        if i == 0:
            out.append(f"{'-' if c < 0 else ''}{abs(c)}*{body}")
        else:
            out.append(f" {'-' if c < 0 else '+'} {abs(c)}*{body}")
    return "".join(out)


def _class_index(group, H):
    if isinstance(H, SubgroupClass):
        if H.group != group:
            raise GroupMismatch("subgroup class of a different group")
        return H.index
    return group.class_index(H)


@dataclass(frozen=True)
class TomDieckElement:
    group: FiniteGroup
    coeffs: tuple = ()  # ((class index, coefficient), ...) sorted, nonzero

    @classmethod
    def from_dict(cls, group, mapping):
        return cls(group, _canonical((_class_index(group, k), c) for k, c in mapping.items()))

    @classmethod
    def zero(cls, group):
        return cls(group, ())

    @classmethod
    def basis(cls, H, coeff=1):
        """``coeff * (H)`` for a subgroup or subgroup class ``H``."""
        group = H.group if isinstance(H, SubgroupClass) else H.parent
        return cls(group, _canonical([(_class_index(group, H), coeff)]))

    def as_dict(self):
        return dict(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TomDieckElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatch("tom Dieck elements of different groups")
        return None

    def __add__(self, other):
        bad = self._check(other)
        if bad is not None:
            return bad
        return TomDieckElement(self.group, _canonical(self.coeffs + other.coeffs))

    def __neg__(self):
        return TomDieckElement(self.group, tuple((k, -c) for k, c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return TomDieckElement(self.group, _canonical((i, k * c) for i, c in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        classes = self.group.subgroup_classes()
        return _signed_terms([(c, f"({classes[i].label})") for i, c in self.coeffs])


def td_add(a: TomDieckElement, b: TomDieckElement) -> TomDieckElement:
    return a + b


def td_negate(a: TomDieckElement) -> TomDieckElement:
    return -a


def td_scale(a: TomDieckElement, k: int) -> TomDieckElement:
    return a * k


def project(a: TomDieckElement, H) -> int:
    """Coefficient of the class of ``H``."""
    return a.as_dict().get(_class_index(a.group, H), 0)


def downward_augment(a: TomDieckElement, H) -> int:
    """Sum of the coefficients of all classes ``(K) >= (H)``."""
    i = _class_index(a.group, H)
    leq = a.group.class_leq()
    return sum(c for k, c in a.coeffs if leq[i][k])


@dataclass(frozen=True)
class ConjClassSum:
    weyl: WeylGroup
    coeffs: tuple = ()  # ((element class index, coefficient), ...)

    @classmethod
    def from_elements(cls, weyl, mapping):
        """Sum over quotient elements, each sent to its conjugacy class."""
        table = element_classes(weyl.quotient)
        return cls(weyl, _canonical((table.class_of[q], c) for q, c in mapping.items()))

    @classmethod
    def zero(cls, weyl):
        return cls(weyl, ())

    def as_dict(self):
        return dict(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ConjClassSum):
            return NotImplemented
        return self.weyl.base == other.weyl.base and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.weyl.base, self.coeffs))

    def _check(self, other):
        if self.weyl.base != other.weyl.base:
            raise GroupMismatch("class sums over different Weyl groups")

    def __add__(self, other):
        if not isinstance(other, ConjClassSum):
            return NotImplemented
        self._check(other)
        return ConjClassSum(self.weyl, _canonical(self.coeffs + other.coeffs))

    def __neg__(self):
        return ConjClassSum(self.weyl, tuple((k, -c) for k, c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ConjClassSum(self.weyl, _canonical((i, k * c) for i, c in self.coeffs))

    __rmul__ = __mul__

    def class_name(self, i):
        W = self.weyl.quotient
        return W.names[element_classes(W).classes[i][0]]

    def __str__(self):
        return _signed_terms([(c, f"[{self.class_name(i)}]") for i, c in self.coeffs])


def cc_augment(s: ConjClassSum) -> int:
    return sum(c for _, c in s.coeffs)
