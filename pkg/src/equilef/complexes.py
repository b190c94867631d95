"""Finite G-CW complexes as reduced cellular chain data over the orbit category.

A complex is a list of cells (id, dimension, orbit type H) together with a
sparse differential: ``differential[(tau, sigma)]`` is a MorphismSum
``G/type(sigma) -> G/type(tau)`` for an n-cell ``sigma`` and (n-1)-cell
``tau``.  The G-fixed base point is never stored, so every chain group here
is reduced.  A cellular map is the same kind of data between two complexes,
``blocks[(tau, sigma)]`` with ``tau`` in the codomain and ``sigma`` in the
domain, both of the same dimension.

Attaching maps and local degrees are not computed; the chain-level data is
the input, and the validators enforce ``d o d = 0`` and the chain law.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    BoundarySquareNonzero,
    ChainLawViolation,
    GroupMismatch,
    NotInNormalizer,
    TypeViolation,
    ValidationError,
)
from .groups import FiniteGroup, Subgroup, SubgroupClass
from .orbits import MorphismSum, _admissible, coset_minima, sum_compose, weyl_morphism
from .traces import GroupRingMatrix, MorphismMatrix


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    cell_type: Subgroup


def _nonzero(entries):
    return {k: v for k, v in entries.items() if v}


class CellComplex:
    """Reduced cellular chain data.  Cells are kept sorted by dimension."""

    def __init__(self, group: FiniteGroup, cells, differential: Mapping = None):
        self.group = group
        cells = sorted(cells, key=lambda c: c.dim)
        self.cells = tuple(cells)
        self._by_id = {}
        for c in self.cells:
            if c.id in self._by_id:
                raise ValidationError(f"duplicate cell id {c.id!r}", where=c.id)
            if c.cell_type.parent != group:
                raise GroupMismatch(f"cell {c.id!r} has a type from another group")
            if c.dim < 0:
                raise ValidationError(f"cell {c.id!r} has negative dimension", where=c.id)
            self._by_id[c.id] = c
        self.differential = _nonzero(dict(differential or {}))
        for (tau, sigma), m in self.differential.items():
            t, s = self._by_id.get(tau), self._by_id.get(sigma)
            if t is None or s is None:
                raise ValidationError(f"differential entry ({tau!r}, {sigma!r}) names an unknown cell", where=(tau, sigma))
            if t.dim != s.dim - 1:
                raise ValidationError(f"differential entry ({tau!r}, {sigma!r}) does not lower dimension by one", where=(tau, sigma))
            if m.source != s.cell_type or m.target != t.cell_type:
                raise TypeViolation(f"differential entry ({tau!r}, {sigma!r}) has the wrong hom-set", where=(tau, sigma))
        self._out = None

    def __repr__(self):
        return f"CellComplex({len(self.cells)} cells, dim {self.dim})"

    def __eq__(self, other):
        if not isinstance(other, CellComplex):
            return NotImplemented
        return self.group == other.group and self.cells == other.cells and self.differential == other.differential

    def __hash__(self):
        return hash((self.group, self.cells))

    @property
    def dim(self):
        return self.cells[-1].dim if self.cells else -1

    def cell(self, cid):
        return self._by_id[cid]

    def __contains__(self, cid):
        return cid in self._by_id

    def ids(self):
        return [c.id for c in self.cells]

    def cells_in(self, n):
        return [c for c in self.cells if c.dim == n]

    def boundary(self, sigma_id):
        """``[(tau_id, MorphismSum), ...]`` for the nonzero entries of ``d(sigma)``."""
        if self._out is None:
            out = {}
            for (tau, sigma), m in self.differential.items():
                out.setdefault(sigma, []).append((tau, m))
            self._out = out
        return self._out.get(sigma_id, ())

    def d_matrix(self, n):
        """Degree-n differential as a MorphismMatrix (columns: n-cells)."""
        rows = tuple(self.cells_in(n - 1))
        cols = tuple(self.cells_in(n))
        cs = {c.id for c in cols}
        return MorphismMatrix(rows, cols, {k: v for k, v in self.differential.items() if k[1] in cs}, self.group)


class CellMap:
    """Cellular map ``domain -> codomain`` given by degree-preserving blocks."""

    def __init__(self, domain: CellComplex, codomain: CellComplex, blocks: Mapping = None):
        if domain.group != codomain.group:
            raise GroupMismatch("domain and codomain over different groups")
        self.domain = domain
        self.codomain = codomain
        self.blocks = _nonzero(dict(blocks or {}))
        for (tau, sigma), m in self.blocks.items():
            if sigma not in domain or tau not in codomain:
                raise ValidationError(f"map block ({tau!r}, {sigma!r}) names an unknown cell", where=(tau, sigma))
            s, t = domain.cell(sigma), codomain.cell(tau)
            if s.dim != t.dim:
                raise ValidationError(f"map block ({tau!r}, {sigma!r}) changes dimension", where=(tau, sigma))
            if m.source != s.cell_type or m.target != t.cell_type:
                raise TypeViolation(f"map block ({tau!r}, {sigma!r}) has the wrong hom-set", where=(tau, sigma))

    def __repr__(self):
        return f"CellMap({len(self.blocks)} blocks)"

    def __eq__(self, other):
        if not isinstance(other, CellMap):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.blocks == other.blocks

    def __hash__(self):
        return hash(tuple(sorted((k, v.terms) for k, v in self.blocks.items())))

    @property
    def group(self):
        return self.domain.group

    def is_self_map(self):
        return self.domain == self.codomain

    def block_matrix(self, n):
        """Degree-n block as a MorphismMatrix (columns: domain n-cells)."""
        rows = tuple(self.codomain.cells_in(n))
        cols = tuple(self.domain.cells_in(n))
        cs = {c.id for c in cols}
        return MorphismMatrix(rows, cols, {k: v for k, v in self.blocks.items() if k[1] in cs}, self.group)

    def image(self, sigma_id):
        return [(tau, m) for (tau, s), m in self.blocks.items() if s == sigma_id]

    def then(self, other: CellMap) -> CellMap:
        return compose_maps(self, other)

    def degrees(self):
        dims = {c.dim for c in self.domain.cells} | {c.dim for c in self.codomain.cells}
        return sorted(dims)


# -- validation -------------------------------------------------------------


def _check_terms(m: MorphismSum, where, what):
    allowed = _admissible(m.source, m.target)
    for r, _ in m.terms:
        if r not in allowed:
            raise TypeViolation(f"{what} entry {where} uses R[{m.source.parent.names[r]}], which is not a G-map between these orbits", where=where)


def validate_complex(C: CellComplex) -> None:
    """Raise TypeViolation or BoundarySquareNonzero; return None when valid."""
    for key in sorted(C.differential):
        _check_terms(C.differential[key], key, "differential")
    for sigma in C.cells:
        acc = {}
        for tau, m1 in C.boundary(sigma.id):
            for rho, m2 in C.boundary(tau):
                prod = sum_compose(m1, m2)
                acc[rho] = acc[rho] + prod if rho in acc else prod
        for rho in sorted(acc):
            if acc[rho]:
                raise BoundarySquareNonzero(
                    f"d(d({sigma.id})) has nonzero coefficient {acc[rho]!r} on cell {rho}", where=(sigma.id, rho)
                )


def validate_map(f: CellMap) -> None:
    """Raise TypeViolation or ChainLawViolation; return None when valid."""
    for key in sorted(f.blocks):
        _check_terms(f.blocks[key], key, "map")
    image = {}
    for (tau, sigma), m in f.blocks.items():
        image.setdefault(sigma, []).append((tau, m))
    for sigma in f.domain.cells:
        lhs = {}  # f(d sigma)
        for tau, m1 in f.domain.boundary(sigma.id):
            for rho, m2 in image.get(tau, ()):
                prod = sum_compose(m1, m2)
                lhs[rho] = lhs[rho] + prod if rho in lhs else prod
        rhs = {}  # d(f sigma)
        for tau, m1 in image.get(sigma.id, ()):
            for rho, m2 in f.codomain.boundary(tau):
                prod = sum_compose(m1, m2)
                rhs[rho] = rhs[rho] + prod if rho in rhs else prod
        for rho in sorted(set(lhs) | set(rhs)):
            a = lhs.get(rho) or None
            b = rhs.get(rho) or None
            if a != b:
                raise ChainLawViolation(
                    f"f(d({sigma.id})) and d(f({sigma.id})) differ on cell {rho}: {a!r} vs {b!r}", where=(sigma.id, rho)
                )


def is_valid(x) -> bool:
    try:
        if isinstance(x, CellMap):
            validate_map(x)
        else:
            validate_complex(x)
    except ValidationError:
        return False
    return True


# -- constructors ------------------------------------------------------------


def empty_complex(group: FiniteGroup) -> CellComplex:
    return CellComplex(group, ())


def orbit_point(H: Subgroup, cell_id="p") -> CellComplex:
    """Reduced model of ``(G/H)_+``: one 0-cell of type H."""
    return CellComplex(H.parent, [Cell(cell_id, 0, H)])


def orbit_sphere(H: Subgroup, n: int, cell_id="s") -> CellComplex:
    """Reduced model of ``(G/H)_+ smash S^n``: one n-cell of type H."""
    if n < 0:
        raise ValueError("sphere dimension must be non-negative")
    return CellComplex(H.parent, [Cell(cell_id, n, H)])


def identity_map(C: CellComplex) -> CellMap:
    return CellMap(C, C, {(c.id, c.id): MorphismSum.identity(c.cell_type) for c in C.cells})


def zero_map(X: CellComplex, Y: CellComplex = None) -> CellMap:
    return CellMap(X, X if Y is None else Y, {})


def generator_map(H: Subgroup, w: int, n: int = 0) -> CellMap:
    """``r_w: [g] -> [g w]`` on ``(G/H)_+``, suspended ``n`` times."""
    G = H.parent
    if G.kernel.conjugate(H.mask, w) != H.mask:
        raise NotInNormalizer(f"{G.names[w]} is not in the normalizer of the subgroup")
    C = orbit_point(H) if n == 0 else orbit_sphere(H, n)
    cid = C.cells[0].id
    return CellMap(C, C, {(cid, cid): MorphismSum.of(weyl_morphism(H, w))})


def compose_maps(f: CellMap, h: CellMap) -> CellMap:
    """``h o f`` (apply ``f`` first)."""
    if f.codomain != h.domain:
        raise ValidationError("codomain of the first map is not the domain of the second")
    by_mid = {}
    for (mid, sigma), m in f.blocks.items():
        by_mid.setdefault(mid, []).append((sigma, m))
    out = {}
    for (rho, mid), m2 in h.blocks.items():
        for sigma, m1 in by_mid.get(mid, ()):
            prod = sum_compose(m1, m2)
            if prod:
                key = (rho, sigma)
                out[key] = out[key] + prod if key in out else prod
    return CellMap(f.domain, h.codomain, out)


def add_maps(f: CellMap, h: CellMap) -> CellMap:
    """Chain-level sum of two maps with the same domain and codomain."""
    if f.domain != h.domain or f.codomain != h.codomain:
        raise ValidationError("maps have different domains or codomains")
    out = dict(f.blocks)
    for k, m in h.blocks.items():
        out[k] = out[k] + m if k in out else m
    return CellMap(f.domain, f.codomain, out)


def scale_map(f: CellMap, k: int) -> CellMap:
    return CellMap(f.domain, f.codomain, {key: m * k for key, m in f.blocks.items()})


def _wedge_ids(Cs):
    ids = [c.id for C in Cs for c in C.cells]
    if len(ids) == len(set(ids)):
        return [lambda cid: cid for _ in Cs]
    return [lambda cid, i=i: f"{i}:{cid}" for i in range(len(Cs))]


def wedge(Cs, with_maps=False):
    """Wedge of complexes over one group.

    Cell ids are kept when they are distinct across summands and prefixed
    ``"<i>:"`` otherwise.  With ``with_maps`` the result is
    ``(W, injections, projections)``.
    """
    Cs = list(Cs)
    if not Cs:
        raise ValueError("wedge of no complexes")
    group = Cs[0].group
    if any(C.group != group for C in Cs):
        raise GroupMismatch("wedge summands over different groups")
    rename = _wedge_ids(Cs)
    cells = []
    diff = {}
    for C, rn in zip(Cs, rename):
        cells.extend(Cell(rn(c.id), c.dim, c.cell_type) for c in C.cells)
        diff.update({(rn(t), rn(s)): m for (t, s), m in C.differential.items()})
    W = CellComplex(group, cells, diff)
    if not with_maps:
        return W
    injections = []
    projections = []
    for C, rn in zip(Cs, rename):
        ident = {(rn(c.id), c.id): MorphismSum.identity(c.cell_type) for c in C.cells}
        injections.append(CellMap(C, W, ident))
        projections.append(CellMap(W, C, {(s, t): m for (t, s), m in ident.items()}))
    return W, injections, projections


def wedge_maps(fs):
    """Block-diagonal self-map of the wedge of the maps' domains."""
    fs = list(fs)
    W, inj, proj = wedge([f.domain for f in fs], with_maps=True)
    total = zero_map(W)
    for f, i, p in zip(fs, inj, proj):
        total = add_maps(total, compose_maps(compose_maps(p, f), i))
    return total


def suspend(x):
    """Degree shift by one of a complex or of a map (blocks unchanged)."""
    if isinstance(x, CellMap):
        return CellMap(suspend(x.domain), suspend(x.codomain), x.blocks)
    return CellComplex(x.group, [Cell(c.id, c.dim + 1, c.cell_type) for c in x.cells], x.differential)


def mapping_cone(f: CellMap, prefix="c:") -> CellComplex:
    """Cone of a chain map ``f: X -> Y``: ``d(cx) = -c(dx) + f(x)``."""
    X, Y = f.domain, f.codomain
    cells = [Cell(prefix + c.id, c.dim + 1, c.cell_type) for c in X.cells] + list(Y.cells)
    if len({c.id for c in cells}) != len(cells):
        raise ValidationError("cone cell ids collide; choose another prefix")
    diff = {(prefix + t, prefix + s): -m for (t, s), m in X.differential.items()}
    diff.update({(t, prefix + s): m for (t, s), m in f.blocks.items()})
    diff.update(Y.differential)
    return CellComplex(X.group, cells, diff)


# -- subcomplexes, strata, quotients ------------------------------------------


def _class_index(group, H):
    if isinstance(H, SubgroupClass):
        return H.index
    return group.class_index(H)


def stratum_ids(C: CellComplex, H, strict=False):
    G = C.group
    i = _class_index(G, H)
    leq = G.class_leq()
    out = []
    for c in C.cells:
        j = G.class_index(c.cell_type)
        if leq[i][j] and not (strict and i == j):
            out.append(c.id)
    return out


def is_closed(C: CellComplex, ids) -> bool:
    keep = set(ids)
    return all(t in keep for (t, s) in C.differential if s in keep)


def subcomplex(C: CellComplex, ids) -> CellComplex:
    keep = set(ids)
    for (t, s) in C.differential:
        if s in keep and t not in keep:
            raise ValidationError(f"cells are not closed under the differential: {s} hits {t}", where=(t, s))
    return CellComplex(C.group, [c for c in C.cells if c.id in keep], {k: v for k, v in C.differential.items() if k[0] in keep and k[1] in keep})


def quotient_complex(C: CellComplex, ids) -> CellComplex:
    """Reduced chain data of ``C / A`` for the subcomplex ``A`` spanned by ``ids``."""
    drop = set(ids)
    if not is_closed(C, drop):
        raise ValidationError("quotient by cells that do not form a subcomplex")
    return CellComplex(C.group, [c for c in C.cells if c.id not in drop], {k: v for k, v in C.differential.items() if k[0] not in drop and k[1] not in drop})


def preserves(f: CellMap, ids) -> bool:
    keep = set(ids)
    return all(t in keep for (t, s) in f.blocks if s in keep)


def restrict_to(f: CellMap, ids) -> CellMap:
    """``f`` restricted to the invariant subcomplex spanned by ``ids``."""
    if not preserves(f, ids):
        raise ValidationError("map does not preserve the subcomplex")
    A = subcomplex(f.domain, ids)
    keep = set(ids)
    return CellMap(A, A, {k: v for k, v in f.blocks.items() if k[0] in keep and k[1] in keep})


def induced_on_quotient(f: CellMap, ids) -> CellMap:
    """Map induced by ``f`` on ``X / A``; ``f`` must preserve ``A``."""
    if not preserves(f, ids):
        raise ValidationError("map does not preserve the subcomplex")
    Q = quotient_complex(f.domain, ids)
    drop = set(ids)
    return CellMap(Q, Q, {k: v for k, v in f.blocks.items() if k[0] not in drop and k[1] not in drop})


def skeleton_ids(C: CellComplex, n: int):
    return [c.id for c in C.cells if c.dim <= n]


def stratum(C: CellComplex, H, strict=False) -> CellComplex:
    """Subcomplex of cells whose type class is >= (H), or > (H) if strict."""
    return subcomplex(C, stratum_ids(C, H, strict))


def restrict_map(f: CellMap, H, strict=False) -> CellMap:
    """Restriction of a self-map to a stratum (automatically invariant)."""
    return restrict_to(f, stratum_ids(f.domain, H, strict))


def inclusion_map(A: CellComplex, X: CellComplex) -> CellMap:
    return CellMap(A, X, {(c.id, c.id): MorphismSum.identity(c.cell_type) for c in A.cells})


# -- normalization of cell types ---------------------------------------------


def conjugators(C: CellComplex):
    """Per cell: element ``a`` with ``a^-1 type a`` the class representative."""
    G = C.group
    return {c.id: G.class_of(c.cell_type).conjugators[c.cell_type] for c in C.cells}


def _retype(m: MorphismSum, a_src, a_tgt, src, tgt):
    G = src.parent
    items = [(G.product(G.inv(a_src), r, a_tgt), c) for r, c in m.terms]
    return MorphismSum.build(src, tgt, items, check=False)


def normalize_complex(C: CellComplex) -> CellComplex:
    """Retype every cell to its class representative via the fixed conjugator.

    Right multiplication by ``a`` identifies ``G/(a H a^-1)`` with
    ``G/H``; entries are transported accordingly, so validity and every
    invariant are unchanged.
    """
    G = C.group
    conj = conjugators(C)
    reps = {c.id: G.class_of(c.cell_type).representative for c in C.cells}
    cells = [Cell(c.id, c.dim, reps[c.id]) for c in C.cells]
    diff = {(t, s): _retype(m, conj[s], conj[t], reps[s], reps[t]) for (t, s), m in C.differential.items()}
    return CellComplex(G, cells, diff)


def normalize_map(f: CellMap) -> CellMap:
    G = f.group
    cd, cc = conjugators(f.domain), conjugators(f.codomain)
    X, Y = normalize_complex(f.domain), normalize_complex(f.codomain)
    blocks = {
        (t, s): _retype(m, cd[s], cc[t], X.cell(s).cell_type, Y.cell(t).cell_type) for (t, s), m in f.blocks.items()
    }
    return CellMap(X, Y, blocks)


# -- integer data -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IntegerChainData:
    """Integer matrices per degree, indexed by cell ids.

    For a complex, ``matrices[n]`` is the differential ``C_n -> C_{n-1}``
    (rows: ``row_ids[n]``, the (n-1)-cells).  For a map it is the degree-n
    block (rows: codomain n-cells, columns: domain n-cells).
    """

    kind: str
    row_ids: Mapping
    col_ids: Mapping
    matrices: Mapping

    def degrees(self):
        return sorted(self.matrices)

    def ranks(self):
        return {n: len(ids) for n, ids in self.col_ids.items()}


def _int_matrix(rows, cols, entries):
    ri = {r: i for i, r in enumerate(rows)}
    ci = {c: j for j, c in enumerate(cols)}
    mat = [[0] * len(cols) for _ in rows]
    for (t, s), m in entries.items():
        if t in ri and s in ci:
            mat[ri[t]][ci[s]] += m.coefficient_sum()
    return mat


def quotient_data(x) -> IntegerChainData:
    """Forget orbit maps: every MorphismSum becomes its coefficient sum."""
    if isinstance(x, CellMap):
        dims = x.degrees()
        rows = {n: [c.id for c in x.codomain.cells_in(n)] for n in dims}
        cols = {n: [c.id for c in x.domain.cells_in(n)] for n in dims}
        mats = {n: _int_matrix(rows[n], cols[n], x.blocks) for n in dims}
        return IntegerChainData("map", rows, cols, mats)
    dims = sorted({c.dim for c in x.cells})
    rows = {n: [c.id for c in x.cells_in(n - 1)] for n in dims}
    cols = {n: [c.id for c in x.cells_in(n)] for n in dims}
    mats = {n: _int_matrix(rows[n], cols[n], x.differential) for n in dims}
    return IntegerChainData("complex", rows, cols, mats)


def fixed_relative_data(*args):
    """Group-ring matrices of ``f`` on the cells of type exactly (H).

    Call as ``fixed_relative_data(f, H)`` or ``fixed_relative_data(C, f, H)``.
    Returns ``{degree: GroupRingMatrix}`` over ``W(H)`` for the class
    representative ``H``.  A term ``R[g]`` between cells retyped by
    conjugators ``a`` (source) and ``b`` (target) becomes the Weyl element
    of ``a^-1 g b``.
    """
    if len(args) == 3:
        _, f, H = args
    else:
        f, H = args
    G = f.group
    cls = H if isinstance(H, SubgroupClass) else G.class_of(H)
    rep = cls.representative
    W = G.weyl(rep)
    proj = W.projection

    def exact(C):
        return [c for c in C.cells if G.class_index(c.cell_type) == cls.index]

    dom, cod = exact(f.domain), exact(f.codomain)
    a_dom = {c.id: cls.conjugators[c.cell_type] for c in dom}
    a_cod = {c.id: cls.conjugators[c.cell_type] for c in cod}
    out = {}
    for n in sorted({c.dim for c in dom} | {c.dim for c in cod}):
        cols = tuple(c.id for c in dom if c.dim == n)
        rows = tuple(c.id for c in cod if c.dim == n)
        entries = {}
        for t in rows:
            for s in cols:
                m = f.blocks.get((t, s))
                if not m:
                    continue
                acc = {}
                for r, c in m.terms:
                    q = proj[G.product(G.inv(a_dom[s]), r, a_cod[t])]
                    acc[q] = acc.get(q, 0) + c
                entries[(t, s)] = acc
        out[n] = GroupRingMatrix(W, rows, cols, entries)
    return out


# -- chain-map solver ---------------------------------------------------------


def _variables(X: CellComplex, Y: CellComplex):
    """Unknown coefficients: (tau, sigma, rep) for every admissible morphism."""
    out = []
    for n in sorted({c.dim for c in X.cells}, reverse=True):
        for s in X.cells_in(n):
            for t in Y.cells_in(n):
                for r in _admissible(s.cell_type, t.cell_type):
                    out.append((t.id, s.id, r))
    return out


def _equations(X: CellComplex, Y: CellComplex, var_index):
    """Chain-law equations as ``{var: coeff}`` dicts, one per (sigma, rho, rep)."""
    G = X.group
    eqs = {}
    # f(d sigma): d_X(tau, sigma) first, then f(rho, tau)
    for (tau, sigma), m1 in X.differential.items():
        for rho_cell in Y.cells_in(X.cell(tau).dim):
            rho = rho_cell.id
            mins = coset_minima(rho_cell.cell_type)
            for r in _admissible(X.cell(tau).cell_type, rho_cell.cell_type):
                v = var_index[(rho, tau, r)]
                for r1, c1 in m1.terms:
                    key = (sigma, rho, mins[G.mul(r1, r)])
                    eq = eqs.setdefault(key, {})
                    eq[v] = eq.get(v, 0) + c1
    # d(f sigma): f(tau', sigma) first, then d_Y(rho, tau')
    for (rho, tau), m2 in Y.differential.items():
        rho_type = Y.cell(rho).cell_type
        mins = coset_minima(rho_type)
        for s_cell in X.cells_in(Y.cell(tau).dim):
            sigma = s_cell.id
            for r in _admissible(s_cell.cell_type, Y.cell(tau).cell_type):
                v = var_index[(tau, sigma, r)]
                for r2, c2 in m2.terms:
                    key = (sigma, rho, mins[G.mul(r, r2)])
                    eq = eqs.setdefault(key, {})
                    eq[v] = eq.get(v, 0) - c2
    return [dict((k, c) for k, c in eq.items() if c) for eq in eqs.values() if any(eq.values())]


def _reduce(equations, nvars):
    """Row-reduce integer equations exactly: ``[(pivot, {var: int coeff})]``.

    Each returned row involves one pivot variable (absent from every other
    row) plus free variables; the integer solution set is unchanged.
    """
    rows = [{v: Fraction(c) for v, c in eq.items()} for eq in equations]
    pivots = []
    for col in range(nvars):
        k = next((i for i, r in enumerate(rows) if r.get(col)), None)
        if k is None:
            continue
        row = rows.pop(k)
        inv = 1 / row[col]
        row = {v: c * inv for v, c in row.items()}
        for r in rows + [p for _, p in pivots]:
            c = r.get(col)
            if c:
                for v, a in row.items():
                    r[v] = r.get(v, 0) - c * a
                    if not r[v]:
                        del r[v]
        pivots.append((col, row))
    out = []
    for col, row in pivots:
        scale = 1
        for c in row.values():
            scale = scale * c.denominator // gcd(scale, c.denominator)
        out.append((col, {v: int(c * scale) for v, c in row.items()}))
    return out


def _search_order(reduced, nvars):
    """Free variables in their natural order, each pivot right after its last free variable."""
    pivot_of = {p: row for p, row in reduced}
    waiting = {p: {v for v in row if v != p} for p, row in reduced}
    order = [p for p, deps in waiting.items() if not deps]
    for v in range(nvars):
        if v in pivot_of:
            continue
        order.append(v)
        for p, deps in waiting.items():
            if v in deps:
                deps.discard(v)
                if not deps:
                    order.append(p)
    return order


class _Search:
    """Bounded depth-first search over integer assignments with interval pruning."""

    def __init__(self, nvars, equations, bound):
        self.n = nvars
        self.bound = bound
        self.eqs = equations
        self.by_var = [[] for _ in range(nvars)]
        for e, eq in enumerate(equations):
            for v, c in eq.items():
                self.by_var[v].append((e, c))
        self.nodes = 0

    def run(self, value_orders, budget=None):
        """Yield solutions (tuples) in DFS order; stop after ``budget`` nodes."""
        n, B = self.n, self.bound
        partial = [0] * len(self.eqs)
        slack = [sum(abs(c) for c in eq.values()) * B for eq in self.eqs]
        x = [0] * n
        self.nodes = 0

        def rec(i):
            if i == n:
                yield tuple(x)
                return
            touched = self.by_var[i]
            for val in value_orders[i]:
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    return
                ok = True
                for e, c in touched:
                    partial[e] += c * val
                    slack[e] -= abs(c) * B
                for e, c in touched:
                    if abs(partial[e]) > slack[e]:
                        ok = False
                        break
                if ok:
                    x[i] = val
                    yield from rec(i + 1)
                for e, c in touched:
                    partial[e] -= c * val
                    slack[e] += abs(c) * B

        yield from rec(0)


def solve_chain_maps(C: CellComplex, bound: int, count: int, seed: int, codomain: CellComplex = None, budget=4000):
    """Up to ``count`` distinct chain maps ``C -> codomain`` with coefficients in ``[-bound, bound]``.

    The zero map comes first, then the identity (self-maps, ``bound >= 1``).
    Further maps come from randomized depth-first searches, each continued
    until it reaches an unseen solution.  When a search exceeds ``budget``
    nodes without a new solution, one exhaustive pass fills up the rest, so
    fewer than ``count`` maps are returned only if no more exist.
    """
    Y = C if codomain is None else codomain
    variables = _variables(C, Y)
    index = {v: i for i, v in enumerate(variables)}
    reduced = _reduce(_equations(C, Y, index), len(variables))
    # search over a permuted variable order; solutions are stored in the original one
    order = _search_order(reduced, len(variables))
    position = {v: i for i, v in enumerate(order)}
    eqs = [{position[v]: c for v, c in row.items()} for _, row in reduced]
    rng = random.Random(seed)
    search = _Search(len(variables), eqs, bound)

    def unpermute(sol):
        return tuple(sol[position[v]] for v in range(len(variables)))

    def to_map(sol):
        blocks = {}
        for (t, s, r), c in zip(variables, sol):
            if c:
                blocks.setdefault((t, s), []).append((r, c))
        return CellMap(
            C,
            Y,
            {
                (t, s): MorphismSum.build(C.cell(s).cell_type, Y.cell(t).cell_type, items, check=False)
                for (t, s), items in blocks.items()
            },
        )

    found = []
    seen = set()

    def add(sol):
        if sol not in seen:
            seen.add(sol)
            found.append(sol)

    if count <= 0:
        return []
    add(tuple([0] * len(variables)))
    if Y is C and bound >= 1 and len(found) < count:
        ident = [0] * len(variables)
        for c in C.cells:
            ident[index[(c.id, c.id, coset_minima(c.cell_type)[C.group.identity])]] = 1
        add(tuple(ident))
    values = list(range(-bound, bound + 1))
    exhausted = not variables
    while len(found) < count and not exhausted:
        orders = []
        for _ in variables:
            vals = values[:]
            rng.shuffle(vals)
            orders.append(vals)
        new = None
        for sol in map(unpermute, search.run(orders, budget=budget)):
            if sol not in seen:
                new = sol
                break
        if new is not None:
            add(new)
            continue
        # the budget ran out (or the tree is exhausted): enumerate everything
        for sol in search.run([values] * len(variables)):
            add(unpermute(sol))
            if len(found) >= count:
                break
        exhausted = True
    return [to_map(s) for s in found[:count]]
