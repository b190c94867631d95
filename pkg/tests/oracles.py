"""Brute-force reference computations, independent of the library's algorithms.

They only read the Cayley table and cell data; nothing here calls the
enumeration, coset or trace code under test.
"""

from itertools import combinations

import numpy as np


def mul(G, a, b):
    return G.table[a][b]


def inverse(G, a):
    return next(b for b in range(G.order) if G.table[a][b] == G.identity)


def subgroups_by_subsets(G):
    """Every subset containing the identity that is closed under products."""
    others = [g for g in range(G.order) if g != G.identity]
    out = []
    for k in range(len(others) + 1):
        for rest in combinations(others, k):
            S = frozenset((G.identity,) + rest)
            if all(G.table[a][b] in S for a in S for b in S):
                out.append(S)
    return out


def conjugate_set(G, S, g):
    gi = inverse(G, g)
    return frozenset(mul(G, mul(G, g, s), gi) for s in S)


def subgroup_classes(G, subs):
    seen = set()
    classes = []
    for S in subs:
        if S in seen:
            continue
        orbit = {conjugate_set(G, S, g) for g in range(G.order)}
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes


def normalizer(G, S):
    return frozenset(g for g in range(G.order) if conjugate_set(G, S, g) == S)


def left_cosets(G, H):
    return {frozenset(mul(G, g, h) for h in H) for g in range(G.order)}


def fixed_cosets(G, K, H):
    """Cosets gH with k gH = gH for all k in K: the G-maps G/K -> G/H."""
    return [c for c in left_cosets(G, H) if all(frozenset(mul(G, k, x) for x in c) == c for k in K)]


def element_classes(G):
    seen = set()
    out = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = frozenset(mul(G, mul(G, g, x), inverse(G, g)) for g in range(G.order))
        seen |= cls
        out.append(cls)
    return out


# -- the underlying non-equivariant integer chain complex ---------------------


def _coset_basis(C):
    """Ordinary cells ``(cell id, coset)`` per degree, in a fixed order."""
    G = C.group
    basis = {}
    for c in C.cells:
        cosets = sorted(left_cosets(G, c.cell_type.elements), key=min)
        basis.setdefault(c.dim, []).extend((c.id, x) for x in cosets)
    return basis


def _expand(G, src_basis, tgt_basis, entries):
    index = {b: i for i, b in enumerate(tgt_basis)}
    M = np.zeros((len(tgt_basis), len(src_basis)), dtype=np.int64)
    for j, (sid, coset) in enumerate(src_basis):
        x = min(coset)
        for (tid, s), m in entries.items():
            if s != sid:
                continue
            for rep, coeff in m.terms:
                H = m.target.elements
                image = frozenset(mul(G, mul(G, x, rep), h) for h in H)
                M[index[(tid, image)], j] += coeff
    return M


def _degrees(*Cs):
    return sorted({c.dim for C in Cs for c in C.cells})


def underlying_differentials(C, degrees=None):
    """``{n: integer matrix of d_n}`` on the cells ``x sigma``, with the bases."""
    basis = _coset_basis(C)
    degrees = degrees if degrees is not None else _degrees(C)
    d = {n: _expand(C.group, basis.get(n, []), basis.get(n - 1, []), C.differential) for n in degrees}
    return d, basis


def d_squared_zero(C):
    d, _ = underlying_differentials(C)
    return all(not np.any(d[n - 1] @ d[n]) for n in d if n - 1 in d)


def chain_law_holds(f):
    degrees = _degrees(f.domain, f.codomain)
    dX, bX = underlying_differentials(f.domain, degrees)
    dY, bY = underlying_differentials(f.codomain, degrees)
    F = {n: _expand(f.group, bX.get(n, []), bY.get(n, []), f.blocks) for n in degrees}
    return all(not np.any(F[n - 1] @ dX[n] - dY[n] @ F[n]) for n in degrees if n - 1 in F)


def ordinary_trace(f):
    """Alternating trace of the underlying integer self-map (reduced)."""
    basis = _coset_basis(f.domain)
    return sum((-1) ** n * int(np.trace(_expand(f.group, b, b, f.blocks))) for n, b in basis.items())
