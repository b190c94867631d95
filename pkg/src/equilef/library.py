"""Standard small groups as Cayley tables.

Every constructor puts the identity at index 0 and orders the remaining
elements by breadth-first discovery from the generators, so tables are
reproducible across runs.
"""

from __future__ import annotations

from itertools import permutations

from .groups import FiniteGroup, load_group


def from_generators(gens, mul, identity, name=str, subgroup_names=None):
    """Close ``gens`` under ``mul`` and return the resulting group."""
    elements = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
        i += 1
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return load_group(table, [name(x) for x in elements], subgroup_names=subgroup_names)


def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def cycle_name(p):
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "e"


def permutation_group(gens, degree=None):
    gens = [tuple(g) for g in gens]
    degree = degree or len(gens[0])
    return from_generators(gens, _compose, tuple(range(degree)), name=cycle_name)


def cyclic(n):
    return from_generators([1 % n], lambda a, b: (a + b) % n, 0, name=lambda k: "e" if k == 0 else f"a{k}" if k > 1 else "a")


def dihedral(n):
    """Symmetries of the regular n-gon, order 2n.  Elements r^k s^f."""

    def mul(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)

    def name(x):
        k, f = x
        r = "" if k == 0 else "r" if k == 1 else f"r{k}"
        return (r + ("s" if f else "")) or "e"

    return from_generators([(1 % n, 0), (0, 1)], mul, (0, 0), name=name)


def dicyclic(n):
    """Dicyclic group of order 4n: a^2n = 1, x^2 = a^n, x a x^-1 = a^-1."""
    m = 2 * n

    def mul(p, q):
        # elements a^k x^f
        k1, f1 = p
        k2, f2 = q
        if not f1:
            return ((k1 + k2) % m, f2)
        if not f2:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    def name(x):
        k, f = x
        a = "" if k == 0 else "a" if k == 1 else f"a{k}"
        return (a + ("x" if f else "")) or "e"

    return from_generators([(1, 0), (0, 1)], mul, (0, 0), name=name)


def quaternion():
    return dicyclic(2)


def symmetric(n):
    if n == 1:
        return load_group([[0]], ["e"])
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return permutation_group(gens)


def _parity(p):
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inv += p[i] > p[j]
    return inv % 2


def alternating(n):
    if n < 3:
        return load_group([[0]], ["e"])
    gens = [p for p in permutations(range(n)) if _parity(p) == 0 and p != tuple(range(n))]
    return permutation_group(gens)


def direct_product(G: FiniteGroup, H: FiniteGroup):
    def mul(x, y):
        return (G.mul(x[0], y[0]), H.mul(x[1], y[1]))

    def name(x):
        a, b = G.names[x[0]], H.names[x[1]]
        if x[0] == G.identity and x[1] == H.identity:
            return "e"
        return f"({a},{b})"

    gens = [(g, H.identity) for g in range(G.order)] + [(G.identity, h) for h in range(H.order)]
    return from_generators(gens, mul, (G.identity, H.identity), name=name)


def elementary_abelian(p, k):
    G = cyclic(p)
    for _ in range(k - 1):
        G = direct_product(G, cyclic(p))
    return G


def small_groups(max_order=12):
    """One representative of every isomorphism type of order <= 12 (24 groups)."""
    C = cyclic
    out = {
        "C1": lambda: C(1),
        "C2": lambda: C(2),
        "C3": lambda: C(3),
        "C4": lambda: C(4),
        "C2xC2": lambda: elementary_abelian(2, 2),
        "C5": lambda: C(5),
        "C6": lambda: C(6),
        "S3": lambda: symmetric(3),
        "C7": lambda: C(7),
        "C8": lambda: C(8),
        "C4xC2": lambda: direct_product(C(4), C(2)),
        "C2xC2xC2": lambda: elementary_abelian(2, 3),
        "D4": lambda: dihedral(4),
        "Q8": lambda: quaternion(),
        "C9": lambda: C(9),
        "C3xC3": lambda: elementary_abelian(3, 2),
        "C10": lambda: C(10),
        "D5": lambda: dihedral(5),
        "C11": lambda: C(11),
        "C12": lambda: C(12),
        "C6xC2": lambda: direct_product(C(6), C(2)),
        "A4": lambda: alternating(4),
        "D6": lambda: dihedral(6),
        "Dic3": lambda: dicyclic(3),
    }
    groups = {name: make() for name, make in out.items()}
    return {name: G for name, G in groups.items() if G.order <= max_order}


def by_name(name):
    """Parse names like ``C6``, ``D4``, ``S3``, ``A4``, ``Q8``, ``Dic3``, ``C2xC2``."""
    parts = name.split("x")
    groups = [_single(p) for p in parts]
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H)
    return G


def _single(token):
    if token == "Q8":
        return quaternion()
    if token.startswith("Dic"):
        return dicyclic(int(token[3:]))
    kind, rest = token[0], token[1:]
    n = int(rest)
    if kind == "C":
        return cyclic(n)
    if kind == "D":
        return dihedral(n)
    if kind == "S":
        return symmetric(n)
    if kind == "A":
        return alternating(n)
    raise ValueError(f"unknown group name {token!r}")
