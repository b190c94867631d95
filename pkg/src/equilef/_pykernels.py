"""Pure-Python Cayley-table kernels.

Subsets of a group are encoded as integer bitmasks (bit ``i`` set means
element ``i`` is present).  ``_ckernels.pyx`` provides a compiled ``Kernel``
with the same methods for groups of order <= 64; ``kernels`` picks one.
"""

from __future__ import annotations

BACKEND = "python"


class Kernel:
    def __init__(self, table, inverse, identity):
        self.table = [list(row) for row in table]
        self.inverse = list(inverse)
        self.identity = identity
        self.n = len(table)

    def find_nonassociative(self):
        """First triple ``(a, b, c)`` with ``(ab)c != a(bc)``, else None."""
        table = self.table
        n = self.n
        for a in range(n):
            row_a = table[a]
            for b in range(n):
                row_ab = table[row_a[b]]
                row_b = table[b]
                for c in range(n):
                    if row_ab[c] != row_a[row_b[c]]:
                        return (a, b, c)
        return None

    def closure(self, gens):
        """Bitmask of the subgroup generated by ``gens``.

        Finite groups only: the monoid generated by a set is the subgroup
        it generates, so a right-multiplication search from the identity
        suffices.
        """
        table = self.table
        mask = 1 << self.identity
        gen_list = list(gens)
        stack = [self.identity]
        while stack:
            row = table[stack.pop()]
            for g in gen_list:
                y = row[g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    stack.append(y)
        return mask

    def cyclic_masks(self):
        out = []
        e = self.identity
        for g in range(self.n):
            mask = 1 << e
            x = g
            while x != e:
                mask |= 1 << x
                x = self.table[x][g]
            out.append(mask)
        return out

    def subgroup_masks(self):
        """All subgroups, found by joining cyclic subgroups to a fixpoint.

        Each discovered subgroup remembers the generators that produced it,
        so a join is a closure over at most log2(n) + 1 generators.
        """
        reps = {}
        for g, cyc in enumerate(self.cyclic_masks()):
            reps.setdefault(cyc, g)
        reps = [g for g in reps.values() if g != self.identity]
        trivial = 1 << self.identity
        found = {trivial: ()}
        frontier = [trivial]
        while frontier:
            nxt = []
            for sub in frontier:
                gens = found[sub]
                for g in reps:
                    if sub >> g & 1:
                        continue
                    joined = self.closure(gens + (g,))
                    if joined not in found:
                        found[joined] = gens + (g,)
                        nxt.append(joined)
            frontier = nxt
        return list(found)

    def conjugate(self, mask, g):
        """Bitmask of ``g S g^-1``."""
        table = self.table
        gi = self.inverse[g]
        row_g = table[g]
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << table[row_g[i]][gi]
            mask >>= 1
            i += 1
        return out

    def conjugates(self, mask):
        """``[g S g^-1 for g in G]``, indexed by ``g``."""
        return [self.conjugate(mask, g) for g in range(self.n)]
