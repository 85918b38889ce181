"""Independent reference implementations over frozensets.

Nothing here touches bit fields, kernels or the closed-form operators; every
quantity is computed straight from the open family.
"""

from __future__ import annotations

from itertools import chain, combinations


def powerset(xs):
    xs = sorted(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))]


class Space:
    def __init__(self, n, opens):
        self.n = n
        self.X = frozenset(range(n))
        self.opens = [frozenset(u) for u in opens]
        self.closeds = [self.X - u for u in self.opens]
        self.subsets = powerset(self.X)

    def int(self, A):
        return frozenset().union(*[u for u in self.opens if u <= A])

    def cl(self, A):
        return frozenset(self.X).intersection(*[c for c in self.closeds if A <= c])

    # semi-open: some open U with U ⊆ A ⊆ cl U
    def semi_open(self, A):
        return any(u <= A <= self.cl(u) for u in self.opens)

    def semi_closed(self, A):
        return self.semi_open(self.X - A)

    def sint(self, A):
        return frozenset().union(*[S for S in powerset(A) if self.semi_open(S)])

    def scl(self, A):
        return frozenset(self.X).intersection(*[C for C in self.subsets if A <= C and self.semi_closed(C)])

    def nowhere_dense(self, A):
        return not self.int(self.cl(A))

    # sg-closed via sg-open complement: every semi-closed F ⊆ X∖A lies in sInt(X∖A)
    def sg_open(self, A):
        s = self.sint(A)
        return all(F <= s for F in powerset(A) if self.semi_closed(F))

    def sg_closed(self, A):
        return self.sg_open(self.X - A)

    def hsg_closed(self, A):
        return all(self.sg_closed(B) for B in powerset(A))

    def regular_open(self, A):
        return self.int(self.cl(A)) == A


def closed_families(n):
    """All topologies on n points by filtering every family of subsets (n <= 3)."""
    X = frozenset(range(n))
    subsets = powerset(X)
    inner = [s for s in subsets if s and s != X]
    out = []
    for fam in powerset(range(len(inner))):
        opens = {frozenset(), X} | {inner[i] for i in fam}
        if all(a | b in opens and a & b in opens for a in opens for b in opens):
            out.append(opens)
    return out
