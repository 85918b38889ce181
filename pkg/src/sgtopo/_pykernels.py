"""Pure-Python kernels. Same surface as ``_ckernels``; used when the extension is absent."""


def operator_tables(n, min_nbhd):
    """Interior and closure of every subset of an ``n``-point Alexandrov space.

    Returns two lists indexed by the subset bit field.
    """
    size = 1 << n
    full = size - 1
    interior = [0] * size
    for a in range(size):
        r = 0
        for x in range(n):
            if min_nbhd[x] & ~a == 0:
                r |= 1 << x
        interior[a] = r
    closure = [full & ~interior[full & ~a] for a in range(size)]
    return interior, closure


def semi_oracle_tables(n, interior, closure):
    """Brute-force semi-interior (union of semi-open subsets) and semi-closure
    (intersection of semi-closed supersets) for every subset."""
    size = 1 << n
    full = size - 1
    semi_open = [s & ~closure[interior[s]] == 0 for s in range(size)]
    semi_closed = [interior[closure[s]] & ~s == 0 for s in range(size)]
    sint = [0] * size
    scl = [0] * size
    for a in range(size):
        acc = 0
        s = a
        while True:
            if semi_open[s]:
                acc |= s
            if s == 0:
                break
            s = (s - 1) & a
        sint[a] = acc
        acc = full
        c = a
        while True:
            if semi_closed[c]:
                acc &= c
            if c == full:
                break
            c = (c + 1) | a
        scl[a] = acc
    return sint, scl


def definitional_tables(n, interior, closure):
    """sg-open, sg-closed and hsg-closed verdicts for every subset, by definition.

    sg-open: every semi-closed S inside A lies in sInt(A).
    sg-closed: sCl(A) lies in every semi-open U containing A.
    hsg-closed: every subset of A is sg-closed.
    """
    size = 1 << n
    full = size - 1
    semi_open = [s & ~closure[interior[s]] == 0 for s in range(size)]
    semi_closed = [interior[closure[s]] & ~s == 0 for s in range(size)]
    sg_open = [False] * size
    sg_closed = [False] * size
    for a in range(size):
        sint = a & closure[interior[a]]
        ok = True
        s = a
        while True:
            if semi_closed[s] and s & ~sint:
                ok = False
                break
            if s == 0:
                break
            s = (s - 1) & a
        sg_open[a] = ok
        scl = a | interior[closure[a]]
        ok = True
        u = a
        while True:
            if semi_open[u] and scl & ~u:
                ok = False
                break
            if u == full:
                break
            u = (u + 1) | a
        sg_closed[a] = ok
    hsg = [False] * size
    for a in range(size):
        ok = True
        b = a
        while True:
            if not sg_closed[b]:
                ok = False
                break
            if b == 0:
                break
            b = (b - 1) & a
        hsg[a] = ok
    return sg_open, sg_closed, hsg


def enumerate_preorders(n):
    """All reflexive transitive relations on ``n`` points.

    Each relation is a tuple of down-set rows: ``rows[x]`` holds ``x`` and every
    point below it. Rows are assigned in order with transitivity checked
    against already assigned rows, so only valid relations reach the leaves.
    """
    out = []
    rows = [0] * n
    others = (1 << n) - 1

    def place(x):
        if x == n:
            out.append(tuple(rows))
            return
        free = others & ~(1 << x)
        sub = free
        while True:
            r = sub | (1 << x)
            if _consistent(rows, x, r):
                rows[x] = r
                place(x + 1)
            if sub == 0:
                break
            sub = (sub - 1) & free
        rows[x] = 0

    place(0)
    out.sort()
    return out


def _consistent(rows, x, r):
    for y in range(x):
        ry = rows[y]
        if r >> y & 1 and ry & ~r:
            return False
        if ry >> x & 1 and r & ~ry:
            return False
    return True
