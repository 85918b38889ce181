# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same surface as ``_pykernels``; subsets are uint32 bit fields."""

from libc.stdlib cimport malloc, free

ctypedef unsigned int mask_t

cdef enum:
    MAX_BITS = 20


cdef mask_t* _alloc(Py_ssize_t size) except NULL:
    cdef mask_t* p = <mask_t*> malloc(size * sizeof(mask_t))
    if p == NULL:
        raise MemoryError()
    return p


cdef list _to_list(mask_t* p, Py_ssize_t size):
    return [p[i] for i in range(size)]


cdef void _fill_tables(int n, mask_t* mn, mask_t* it, mask_t* ct) noexcept nogil:
    cdef mask_t size = (<mask_t> 1) << n
    cdef mask_t full = size - 1
    cdef mask_t a, r
    cdef int x
    for a in range(size):
        r = 0
        for x in range(n):
            if mn[x] & ~a == 0:
                r |= (<mask_t> 1) << x
        it[a] = r
    for a in range(size):
        ct[a] = full & ~it[full & ~a]


cdef void _load(int n, object min_nbhd, mask_t* mn) except *:
    if n < 0 or n > MAX_BITS:
        raise ValueError(f"kernel carrier size must be in [0, {MAX_BITS}]")
    for x in range(n):
        mn[x] = min_nbhd[x]


def operator_tables(int n, min_nbhd):
    cdef mask_t mn[MAX_BITS]
    _load(n, min_nbhd, mn)
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef mask_t* it = _alloc(size)
    cdef mask_t* ct = _alloc(size)
    try:
        with nogil:
            _fill_tables(n, mn, it, ct)
        return _to_list(it, size), _to_list(ct, size)
    finally:
        free(it)
        free(ct)


cdef void _load_tables(Py_ssize_t size, object interior, object closure, mask_t* it, mask_t* ct) except *:
    if len(interior) != size or len(closure) != size:
        raise ValueError("operator tables do not match carrier size")
    for i in range(size):
        it[i] = interior[i]
        ct[i] = closure[i]


def semi_oracle_tables(int n, interior, closure):
    if n < 0 or n > MAX_BITS:
        raise ValueError(f"kernel carrier size must be in [0, {MAX_BITS}]")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef mask_t full = <mask_t> (size - 1)
    cdef mask_t* it = _alloc(size)
    cdef mask_t* ct = _alloc(size)
    cdef mask_t* si = _alloc(size)
    cdef mask_t* sc = _alloc(size)
    cdef unsigned char* so = <unsigned char*> malloc(size)
    cdef unsigned char* sk = <unsigned char*> malloc(size)
    cdef mask_t a, s, c, acc
    try:
        if so == NULL or sk == NULL:
            raise MemoryError()
        _load_tables(size, interior, closure, it, ct)
        with nogil:
            for s in range(<mask_t> size):
                so[s] = (s & ~ct[it[s]]) == 0
                sk[s] = (it[ct[s]] & ~s) == 0
            for a in range(<mask_t> size):
                acc = 0
                s = a
                while True:
                    if so[s]:
                        acc |= s
                    if s == 0:
                        break
                    s = (s - 1) & a
                si[a] = acc
                acc = full
                c = a
                while True:
                    if sk[c]:
                        acc &= c
                    if c == full:
                        break
                    c = (c + 1) | a
                sc[a] = acc
        return _to_list(si, size), _to_list(sc, size)
    finally:
        free(it)
        free(ct)
        free(si)
        free(sc)
        free(so)
        free(sk)


def definitional_tables(int n, interior, closure):
    if n < 0 or n > MAX_BITS:
        raise ValueError(f"kernel carrier size must be in [0, {MAX_BITS}]")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef mask_t full = <mask_t> (size - 1)
    cdef mask_t* it = _alloc(size)
    cdef mask_t* ct = _alloc(size)
    cdef unsigned char* flags = <unsigned char*> malloc(5 * size)
    cdef unsigned char* so
    cdef unsigned char* sk
    cdef unsigned char* go
    cdef unsigned char* gc
    cdef unsigned char* hs
    cdef mask_t a, s, u, b, sint, scl
    cdef bint ok
    try:
        if flags == NULL:
            raise MemoryError()
        so = flags
        sk = flags + size
        go = flags + 2 * size
        gc = flags + 3 * size
        hs = flags + 4 * size
        _load_tables(size, interior, closure, it, ct)
        with nogil:
            for s in range(<mask_t> size):
                so[s] = (s & ~ct[it[s]]) == 0
                sk[s] = (it[ct[s]] & ~s) == 0
            for a in range(<mask_t> size):
                sint = a & ct[it[a]]
                ok = True
                s = a
                while True:
                    if sk[s] and (s & ~sint):
                        ok = False
                        break
                    if s == 0:
                        break
                    s = (s - 1) & a
                go[a] = ok
                scl = a | it[ct[a]]
                ok = True
                u = a
                while True:
                    if so[u] and (scl & ~u):
                        ok = False
                        break
                    if u == full:
                        break
                    u = (u + 1) | a
                gc[a] = ok
            for a in range(<mask_t> size):
                ok = True
                b = a
                while True:
                    if not gc[b]:
                        ok = False
                        break
                    if b == 0:
                        break
                    b = (b - 1) & a
                hs[a] = ok
        return (
            [go[i] != 0 for i in range(size)],
            [gc[i] != 0 for i in range(size)],
            [hs[i] != 0 for i in range(size)],
        )
    finally:
        free(it)
        free(ct)
        free(flags)


cdef bint _consistent(mask_t* rows, int x, mask_t r) noexcept nogil:
    cdef int y
    cdef mask_t ry
    for y in range(x):
        ry = rows[y]
        if (r >> y) & 1 and ry & ~r:
            return False
        if (ry >> x) & 1 and r & ~ry:
            return False
    return True


def enumerate_preorders(int n):
    if n < 0 or n > 8:
        raise ValueError("preorder enumeration supports n <= 8")
    cdef mask_t rows[8]
    cdef mask_t subs[8]
    cdef mask_t frees[8]
    cdef int x = 0
    cdef mask_t r
    cdef list out = []
    if n == 0:
        return [()]
    for i in range(n):
        frees[i] = (((<mask_t> 1) << n) - 1) & ~((<mask_t> 1) << i)
    # iterative DFS; subs[x] is the next candidate submask for row x, or a
    # sentinel bit above the carrier once exhausted
    cdef mask_t done = (<mask_t> 1) << n
    subs[0] = frees[0]
    while x >= 0:
        if subs[x] == done:
            x -= 1
            continue
        r = subs[x] | ((<mask_t> 1) << x)
        if subs[x] == 0:
            subs[x] = done
        else:
            subs[x] = (subs[x] - 1) & frees[x]
        if not _consistent(rows, x, r):
            continue
        rows[x] = r
        if x == n - 1:
            out.append(tuple([rows[i] for i in range(n)]))
        else:
            x += 1
            subs[x] = frees[x]
    out.sort()
    return out
