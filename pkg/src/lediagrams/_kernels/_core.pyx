# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled grid kernels.

Typed mirror of ``_purepy``; see that module for the grid conventions.  Every
function here must return exactly what its pure-Python twin returns.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    HOLE_ = 2
    MAXD = 62
    M_PHI = 0
    M_PHI_INV = 1
    M_PHI2 = 2
    M_PHI2_INV = 3
    XM = (1 << 0b1001) | (1 << 0b0110)
    LEM = (1 << 0b1110) | (1 << 0b0110)

HOLE = 2
PHI, PHI_INV, PHI2, PHI2_INV = 0, 1, 2, 3
MAX_DIM = MAXD
X_MASK = 1 << 0b1001 | 1 << 0b0110
LE_MASK = 1 << 0b1110 | 1 << 0b0110


cdef struct Bottom:
    int w
    int nanch
    int cols[MAXD]
    uint64_t masks[MAXD]
    int anchors[MAXD]


cdef int _check_dims(int nr, int nc) except -1:
    if nr > MAXD or nc > MAXD:
        raise ValueError(f"grid {nr}x{nc} exceeds {MAXD}x{MAXD}")
    return 0


cdef int _violation(const unsigned char* g, int nr, int nc, int patmask, int* out) noexcept nogil:
    cdef int r1, r2, c1, c2, a, b, c, d, code
    for r1 in range(nr):
        for r2 in range(r1 + 1, nr):
            for c1 in range(nc):
                a = g[r1 * nc + c1]
                c = g[r2 * nc + c1]
                if a == HOLE_ or c == HOLE_:
                    continue
                for c2 in range(c1 + 1, nc):
                    b = g[r1 * nc + c2]
                    d = g[r2 * nc + c2]
                    if b == HOLE_ or d == HOLE_:
                        continue
                    code = a << 3 | b << 2 | c << 1 | d
                    if (patmask >> code) & 1:
                        if out != NULL:
                            out[0] = r1
                            out[1] = r2
                            out[2] = c1
                            out[3] = c2
                            out[4] = code
                        return 1
    return 0


def violation(unsigned char[::1] g, int nr, int nc, int patmask):
    _check_dims(nr, nc)
    cdef int out[5]
    if _violation(&g[0], nr, nc, patmask, out):
        return (out[0], out[1], out[2], out[3], out[4])
    return None


cdef int _structure(const unsigned char* g, int nc, int b, Bottom* s) except -1:
    cdef int c, r, p
    cdef uint64_t m
    s.w = 0
    for c in range(nc):
        if g[b * nc + c] != HOLE_:
            m = 0
            for r in range(b + 1):
                if g[r * nc + c] != HOLE_:
                    m |= (<uint64_t>1) << r
            s.cols[s.w] = c
            s.masks[s.w] = m
            s.w += 1
    for p in range(s.w - 1):
        if s.masks[p + 1] & ~s.masks[p]:
            raise ValueError(
                f"column {s.cols[p + 1]} reaches a row that column {s.cols[p]} "
                "misses: shape is not ⌐-complete"
            )
    s.nanch = 0
    for p in range(s.w):
        if p == s.w - 1 or s.masks[p] != s.masks[p + 1]:
            s.anchors[s.nanch] = p
            s.nanch += 1
    return 0


cdef inline int _count(const unsigned char* g, int nc, int c, uint64_t mask, int v) noexcept nogil:
    cdef int n = 0
    while mask:
        if g[__builtin_ctzll(mask) * nc + c] == v:
            n += 1
        mask &= mask - 1
    return n


cdef void _band_pivots(const unsigned char* g, int nc, int b, Bottom* s, int dual, int* piv) noexcept nogil:
    cdef int m, a, p, c, bit, best, score, sc
    cdef uint64_t rows
    for m in range(s.nanch):
        a = s.anchors[m]
        rows = s.masks[a]
        best = -1
        score = -1
        for p in range(a + 1):
            c = s.cols[p]
            bit = g[b * nc + c]
            if dual:
                if bit != 0:
                    continue
                sc = _count(g, nc, c, rows, 1)
                if sc == 0:
                    continue
            else:
                if bit != 1:
                    continue
                sc = _count(g, nc, c, rows, 0)
            if sc > score:
                best = p
                score = sc
        piv[m] = best


cdef int _chosen(Bottom* s, int* piv, int* band) noexcept nogil:
    cdef int m
    for m in range(s.nanch - 1, -1, -1):
        if piv[m] >= 0 and (m == 0 or piv[m] > s.anchors[m - 1]):
            band[0] = m
            return piv[m]
    band[0] = -1
    return -1


def pivot_report(unsigned char[::1] g, int nr, int nc, int b, bint dual):
    _check_dims(nr, nc)
    cdef Bottom s
    cdef int piv[MAXD]
    cdef int band, j, m
    _structure(&g[0], nc, b, &s)
    if s.w == 0:
        return (-1, -1, [], [], [])
    _band_pivots(&g[0], nc, b, &s, dual, piv)
    j = _chosen(&s, piv, &band)
    cands = [
        (m, s.cols[piv[m]]) for m in range(s.nanch)
        if piv[m] >= 0 and (m == 0 or piv[m] > s.anchors[m - 1])
    ]
    return (
        s.cols[j] if j >= 0 else -1,
        band,
        cands,
        [s.cols[piv[m]] if piv[m] >= 0 else -1 for m in range(s.nanch)],
        [s.cols[s.anchors[m]] for m in range(s.nanch)],
    )


cdef int _forward(unsigned char* g, int nc, int b, Bottom* s, int j, int dual) except -1:
    cdef int J = s.cols[j]
    cdef uint64_t below = (<uint64_t>1) << b
    cdef uint64_t rows, m
    cdef int p, c, o, v, equal, nonzero, ref_nonzero, single
    for p in range(j):
        g[b * nc + s.cols[p]] = 0
    for p in range(j + 1, s.w):
        c = s.cols[p]
        rows = s.masks[p]
        equal = 1
        nonzero = 0
        ref_nonzero = 0
        single = g[b * nc + c] == 1
        m = rows
        while m:
            o = __builtin_ctzll(m) * nc
            v = g[o + c]
            if v != g[o + J]:
                equal = 0
            if g[o + J]:
                ref_nonzero = 1
            if v:
                nonzero = 1
                if (m & (~m + 1)) != below:
                    single = 0
            m &= m - 1
        if single and (ref_nonzero if dual else not equal):
            raise ValueError(
                f"column {c} holds a single bottom 1 but differs from pivot "
                f"column {J}; input is not an X-diagram"
            )
        if equal and (nonzero or not dual):
            m = rows & ~below
            while m:
                g[__builtin_ctzll(m) * nc + c] = 0
                m &= m - 1
            g[b * nc + c] = 1
        elif nonzero:
            g[b * nc + c] = 1
    return 0


cdef int _inverse(unsigned char* g, int nc, int b, Bottom* s, int j, int dual) noexcept nogil:
    cdef int J = s.cols[j]
    cdef uint64_t below = (<uint64_t>1) << b
    cdef int m = 0
    cdef int p, c, o, ref, ones, ref_ones, bottom
    cdef uint64_t band_rows, above, mm
    while s.anchors[m] < j:
        m += 1
    band_rows = s.masks[s.anchors[m]] & ~below
    if dual:
        ref = _count(g, nc, J, band_rows, 1)
        for p in range(j):
            g[b * nc + s.cols[p]] = 1 if _count(g, nc, s.cols[p], band_rows, 1) >= ref else 0
    else:
        ref = _count(g, nc, J, band_rows, 0)
        for p in range(j):
            g[b * nc + s.cols[p]] = 1 if _count(g, nc, s.cols[p], band_rows, 0) < ref else 0
    for p in range(j + 1, s.w):
        c = s.cols[p]
        above = s.masks[p] & ~below
        ones = _count(g, nc, c, above, 1)
        ref_ones = _count(g, nc, J, above, 1)
        bottom = g[b * nc + c]
        if ones == 0 and bottom == 1 and (ref_ones > 0 or not dual):
            mm = s.masks[p]
            while mm:
                o = __builtin_ctzll(mm) * nc
                g[o + c] = g[o + J]
                mm &= mm - 1
        elif ones == 0 and bottom == 0:
            continue
        elif dual:
            g[b * nc + c] = 1 if ones >= ref_ones else 0
        else:
            g[b * nc + c] = 1 if ones > ref_ones else 0
    return 0


cdef int _step(unsigned char* g, int nc, int b, int mode) except -2:
    cdef Bottom s
    cdef int piv[MAXD]
    cdef int band, j, p, c
    cdef int dual = mode == M_PHI2 or mode == M_PHI2_INV
    _structure(g, nc, b, &s)
    if s.w == 0:
        return -1
    if mode == M_PHI or mode == M_PHI2:
        _band_pivots(g, nc, b, &s, dual, piv)
        j = _chosen(&s, piv, &band)
        if j < 0:
            return -1
        _forward(g, nc, b, &s, j, dual)
        return s.cols[j]
    j = -1
    if dual:
        for p in range(s.w - 1, -1, -1):
            c = s.cols[p]
            if g[b * nc + c] == 0 and _count(g, nc, c, s.masks[p], 1):
                j = p
                break
    else:
        for p in range(s.w):
            if g[b * nc + s.cols[p]] == 1:
                j = p
                break
    if j < 0:
        return -1
    _inverse(g, nc, b, &s, j, dual)
    return s.cols[j]


cdef int _transform(unsigned char* g, int nr, int nc, int mode, int* trace) except -1:
    cdef int b, k = 0
    if mode == M_PHI or mode == M_PHI2:
        for b in range(nr - 1, -1, -1):
            trace[k] = _step(g, nc, b, mode)
            k += 1
    else:
        for b in range(nr):
            trace[k] = _step(g, nc, b, mode)
            k += 1
    return 0


def step(unsigned char[::1] g, int nr, int nc, int b, int mode):
    _check_dims(nr, nc)
    return _step(&g[0], nc, b, mode)


def transform(unsigned char[::1] g, int nr, int nc, int mode):
    _check_dims(nr, nc)
    cdef int trace[MAXD]
    cdef int k
    if nr == 0:
        return []
    _transform(&g[0], nr, nc, mode, trace)
    return [trace[k] for k in range(nr)]


# -- enumeration ---------------------------------------------------------------

cdef struct Plan:
    int n
    int* cells
    int* off
    int* idx


cdef int _plan(const unsigned char* g, int nr, int nc, Plan* pl) except -1:
    cdef int i, r, c, r1, c1, k, t, total = 0
    pl.n = 0
    for i in range(nr * nc):
        if g[i] != HOLE_:
            pl.n += 1
    pl.cells = <int*>malloc((pl.n + 1) * sizeof(int))
    pl.off = <int*>malloc((pl.n + 1) * sizeof(int))
    if pl.cells == NULL or pl.off == NULL:
        raise MemoryError()
    k = 0
    for i in range(nr * nc):
        if g[i] == HOLE_:
            continue
        pl.cells[k] = i
        r = i // nc
        c = i % nc
        pl.off[k] = total
        for r1 in range(r):
            if g[r1 * nc + c] == HOLE_:
                continue
            for c1 in range(c):
                if g[r1 * nc + c1] != HOLE_ and g[r * nc + c1] != HOLE_:
                    total += 1
        k += 1
    pl.off[pl.n] = total
    pl.idx = <int*>malloc((3 * total + 1) * sizeof(int))
    if pl.idx == NULL:
        raise MemoryError()
    t = 0
    for k in range(pl.n):
        i = pl.cells[k]
        r = i // nc
        c = i % nc
        for r1 in range(r):
            if g[r1 * nc + c] == HOLE_:
                continue
            for c1 in range(c):
                if g[r1 * nc + c1] != HOLE_ and g[r * nc + c1] != HOLE_:
                    pl.idx[3 * t] = r1 * nc + c1
                    pl.idx[3 * t + 1] = r1 * nc + c
                    pl.idx[3 * t + 2] = r * nc + c1
                    t += 1
    return 0


cdef void _unplan(Plan* pl) noexcept:
    free(pl.cells)
    free(pl.off)
    free(pl.idx)


cdef struct Walk:
    unsigned char* w
    Plan* pl
    int patmask
    long long* counts


cdef int _rec(Walk* ctx, int k, uint64_t code, int ones, list out) except -1:
    cdef Plan* pl = ctx.pl
    cdef int i, v, t, ok
    cdef unsigned char* w = ctx.w
    if k == pl.n:
        if out is not None:
            out.append(code)
        else:
            ctx.counts[ones] += 1
        return 0
    i = pl.cells[k]
    for v in range(2):
        ok = 1
        for t in range(pl.off[k], pl.off[k + 1]):
            if (ctx.patmask >> (w[pl.idx[3 * t]] << 3 | w[pl.idx[3 * t + 1]] << 2
                                | w[pl.idx[3 * t + 2]] << 1 | v)) & 1:
                ok = 0
                break
        if ok:
            w[i] = v
            _rec(ctx, k + 1, code | ((<uint64_t>v) << k), ones + v, out)
    w[i] = 0
    return 0


cdef object _walk(const unsigned char* g, int nr, int nc, int patmask, bint collect):
    cdef Plan pl
    cdef Walk ctx
    cdef list out = [] if collect else None
    cdef long long* counts = NULL
    cdef unsigned char* w = <unsigned char*>malloc(nr * nc + 1)
    if w == NULL:
        raise MemoryError()
    memcpy(w, g, nr * nc)
    pl.cells = NULL
    pl.off = NULL
    pl.idx = NULL
    try:
        _plan(g, nr, nc, &pl)
        counts = <long long*>malloc((pl.n + 1) * sizeof(long long))
        if counts == NULL:
            raise MemoryError()
        for i in range(pl.n + 1):
            counts[i] = 0
        ctx.w = w
        ctx.pl = &pl
        ctx.patmask = patmask
        ctx.counts = counts
        _rec(&ctx, 0, 0, 0, out)
        if collect:
            return out
        return [counts[i] for i in range(pl.n + 1)]
    finally:
        free(w)
        free(counts)
        _unplan(&pl)


def avoiding_codes(unsigned char[::1] g, int nr, int nc, int patmask):
    _check_dims(nr, nc)
    if nr * nc == 0:
        return [0]
    return _walk(&g[0], nr, nc, patmask, True)


def count_by_ones(unsigned char[::1] g, int nr, int nc, int patmask):
    _check_dims(nr, nc)
    if nr * nc == 0:
        return [1]
    return _walk(&g[0], nr, nc, patmask, False)


cdef void _decode(unsigned char* w, const unsigned char* g, int size, uint64_t code) noexcept nogil:
    cdef int i, k = 0
    for i in range(size):
        if g[i] == HOLE_:
            w[i] = HOLE_
        else:
            w[i] = (code >> k) & 1
            k += 1


cdef uint64_t _encode(const unsigned char* w, int size) noexcept nogil:
    cdef uint64_t code = 0
    cdef int i, k = 0
    for i in range(size):
        if w[i] != HOLE_:
            code |= (<uint64_t>w[i]) << k
            k += 1
    return code


def decode(unsigned char[::1] g, int nr, int nc, uint64_t code):
    w = bytearray(nr * nc)
    cdef unsigned char[::1] wv = w
    if nr * nc:
        _decode(&wv[0], &g[0], nr * nc, code)
    return w


def encode(unsigned char[::1] g, int nr, int nc):
    if nr * nc == 0:
        return 0
    return _encode(&g[0], nr * nc)


cdef void _stats(const unsigned char* g, int nr, int nc, uint64_t* out) noexcept nogil:
    cdef uint64_t zr = ((<uint64_t>1) << nr) - 1
    cdef uint64_t zc = ((<uint64_t>1) << nc) - 1
    cdef uint64_t restricted = 0, seen_one = 0
    cdef int r, c, v
    for r in range(nr):
        for c in range(nc):
            v = g[r * nc + c]
            if v == 1:
                zr &= ~((<uint64_t>1) << r)
                zc &= ~((<uint64_t>1) << c)
            elif v == 0 and (seen_one >> c) & 1:
                restricted |= (<uint64_t>1) << r
        for c in range(nc):
            if g[r * nc + c] == 1:
                seen_one |= (<uint64_t>1) << c
    out[0] = zr
    out[1] = zc
    out[2] = restricted


def row_col_stats(unsigned char[::1] g, int nr, int nc):
    cdef uint64_t out[3]
    if nr * nc == 0:
        return (((1 << nr) - 1), ((1 << nc) - 1), 0)
    _stats(&g[0], nr, nc, out)
    return (out[0], out[1], out[2])


def bijection_sweep(unsigned char[::1] g, int nr, int nc, bint dual):
    _check_dims(nr, nc)
    cdef int fwd = M_PHI2 if dual else M_PHI
    cdef int inv = M_PHI2_INV if dual else M_PHI_INV
    cdef int size = nr * nc
    cdef int trace[MAXD]
    cdef uint64_t before[3]
    cdef uint64_t after[3]
    cdef uint64_t code
    cdef unsigned char* w
    xs = avoiding_codes(g, nr, nc, XM)
    n_le = sum(count_by_ones(g, nr, nc, LEM))
    if size == 0:
        ok = len(xs) == n_le
        return (len(xs), n_le, len(xs), "" if ok else "count-mismatch", -1)
    images = set()
    failure = ""
    witness = -1
    w = <unsigned char*>malloc(size)
    if w == NULL:
        raise MemoryError()
    try:
        for pycode in xs:
            code = pycode
            _decode(w, &g[0], size, code)
            _stats(w, nr, nc, before)
            problem = ""
            try:
                _transform(w, nr, nc, fwd, trace)
                images.add(_encode(w, size))
                if _violation(w, nr, nc, LEM, NULL):
                    problem = "image-not-le"
                else:
                    _stats(w, nr, nc, after)
                    if after[1] != before[1] or (
                        after[2] != before[2] if dual else after[0] != before[0]
                    ):
                        problem = "statistics"
                _transform(w, nr, nc, inv, trace)
                if not problem and _encode(w, size) != code:
                    problem = "round-trip"
            except ValueError:
                problem = "rejected"
            if problem and not failure:
                failure = problem
                witness = pycode
    finally:
        free(w)
    if not failure and len(images) != len(xs):
        failure = "not-injective"
    if not failure and len(xs) != n_le:
        failure = "count-mismatch"
    return (len(xs), n_le, len(images), failure, witness)


cdef int _acyclic(const unsigned char* g, int nr, int nc, int* indeg, int* stack) noexcept nogil:
    cdef int nv = nr + nc
    cdef int r, c, v, u, top = 0, seen = 0
    for v in range(nv):
        indeg[v] = 0
    for r in range(nr):
        for c in range(nc):
            v = g[r * nc + c]
            if v == 0:
                indeg[nr + c] += 1
            elif v == 1:
                indeg[r] += 1
    for v in range(nv):
        if indeg[v] == 0:
            stack[top] = v
            top += 1
    while top:
        top -= 1
        u = stack[top]
        seen += 1
        if u < nr:
            for c in range(nc):
                if g[u * nc + c] == 0:
                    indeg[nr + c] -= 1
                    if indeg[nr + c] == 0:
                        stack[top] = nr + c
                        top += 1
        else:
            c = u - nr
            for r in range(nr):
                if g[r * nc + c] == 1:
                    indeg[r] -= 1
                    if indeg[r] == 0:
                        stack[top] = r
                        top += 1
    return seen == nv


def acyclic(unsigned char[::1] g, int nr, int nc):
    _check_dims(nr, nc)
    cdef int indeg[2 * MAXD]
    cdef int stack[2 * MAXD]
    if nr * nc == 0:
        return True
    return bool(_acyclic(&g[0], nr, nc, indeg, stack))


def orientation_sweep(unsigned char[::1] g, int nr, int nc):
    _check_dims(nr, nc)
    cdef int indeg[2 * MAXD]
    cdef int stack[2 * MAXD]
    cdef int size = nr * nc
    cdef int n = 0, i, is_x, is_ac
    cdef uint64_t code, total
    cdef long long n_x = 0, n_ac = 0
    cdef long long mismatch = -1
    cdef unsigned char* w
    for i in range(size):
        if g[i] != HOLE_:
            n += 1
    if n > 40:
        raise ValueError(f"{n} cells is beyond exhaustive orientation range")
    if size == 0:
        return (1, 1, 1, -1)
    total = (<uint64_t>1) << n
    w = <unsigned char*>malloc(size)
    if w == NULL:
        raise MemoryError()
    try:
        with nogil:
            code = 0
            while code < total:
                _decode(w, &g[0], size, code)
                is_x = not _violation(w, nr, nc, XM, NULL)
                is_ac = _acyclic(w, nr, nc, indeg, stack)
                n_x += is_x
                n_ac += is_ac
                if is_x != is_ac and mismatch < 0:
                    mismatch = code
                code += 1
    finally:
        free(w)
    return (total, n_x, n_ac, mismatch)
