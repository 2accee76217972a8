"""Pure-Python grid kernels.

This is the reference implementation; ``_core.pyx`` mirrors it line for line
in typed Cython.  A grid is a flat ``bytearray`` of ``nrows * ncols`` bytes,
row-major with row 0 on top, holding 0, 1 or ``HOLE``.  Column and row
indices are 0-based here; the public modules translate to 1-based.

Patterns are passed as a 16-bit mask: bit ``a<<3 | b<<2 | c<<1 | d`` is set
when the 2x2 block ``[[a, b], [c, d]]`` is forbidden.
"""

HOLE = 2

PHI, PHI_INV, PHI2, PHI2_INV = 0, 1, 2, 3

MAX_DIM = 62


def _check_dims(nr, nc):
    if nr > MAX_DIM or nc > MAX_DIM:
        raise ValueError(f"grid {nr}x{nc} exceeds {MAX_DIM}x{MAX_DIM}")


def violation(g, nr, nc, patmask):
    """Least (r1, r2, c1, c2, code) with a forbidden block, or None."""
    for r1 in range(nr):
        o1 = r1 * nc
        for r2 in range(r1 + 1, nr):
            o2 = r2 * nc
            for c1 in range(nc):
                a = g[o1 + c1]
                c = g[o2 + c1]
                if a == HOLE or c == HOLE:
                    continue
                for c2 in range(c1 + 1, nc):
                    b = g[o1 + c2]
                    d = g[o2 + c2]
                    if b == HOLE or d == HOLE:
                        continue
                    code = a << 3 | b << 2 | c << 1 | d
                    if patmask >> code & 1:
                        return (r1, r2, c1, c2, code)
    return None


# -- bottom-anchored structure ------------------------------------------------

def _structure(g, nc, b):
    """Columns meeting row ``b``, their row masks (rows <= b) and band anchors.

    Raises ValueError unless the row masks are nested left to right, which is
    what ⌐-completeness guarantees for the cells above a bottom row.
    """
    cols = [c for c in range(nc) if g[b * nc + c] != HOLE]
    masks = []
    for c in cols:
        m = 0
        for r in range(b + 1):
            if g[r * nc + c] != HOLE:
                m |= 1 << r
        masks.append(m)
    for p in range(len(cols) - 1):
        if masks[p + 1] & ~masks[p]:
            raise ValueError(
                f"column {cols[p + 1]} reaches a row that column {cols[p]} "
                "misses: shape is not ⌐-complete"
            )
    last = len(cols) - 1
    anchors = [p for p in range(len(cols)) if p == last or masks[p] != masks[p + 1]]
    return cols, masks, anchors


def _count(g, nc, c, mask, v):
    n = 0
    while mask:
        low = mask & -mask
        if g[(low.bit_length() - 1) * nc + c] == v:
            n += 1
        mask ^= low
    return n


def _band_pivots(g, nc, b, cols, anchors, masks, dual):
    out = []
    for a in anchors:
        rows = masks[a]
        best = -1
        score = -1
        for p in range(a + 1):
            c = cols[p]
            bit = g[b * nc + c]
            if dual:
                if bit != 0:
                    continue
                s = _count(g, nc, c, rows, 1)
                if s == 0:
                    continue
            else:
                if bit != 1:
                    continue
                s = _count(g, nc, c, rows, 0)
            if s > score:
                best, score = p, s
        out.append(best)
    return out


def _candidates(piv, anchors):
    return [
        (m, p) for m, p in enumerate(piv)
        if p >= 0 and (m == 0 or p > anchors[m - 1])
    ]


def _band_of(p, anchors):
    for m, a in enumerate(anchors):
        if p <= a:
            return m
    raise AssertionError("position beyond last anchor")


def pivot_report(g, nr, nc, b, dual):
    """Pivot data for the filling of rows ``0..b``.

    Returns ``(index, band, candidates, band_pivots, anchors)`` with column
    indices; ``index``/``band`` are -1 when there is no pivot.
    """
    _check_dims(nr, nc)
    cols, masks, anchors = _structure(g, nc, b)
    if not cols:
        return (-1, -1, [], [], [])
    piv = _band_pivots(g, nc, b, cols, anchors, masks, dual)
    cands = _candidates(piv, anchors)
    index, band = -1, -1
    if cands:
        band, p = cands[-1]
        index = cols[p]
    return (
        index,
        band,
        [(m, cols[p]) for m, p in cands],
        [cols[p] if p >= 0 else -1 for p in piv],
        [cols[a] for a in anchors],
    )


def _forward(g, nc, b, cols, masks, j, dual):
    J = cols[j]
    below = 1 << b
    for p in range(j):
        g[b * nc + cols[p]] = 0
    for p in range(j + 1, len(cols)):
        c = cols[p]
        rows = masks[p]
        equal = True
        nonzero = False
        ref_nonzero = False
        single = g[b * nc + c] == 1
        m = rows
        while m:
            low = m & -m
            o = (low.bit_length() - 1) * nc
            v = g[o + c]
            if v != g[o + J]:
                equal = False
            if g[o + J]:
                ref_nonzero = True
            if v:
                nonzero = True
                if low != below:
                    single = False
            m ^= low
        # a lone bottom 1 is how copies of the pivot are encoded, so it may
        # only occur on a column the inverse would rebuild identically
        if single and (ref_nonzero if dual else not equal):
            raise ValueError(
                f"column {c} holds a single bottom 1 but differs from pivot "
                f"column {J}; input is not an X-diagram"
            )
        if equal and (nonzero or not dual):
            m = rows & ~below
            while m:
                low = m & -m
                g[(low.bit_length() - 1) * nc + c] = 0
                m ^= low
            g[b * nc + c] = 1
        elif nonzero:
            g[b * nc + c] = 1


def _inverse(g, nc, b, cols, masks, anchors, j, dual):
    J = cols[j]
    below = 1 << b
    band_rows = masks[anchors[_band_of(j, anchors)]] & ~below
    if dual:
        ref = _count(g, nc, J, band_rows, 1)
        for p in range(j):
            g[b * nc + cols[p]] = 1 if _count(g, nc, cols[p], band_rows, 1) >= ref else 0
    else:
        ref = _count(g, nc, J, band_rows, 0)
        for p in range(j):
            g[b * nc + cols[p]] = 1 if _count(g, nc, cols[p], band_rows, 0) < ref else 0
    for p in range(j + 1, len(cols)):
        c = cols[p]
        above = masks[p] & ~below
        ones = _count(g, nc, c, above, 1)
        ref_ones = _count(g, nc, J, above, 1)
        bottom = g[b * nc + c]
        if ones == 0 and bottom == 1 and (ref_ones > 0 or not dual):
            m = masks[p]
            while m:
                low = m & -m
                o = (low.bit_length() - 1) * nc
                g[o + c] = g[o + J]
                m ^= low
        elif ones == 0 and bottom == 0:
            continue
        elif dual:
            g[b * nc + c] = 1 if ones >= ref_ones else 0
        else:
            g[b * nc + c] = 1 if ones > ref_ones else 0


def step(g, nr, nc, b, mode):
    """Apply one φ-type map in place to rows ``0..b``; returns the pivot column or -1."""
    _check_dims(nr, nc)
    cols, masks, anchors = _structure(g, nc, b)
    if not cols:
        return -1
    dual = mode in (PHI2, PHI2_INV)
    if mode in (PHI, PHI2):
        cands = _candidates(_band_pivots(g, nc, b, cols, anchors, masks, dual), anchors)
        if not cands:
            return -1
        j = cands[-1][1]
        _forward(g, nc, b, cols, masks, j, dual)
        return cols[j]
    j = -1
    if dual:
        for p in range(len(cols) - 1, -1, -1):
            c = cols[p]
            if g[b * nc + c] == 0 and _count(g, nc, c, masks[p], 1):
                j = p
                break
    else:
        for p, c in enumerate(cols):
            if g[b * nc + c] == 1:
                j = p
                break
    if j < 0:
        return -1
    _inverse(g, nc, b, cols, masks, anchors, j, dual)
    return cols[j]


def transform(g, nr, nc, mode):
    """Iterate ``step`` over all rows; forward maps go bottom-up, inverses top-down.

    Returns the pivot of every step in application order.
    """
    order = range(nr - 1, -1, -1) if mode in (PHI, PHI2) else range(nr)
    return [step(g, nr, nc, b, mode) for b in order]


# -- enumeration ---------------------------------------------------------------

def _cells_and_checks(g, nr, nc):
    cells = [i for i in range(nr * nc) if g[i] != HOLE]
    checks = []
    for i in cells:
        r, c = divmod(i, nc)
        tri = []
        for r1 in range(r):
            if g[r1 * nc + c] == HOLE:
                continue
            for c1 in range(c):
                if g[r1 * nc + c1] != HOLE and g[r * nc + c1] != HOLE:
                    tri.append((r1 * nc + c1, r1 * nc + c, r * nc + c1))
        checks.append(tri)
    return cells, checks


def _dfs(g, nr, nc, patmask, visit):
    cells, checks = _cells_and_checks(g, nr, nc)
    n = len(cells)
    w = bytearray(g)

    def rec(k, code, ones):
        if k == n:
            visit(code, ones)
            return
        i = cells[k]
        tri = checks[k]
        for v in (0, 1):
            for a, b, c in tri:
                if patmask >> (w[a] << 3 | w[b] << 2 | w[c] << 1 | v) & 1:
                    break
            else:
                w[i] = v
                rec(k + 1, code | v << k, ones + v)
        w[i] = 0

    rec(0, 0, 0)
    return n


def avoiding_codes(g, nr, nc, patmask):
    """Codes (bit k = k-th cell, row-major) of every filling avoiding ``patmask``."""
    _check_dims(nr, nc)
    out = []
    _dfs(g, nr, nc, patmask, lambda code, ones: out.append(code))
    return out


def count_by_ones(g, nr, nc, patmask):
    _check_dims(nr, nc)
    counts = {}

    def visit(code, ones):
        counts[ones] = counts.get(ones, 0) + 1

    n = _dfs(g, nr, nc, patmask, visit)
    return [counts.get(j, 0) for j in range(n + 1)]


def decode(g, nr, nc, code):
    """Copy of the template ``g`` filled from ``code``."""
    w = bytearray(g)
    k = 0
    for i in range(nr * nc):
        if w[i] != HOLE:
            w[i] = code >> k & 1
            k += 1
    return w


def encode(g, nr, nc):
    code = 0
    k = 0
    for i in range(nr * nc):
        v = g[i]
        if v != HOLE:
            code |= v << k
            k += 1
    return code


def row_col_stats(g, nr, nc):
    """Bitmasks (zero_rows, zero_cols, restricted_rows)."""
    zr = (1 << nr) - 1
    zc = (1 << nc) - 1
    restricted = 0
    seen_one = 0  # columns with a 1 in some earlier row
    for r in range(nr):
        for c in range(nc):
            v = g[r * nc + c]
            if v == 1:
                zr &= ~(1 << r)
                zc &= ~(1 << c)
            elif v == 0 and seen_one >> c & 1:
                restricted |= 1 << r
        for c in range(nc):
            if g[r * nc + c] == 1:
                seen_one |= 1 << c
    return zr, zc, restricted


X_MASK = 1 << 0b1001 | 1 << 0b0110
LE_MASK = 1 << 0b1110 | 1 << 0b0110


def bijection_sweep(g, nr, nc, dual):
    """Exhaustive check of Φ (or Φ₂) on every X-filling of the template ``g``.

    Returns ``(n_x, n_le, n_images, failure, witness)``; ``failure`` is '' when
    every check passed, else the first failing check, with ``witness`` the
    code of the offending X-filling (-1 for global failures).
    """
    _check_dims(nr, nc)
    fwd, inv = (PHI2, PHI2_INV) if dual else (PHI, PHI_INV)
    xs = avoiding_codes(g, nr, nc, X_MASK)
    n_le = sum(count_by_ones(g, nr, nc, LE_MASK))
    images = set()
    failure, witness = "", -1
    for code in xs:
        w = decode(g, nr, nc, code)
        zr, zc, rr = row_col_stats(w, nr, nc)
        problem = ""
        try:
            transform(w, nr, nc, fwd)
            images.add(encode(w, nr, nc))
            if violation(w, nr, nc, LE_MASK) is not None:
                problem = "image-not-le"
            else:
                zr2, zc2, rr2 = row_col_stats(w, nr, nc)
                if zc2 != zc or (rr2 != rr if dual else zr2 != zr):
                    problem = "statistics"
            transform(w, nr, nc, inv)
            if not problem and encode(w, nr, nc) != code:
                problem = "round-trip"
        except ValueError:
            problem = "rejected"
        if problem and not failure:
            failure, witness = problem, code
    if not failure and len(images) != len(xs):
        failure = "not-injective"
    if not failure and len(xs) != n_le:
        failure = "count-mismatch"
    return (len(xs), n_le, len(images), failure, witness)


def acyclic(g, nr, nc):
    """Acyclicity of the orientation read off a filling: 0 is row->col, 1 col->row."""
    nv = nr + nc
    indeg = [0] * nv
    out = [[] for _ in range(nv)]
    for r in range(nr):
        for c in range(nc):
            v = g[r * nc + c]
            if v == HOLE:
                continue
            if v == 0:
                out[r].append(nr + c)
                indeg[nr + c] += 1
            else:
                out[nr + c].append(r)
                indeg[r] += 1
    stack = [v for v in range(nv) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for w in out[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == nv


def orientation_sweep(g, nr, nc):
    """Over all fillings: ``(n_total, n_x, n_acyclic, first_mismatch_code or -1)``."""
    _check_dims(nr, nc)
    cells = [i for i in range(nr * nc) if g[i] != HOLE]
    n = len(cells)
    w = bytearray(g)
    n_x = n_ac = 0
    mismatch = -1
    for code in range(1 << n):
        for k, i in enumerate(cells):
            w[i] = code >> k & 1
        is_x = violation(w, nr, nc, X_MASK) is None
        is_ac = acyclic(w, nr, nc)
        n_x += is_x
        n_ac += is_ac
        if is_x != is_ac and mismatch < 0:
            mismatch = code
    return (1 << n, n_x, n_ac, mismatch)
