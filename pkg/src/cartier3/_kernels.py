"""Hot enumeration kernels, numba-compiled with a pure-NumPy fallback.

Every kernel walks a contiguous range of base-q codes with an odometer,
so a sweep can be partitioned into chunks whose partial counters merge by
integer addition; results are identical for any chunking.  Field
arithmetic is table-driven (int64 lookup tables from Field.np_tables)
which keeps one code path correct for prime and non-prime q alike.

The backend is chosen once at import from CARTIER3_BACKEND:
  "numba"  force JIT (ImportError if numba is missing)
  "numpy"  run the same functions as plain Python/NumPy
  unset    numba when importable, fallback otherwise
Under numba each kernel still exposes the interpreted version as
kernel.py_func, which the tests use to cross-check the two backends.
"""

import os

import numpy as np

_env = os.environ.get("CARTIER3_BACKEND", "").strip().lower()
if _env in ("", "auto"):
    try:
        from numba import njit

        USE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a hard dependency here
        USE_NUMBA = False
elif _env == "numba":
    from numba import njit

    USE_NUMBA = True
elif _env == "numpy":
    USE_NUMBA = False
else:
    raise RuntimeError(f"CARTIER3_BACKEND must be 'numba' or 'numpy', got {_env!r}")

BACKEND = "numba" if USE_NUMBA else "numpy"

if USE_NUMBA:

    def _jit(fn):
        return njit(cache=True, nogil=True)(fn)

else:

    def _jit(fn):
        return fn


def interpreted(fn):
    """The uncompiled version of a kernel (the kernel itself on numpy)."""
    return getattr(fn, "py_func", fn)


def run_chunked(kernel, args, total, workers):
    """Run a [start, stop)-style kernel over [0, total) in `workers`
    contiguous chunks and return the per-chunk results in chunk order.

    Chunk boundaries depend only on (total, workers) and every kernel is a
    pure function of its range, so merged results are identical for any
    worker count; with numba the kernels release the GIL and the chunks
    genuinely overlap.
    """
    if workers < 1:
        raise ValueError("need at least one worker")
    if workers == 1 or total == 0:
        return [kernel(*args, 0, total)]
    bounds = [(i * total) // workers for i in range(workers + 1)]
    spans = [(bounds[i], bounds[i + 1]) for i in range(workers)]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(kernel, *args, a, b) for a, b in spans]
        return [f.result() for f in futures]


# -- polynomial helpers on digit buffers --------------------------------------


@_jit
def _deg(a, n):
    for i in range(n - 1, -1, -1):
        if a[i] != 0:
            return i
    return -1


@_jit
def _gcd_into_u(u, du, v, dv, add, neg, mul, inv):
    """gcd of (u, du) and (v, dv); result left in u, v destroyed.

    Returns the gcd degree (-1 for gcd(0,0)); the result is not normalized
    monic, only its degree matters to callers.
    """
    while dv >= 0:
        linv = inv[v[dv]]
        for t in range(du, dv - 1, -1):
            cu = u[t]
            if cu != 0:
                s = mul[cu, linv]
                off = t - dv
                for j in range(dv + 1):
                    u[off + j] = add[u[off + j], neg[mul[s, v[j]]]]
        du = -1
        for i in range(dv - 1, -1, -1):
            if u[i] != 0:
                du = i
                break
        for i in range(dv + 1):
            t = u[i]
            u[i] = v[i]
            v[i] = t
        t = du
        du = dv
        dv = t
    return du


@_jit
def _rank(M, nr, nc, add, neg, mul, inv):
    rank = 0
    for col in range(nc):
        prow = -1
        for r in range(rank, nr):
            if M[r, col] != 0:
                prow = r
                break
        if prow < 0:
            continue
        if prow != rank:
            for j in range(nc):
                t = M[rank, j]
                M[rank, j] = M[prow, j]
                M[prow, j] = t
        linv = inv[M[rank, col]]
        for j in range(col, nc):
            M[rank, j] = mul[M[rank, j], linv]
        for r in range(rank + 1, nr):
            s = M[r, col]
            if s != 0:
                for j in range(col, nc):
                    M[r, j] = add[M[r, j], neg[mul[s, M[rank, j]]]]
        rank += 1
        if rank == nr:
            break
    return rank


@_jit
def _nullspace(M, nr, nc, add, neg, mul, inv, piv, basis):
    """Canonical nullspace basis via full RREF.

    piv is an int64[nc] scratch; basis is a flat int64 buffer of at least
    nc*nc entries receiving the basis vectors row-major.  Returns the
    nullspace dimension.
    """
    rank = 0
    for col in range(nc):
        piv[col] = -1
        prow = -1
        for r in range(rank, nr):
            if M[r, col] != 0:
                prow = r
                break
        if prow < 0:
            continue
        if prow != rank:
            for j in range(nc):
                t = M[rank, j]
                M[rank, j] = M[prow, j]
                M[prow, j] = t
        linv = inv[M[rank, col]]
        for j in range(col, nc):
            M[rank, j] = mul[M[rank, j], linv]
        for r in range(nr):
            if r != rank and M[r, col] != 0:
                s = M[r, col]
                for j in range(col, nc):
                    M[r, j] = add[M[r, j], neg[mul[s, M[rank, j]]]]
        piv[col] = rank
        rank += 1
        if rank == nr:
            for c2 in range(col + 1, nc):
                piv[c2] = -1
            break
    dim = 0
    for fcol in range(nc):
        if piv[fcol] >= 0:
            continue
        off = dim * nc
        for j in range(nc):
            basis[off + j] = 0
        basis[off + fcol] = 1
        for c in range(nc):
            r = piv[c]
            if r >= 0:
                basis[off + c] = neg[M[r, fcol]]
        dim += 1
    return dim


@_jit
def _build_level_matrix(A, stride, adeg, l, M):
    """Linear system for solutions x of x1*A1 + x2*A2 + x3*A3 = 0 with
    deg(x_i) <= l.  Rows index output coefficients, columns index the
    unknown coefficients grouped per component."""
    nr = adeg + l + 1
    nc = 3 * (l + 1)
    for r in range(nr):
        for c in range(nc):
            M[r, c] = 0
    for i in range(3):
        base = i * (l + 1)
        for j in range(l + 1):
            for t in range(adeg + 1):
                M[j + t, base + j] = A[i * stride + t]
    return nr, nc


@_jit
def _mu1_with_basis(A, stride, adeg, lmax, M, piv, basis, add, neg, mul, inv):
    """Smallest l <= lmax admitting a nonzero bounded-degree solution.

    Returns (l, dim) with the nullspace basis for that level left in
    `basis`, or (-1, 0) when no level up to lmax is solvable.
    """
    for l in range(lmax + 1):
        nr, nc = _build_level_matrix(A, stride, adeg, l, M)
        dim = _nullspace(M, nr, nc, add, neg, mul, inv, piv, basis)
        if dim > 0:
            return l, dim
    return -1, 0


@_jit
def _solution_profile(vec, off, l):
    """(deg P2 == l, deg P3 == l > deg P1, deg P2) flags for one solution."""
    w = l + 1
    e1 = -1
    e2 = -1
    e3 = -1
    for j in range(l, -1, -1):
        if vec[off + j] != 0:
            e1 = j
            break
    for j in range(l, -1, -1):
        if vec[off + w + j] != 0:
            e2 = j
            break
    for j in range(l, -1, -1):
        if vec[off + 2 * w + j] != 0:
            e3 = j
            break
    tf = 1 if e2 == l else 0
    tp = 1 if (e3 == l and e1 < l and e2 < l) else 0
    return tf, tp


# -- a-number oracles on digit buffers ----------------------------------------


@_jit
def _cube_split_digits(f, n, proot, c0, c1, c2, clen):
    for i in range(clen):
        c0[i] = 0
        c1[i] = 0
        c2[i] = 0
    for i in range(n):
        a = f[i]
        r = i % 3
        if r == 0:
            c0[i // 3] = proot[a]
        elif r == 1:
            c1[(i - 1) // 3] = proot[a]
        else:
            c2[(i - 2) // 3] = proot[a]


@_jit
def _cartier_rank(c0, c1, c2, clen, g, M, add, neg, mul, inv):
    """Rank of the g x g matrix of the cube-part action on the monomial
    differential basis.  Raises if an image escapes the basis, which the
    degree bounds rule out for cubefree inputs."""
    for r in range(g):
        for c in range(g):
            M[r, c] = 0
    for j in range(g):
        r = j % 3
        t = j // 3
        if r == 0:
            src = c2
        elif r == 1:
            src = c1
        else:
            src = c0
        for s in range(clen):
            cc = src[s]
            if cc != 0:
                row = t + s
                if row >= g:
                    raise ValueError("cube-part action escaped the holomorphic basis")
                M[row, j] = cc
    return _rank(M, g, g, add, neg, mul, inv)


@_jit
def _anum_kernel(c0, c1, c2, clen, g, M, add, neg, mul, inv):
    if g == 0:
        return 0
    return g - _cartier_rank(c0, c1, c2, clen, g, M, add, neg, mul, inv)


@_jit
def _anum_fundeq(c0, c1, c2, clen, g, M, add, neg, mul, inv):
    """Nullity of the constraint system on the cube parts of Q.

    Unknown blocks: coefficients of the X^2-, X-, and constant cube parts
    of Q, with degree caps (g-3)/3, (g-2)/3, (g-1)/3; one row per output
    coefficient of the pairing with the cube parts of f.
    """
    if g == 0:
        return 0
    n2 = (g - 3) // 3 + 1
    if n2 < 0:
        n2 = 0
    n1 = (g - 2) // 3 + 1
    if n1 < 0:
        n1 = 0
    n0 = (g - 1) // 3 + 1
    if n0 < 0:
        n0 = 0
    nc = n0 + n1 + n2
    nr = clen + (g - 1) // 3 + 1
    for r in range(nr):
        for c in range(nc):
            M[r, c] = 0
    # block of columns multiplying c0(f) by the X^2 part of Q
    col = 0
    for j in range(n2):
        for s in range(clen):
            M[j + s, col] = c0[s]
        col += 1
    for j in range(n1):
        for s in range(clen):
            M[j + s, col] = c1[s]
        col += 1
    for j in range(n0):
        for s in range(clen):
            M[j + s, col] = c2[s]
        col += 1
    return nc - _rank(M, nr, nc, add, neg, mul, inv)


@_jit
def _anum_height(
    c0, c1, c2, clen, g, eps, Atrip, M, piv, basis, add, neg, mul, inv
):
    """Height-formula a-number.

    Returns (a, mu1, case, dim) where mu1 = -1 encodes "first minimum
    exceeds (g-1)/3" (so a = 0), case is 1 when one of the three excluded
    degree situations fires, and dim is the solution-space dimension at
    the minimal level (1 whenever the theory applies).
    """
    if g == 0:
        return 0, -1, 0, 0
    m = (g - 1) // 3
    for s in range(clen):
        Atrip[s] = c0[s]
        Atrip[clen + s] = c1[s]
        Atrip[2 * clen + s] = c2[s]
    l, dim = _mu1_with_basis(
        Atrip, clen, clen - 1, m, M, piv, basis, add, neg, mul, inv
    )
    if l < 0:
        return 0, -1, 0, 0
    nc = 3 * (l + 1)
    w = l + 1
    e1 = -1
    e2 = -1
    for j in range(l, -1, -1):
        if basis[j] != 0:
            e1 = j
            break
    for j in range(l, -1, -1):
        if basis[w + j] != 0:
            e2 = j
            break
    gm = g % 3
    case = 0
    if gm == 1 and eps == 2 and e1 == l:
        case = 1
    elif gm == 1 and eps == 1 and e2 == l:
        case = 1
    elif gm == 2 and eps == 1 and e1 == l:
        case = 1
    return m - l + 1 - case, l, case, dim


# -- sweep kernels -------------------------------------------------------------


@_jit
def census_chunk(q, p, d, g, add, neg, mul, inv, proot, start, stop):
    """Tally a-numbers of monic degree-d polynomials with codes in
    [start, stop).

    Output layout: [cubefree counts a=0..g, squarefree counts a=0..g,
    cubefree total, squarefree total].
    """
    out = np.zeros(2 * (g + 1) + 2, dtype=np.int64)
    stride = d + 1
    digits = np.zeros(stride, dtype=np.int64)
    digits[d] = 1
    c = start
    for i in range(d):
        digits[i] = c % q
        c //= q
    clen = d // 3 + 1
    c0 = np.zeros(clen, dtype=np.int64)
    c1 = np.zeros(clen, dtype=np.int64)
    c2 = np.zeros(clen, dtype=np.int64)
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    gdim = g if g > 0 else 1
    M = np.zeros((gdim, gdim), dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        _cube_split_digits(digits, d + 1, proot, c0, c1, c2, clen)
        e0 = _deg(c0, clen)
        e1 = _deg(c1, clen)
        e2 = _deg(c2, clen)
        for i in range(clen):
            u[i] = c0[i]
            v[i] = c1[i]
        dg = _gcd_into_u(u, e0, v, e1, add, neg, mul, inv)
        if dg != 0:
            for i in range(clen):
                v[i] = c2[i]
            dg = _gcd_into_u(u, dg, v, e2, add, neg, mul, inv)
        if dg != 0:
            continue  # not cubefree
        # squarefree: derivative then one gcd
        for i in range(stride):
            v[i] = 0
        for i in range(1, d + 1):
            s = i % p
            if s != 0:
                v[i - 1] = mul[digits[i], s]
        dfp = _deg(v, d)
        sf = False
        if dfp >= 0:
            for i in range(stride):
                u[i] = digits[i]
            sf = _gcd_into_u(u, d, v, dfp, add, neg, mul, inv) == 0
        a = _anum_kernel(c0, c1, c2, clen, g, M, add, neg, mul, inv)
        out[a] += 1
        out[2 * (g + 1)] += 1
        if sf:
            out[g + 1 + a] += 1
            out[2 * (g + 1) + 1] += 1
    return out


@_jit
def poly_counts_chunk(q, p, d, add, neg, mul, inv, proot, start, stop):
    """Count cubefree and squarefree monic degree-d polynomials with codes
    in [start, stop); no a-number work, so this stays cheap for the larger
    cardinality checks."""
    out = np.zeros(2, dtype=np.int64)
    stride = d + 1
    digits = np.zeros(stride, dtype=np.int64)
    digits[d] = 1
    c = start
    for i in range(d):
        digits[i] = c % q
        c //= q
    clen = d // 3 + 1
    c0 = np.zeros(clen, dtype=np.int64)
    c1 = np.zeros(clen, dtype=np.int64)
    c2 = np.zeros(clen, dtype=np.int64)
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        # squarefree via gcd with the derivative
        for i in range(stride):
            v[i] = 0
        for i in range(1, d + 1):
            s = i % p
            if s != 0:
                v[i - 1] = mul[digits[i], s]
        dfp = _deg(v, d)
        sf = False
        if d == 0:
            sf = True
        elif dfp >= 0:
            for i in range(stride):
                u[i] = digits[i]
            sf = _gcd_into_u(u, d, v, dfp, add, neg, mul, inv) == 0
        if sf:
            # squarefree implies cubefree
            out[0] += 1
            out[1] += 1
            continue
        _cube_split_digits(digits, d + 1, proot, c0, c1, c2, clen)
        e0 = _deg(c0, clen)
        e1 = _deg(c1, clen)
        e2 = _deg(c2, clen)
        for i in range(clen):
            u[i] = c0[i]
            v[i] = c1[i]
        dg = _gcd_into_u(u, e0, v, e1, add, neg, mul, inv)
        if dg != 0:
            for i in range(clen):
                v[i] = c2[i]
            dg = _gcd_into_u(u, dg, v, e2, add, neg, mul, inv)
        if dg == 0:
            out[0] += 1
    return out


@_jit
def cross_oracle_chunk(q, d, g, eps, add, neg, mul, inv, proot, start, stop):
    """Compare the three a-number oracles on every monic cubefree f of
    degree d with code in [start, stop).

    Returns [checked, mismatches, first bad code (or -1),
    multi-witness count at the minimal level].
    """
    out = np.zeros(4, dtype=np.int64)
    out[2] = -1
    stride = d + 1
    digits = np.zeros(stride, dtype=np.int64)
    digits[d] = 1
    c = start
    for i in range(d):
        digits[i] = c % q
        c //= q
    clen = d // 3 + 1
    c0 = np.zeros(clen, dtype=np.int64)
    c1 = np.zeros(clen, dtype=np.int64)
    c2 = np.zeros(clen, dtype=np.int64)
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    gdim = g if g > 0 else 1
    Mk = np.zeros((gdim, gdim), dtype=np.int64)
    nrq = clen + (g - 1) // 3 + 2
    Mf = np.zeros((nrq if nrq > 1 else 1, gdim), dtype=np.int64)
    m = (g - 1) // 3 if g > 0 else 0
    nrh = clen + m + 1
    nch = 3 * (m + 1)
    Mh = np.zeros((nrh, nch), dtype=np.int64)
    piv = np.zeros(nch, dtype=np.int64)
    basis = np.zeros(nch * nch, dtype=np.int64)
    Atrip = np.zeros(3 * clen, dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        _cube_split_digits(digits, d + 1, proot, c0, c1, c2, clen)
        e0 = _deg(c0, clen)
        e1 = _deg(c1, clen)
        e2 = _deg(c2, clen)
        for i in range(clen):
            u[i] = c0[i]
            v[i] = c1[i]
        dg = _gcd_into_u(u, e0, v, e1, add, neg, mul, inv)
        if dg != 0:
            for i in range(clen):
                v[i] = c2[i]
            dg = _gcd_into_u(u, dg, v, e2, add, neg, mul, inv)
        if dg != 0:
            continue
        a1 = _anum_kernel(c0, c1, c2, clen, g, Mk, add, neg, mul, inv)
        a2 = _anum_fundeq(c0, c1, c2, clen, g, Mf, add, neg, mul, inv)
        a3, _, _, dim = _anum_height(
            c0, c1, c2, clen, g, eps, Atrip, Mh, piv, basis, add, neg, mul, inv
        )
        if dim > 1:
            out[3] += 1
        out[0] += 1
        if a1 != a2 or a1 != a3:
            out[1] += 1
            if out[2] < 0:
                out[2] = code
    return out


@_jit
def heights_sweep_chunk(q, m, add, neg, mul, inv, start, stop):
    """Classify ordered coprime triples (A1, A2, A3) of max degree m.

    Codes in [start, stop) range over all triples with each component of
    degree <= m, base-q digits, A1 low.  For each coprime triple of max
    degree exactly m the minimal solution height l of the orthogonality
    equation is found (l <= m//2 by Minkowski) together with the degree
    profile flags of the height-l solutions.

    Returns a flat int64 array: counters indexed by
    (((l*8 + Rmask)*2 + monic1)*2 + tflag)*2 + tpflag, followed by
    [coprime total, impossible-multiplicity count, no-solution count].
    """
    lmax = m // 2
    ncount = (lmax + 1) * 8 * 2 * 2 * 2
    out = np.zeros(ncount + 3, dtype=np.int64)
    stride = m + 1
    ndig = 3 * stride
    digits = np.zeros(ndig, dtype=np.int64)
    c = start
    for i in range(ndig):
        digits[i] = c % q
        c //= q
    nrmax = m + lmax + 1
    ncmax = 3 * (lmax + 1)
    M = np.zeros((nrmax, ncmax), dtype=np.int64)
    piv = np.zeros(ncmax, dtype=np.int64)
    basis = np.zeros(ncmax * ncmax, dtype=np.int64)
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    comb = np.zeros(ncmax, dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        d1 = _deg(digits[0:stride], stride)
        d2 = _deg(digits[stride : 2 * stride], stride)
        d3 = _deg(digits[2 * stride : 3 * stride], stride)
        dmax = d1
        if d2 > dmax:
            dmax = d2
        if d3 > dmax:
            dmax = d3
        if dmax != m:
            continue
        for i in range(stride):
            u[i] = digits[i]
            v[i] = digits[stride + i]
        dg = _gcd_into_u(u, d1, v, d2, add, neg, mul, inv)
        if dg != 0:
            for i in range(stride):
                v[i] = digits[2 * stride + i]
            dg = _gcd_into_u(u, dg, v, d3, add, neg, mul, inv)
        if dg != 0:
            continue
        l, dim = _mu1_with_basis(
            digits, stride, m, lmax, M, piv, basis, add, neg, mul, inv
        )
        if l < 0:
            out[ncount + 2] += 1
            continue
        nc = 3 * (l + 1)
        tf, tp = _solution_profile(basis, 0, l)
        if dim > 1:
            if dim > 2 or 2 * l < m:
                out[ncount + 1] += 1
            t1, t2 = _solution_profile(basis, nc, l)
            tf |= t1
            tp |= t2
            for alpha in range(q):
                for j in range(nc):
                    comb[j] = add[basis[j], mul[alpha, basis[nc + j]]]
                t1, t2 = _solution_profile(comb, 0, l)
                tf |= t1
                tp |= t2
        rmask = 0
        if d1 == m:
            rmask += 1
        if d2 == m:
            rmask += 2
        if d3 == m:
            rmask += 4
        monic1 = 1 if (d1 == m and digits[m] == 1) else 0
        idx = (((l * 8 + rmask) * 2 + monic1) * 2 + tf) * 2 + tp
        out[idx] += 1
        out[ncount] += 1
    return out


@_jit
def lines_chunk(q, n, k, add, neg, mul, inv, start, stop):
    """Count one-dimensional subspaces of height k in an n-space: coprime
    n-tuples of max degree exactly k, counted once per scalar class by
    requiring the first degree-k component to be monic."""
    count = 0
    stride = k + 1
    ndig = n * stride
    digits = np.zeros(ndig, dtype=np.int64)
    c = start
    for i in range(ndig):
        digits[i] = c % q
        c //= q
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    degs = np.zeros(n, dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        dmax = -1
        for i in range(n):
            di = _deg(digits[i * stride : (i + 1) * stride], stride)
            degs[i] = di
            if di > dmax:
                dmax = di
        if dmax != k:
            continue
        first = -1
        for i in range(n):
            if degs[i] == k:
                first = i
                break
        if digits[first * stride + k] != 1:
            continue
        dg = degs[0]
        for i in range(stride):
            u[i] = digits[i]
        for i2 in range(1, n):
            if dg == 0:
                break
            for i in range(stride):
                v[i] = digits[i2 * stride + i]
            dg = _gcd_into_u(u, dg, v, degs[i2], add, neg, mul, inv)
        if dg != 0:
            continue
        count += 1
    return np.array([count], dtype=np.int64)


@_jit
def minkowski_chunk(q, hmax, add, neg, mul, inv, start, stop):
    """Check mu1 + mu2 == height for every coprime triple with components
    of degree <= hmax.

    mu1 is the first solvable level; mu2 the first level whose solution
    space exceeds the multiples of the mu1 line.  Returns
    [checked, identity violations, mu1 > h/2 violations].
    """
    out = np.zeros(3, dtype=np.int64)
    stride = hmax + 1
    ndig = 3 * stride
    digits = np.zeros(ndig, dtype=np.int64)
    c = start
    for i in range(ndig):
        digits[i] = c % q
        c //= q
    nrmax = 2 * hmax + 1
    ncmax = 3 * (hmax + 1)
    M = np.zeros((nrmax, ncmax), dtype=np.int64)
    piv = np.zeros(ncmax, dtype=np.int64)
    basis = np.zeros(ncmax * ncmax, dtype=np.int64)
    u = np.zeros(stride, dtype=np.int64)
    v = np.zeros(stride, dtype=np.int64)
    for code in range(start, stop):
        if code > start:
            i = 0
            while True:
                digits[i] += 1
                if digits[i] < q:
                    break
                digits[i] = 0
                i += 1
        d1 = _deg(digits[0:stride], stride)
        d2 = _deg(digits[stride : 2 * stride], stride)
        d3 = _deg(digits[2 * stride : 3 * stride], stride)
        h = d1
        if d2 > h:
            h = d2
        if d3 > h:
            h = d3
        if h < 0:
            continue
        for i in range(stride):
            u[i] = digits[i]
            v[i] = digits[stride + i]
        dg = _gcd_into_u(u, d1, v, d2, add, neg, mul, inv)
        if dg != 0:
            for i in range(stride):
                v[i] = digits[2 * stride + i]
            dg = _gcd_into_u(u, dg, v, d3, add, neg, mul, inv)
        if dg != 0:
            continue
        mu1 = -1
        for l in range(h + 1):
            nr, nc = _build_level_matrix(digits, stride, h, l, M)
            dim = _nullspace(M, nr, nc, add, neg, mul, inv, piv, basis)
            if dim > 0:
                mu1 = l
                break
        mu2 = -1
        for l in range(mu1, h + 1):
            nr, nc = _build_level_matrix(digits, stride, h, l, M)
            dim = _nullspace(M, nr, nc, add, neg, mul, inv, piv, basis)
            if dim > l - mu1 + 1:
                mu2 = l
                break
        out[0] += 1
        if mu1 < 0 or mu2 < 0 or mu1 + mu2 != h:
            out[1] += 1
        if 2 * mu1 > h:
            out[2] += 1
    return out
