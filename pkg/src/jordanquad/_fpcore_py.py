"""Pure-Python mod-p kernels; the compiled module _fpcore mirrors these.

All three functions operate on plain ints modulo a small odd prime and are
the hot loops of the verification sweeps: exhaustive isotropic-vector
search and full projective sweeps of the source quadric and of the base
locus.  Semantics of every counter must stay identical between this module
and the Cython twin; tests compare the two directly.

Projective points are enumerated in canonical form, first nonzero
coordinate equal to 1, via an odometer on the trailing coordinates.
Composition-algebra products are table driven: e_i e_j = gamma[i*m+j]
e_{i XOR j}, conjugation negates coordinates 1..m-1.
"""


def isotropic_vector(p, coeffs):
    """First canonical projective vector v with sum coeffs[i] v_i^2 = 0
    (mod p), in (leading position, odometer) order; None if the form is
    anisotropic."""
    N = len(coeffs)
    for lead in range(N):
        tail_len = N - lead - 1
        tail = [0] * tail_len
        d0 = coeffs[lead] % p
        while True:
            s = d0
            for t in range(tail_len):
                x = tail[t]
                if x:
                    s += coeffs[lead + 1 + t] * x * x
            if s % p == 0:
                return [0] * lead + [1] + tail
            i = tail_len - 1
            while i >= 0:
                tail[i] += 1
                if tail[i] < p:
                    break
                tail[i] = 0
                i -= 1
            if i < 0:
                break
    return None


def _points(p, N):
    """Yield canonical projective representatives of P^{N-1}(F_p)."""
    point = [0] * N
    for lead in range(N):
        for i in range(N):
            point[i] = 0
        point[lead] = 1
        tail_len = N - lead - 1
        while True:
            yield point
            i = N - 1
            while i > lead:
                point[i] += 1
                if point[i] < p:
                    break
                point[i] = 0
                i -= 1
            if i == lead:
                break
            if tail_len == 0:
                break


def _cd_mul(p, m, gamma, x, xoff, y, yoff, conj_y, out):
    """out = (x block) * (conj? y block), coordinates mod p."""
    for k in range(m):
        out[k] = 0
    for s in range(m):
        xs = x[xoff + s]
        if not xs:
            continue
        for t in range(m):
            yt = y[yoff + t]
            if not yt:
                continue
            if conj_y and t:
                yt = p - yt
            k = s ^ t
            out[k] = (out[k] + xs * yt * gamma[s * m + t]) % p


def quadric_sweep(p, n, m, b, binv, pf, gamma, limit=-1):
    """Walk the canonical points of P(C^{n-1} x k) over F_p, restrict to
    the trace quadric, and verify the rank-one map pointwise.

    Returns (scanned, on_quadric, base_points, zslice_points,
    roundtrip_checked, roundtrip_fail, sym_fail, trace_fail, diag_fail,
    z1_flag_fail).  A nonnegative limit stops after that many points.
    """
    N = m * (n - 1) + 1
    scanned = on_quadric = base_points = zslice_points = 0
    roundtrip_checked = roundtrip_fail = 0
    sym_fail = trace_fail = diag_fail = z1_flag_fail = 0
    cc = [0] * (n * m)          # all n blocks, scalar block embedded
    mat = [0] * (n * n * m)
    tmp = [0] * m
    for c in _points(p, N):
        if limit >= 0 and scanned >= limit:
            break
        scanned += 1
        q = b[n - 1] * c[N - 1] * c[N - 1]
        for i in range(n - 1):
            s = 0
            for t in range(m):
                x = c[i * m + t]
                if x:
                    s += pf[t] * x * x
            q += b[i] * s
        if q % p:
            continue
        on_quadric += 1
        for i in range(N - 1):
            cc[i] = c[i]
        for t in range(m):
            cc[(n - 1) * m + t] = c[N - 1] if t == 0 else 0
        # mat[i][j] = c_i * conj(c_j) * b[j]
        for i in range(n):
            for j in range(n):
                _cd_mul(p, m, gamma, cc, i * m, cc, j * m, True, tmp)
                base_off = (i * n + j) * m
                for k in range(m):
                    mat[base_off + k] = (tmp[k] * b[j]) % p
        # diagonal entries scalar; trace equals the quadric value (0 here)
        tr = 0
        for i in range(n):
            off = (i * n + i) * m
            tr += mat[off]
            for k in range(1, m):
                if mat[off + k]:
                    diag_fail += 1
                    break
        if tr % p:
            trace_fail += 1
        # sigma_b symmetry: mat[i][j] = binv[i] b[j] conj(mat[j][i])
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                oij = (i * n + j) * m
                oji = (j * n + i) * m
                f = (binv[i] * b[j]) % p
                for k in range(m):
                    v = mat[oji + k]
                    if k:
                        v = p - v if v else 0
                    if mat[oij + k] != (f * v) % p:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            sym_fail += 1
        if not any(mat[k] for k in range(n * n * m)):
            base_points += 1
            # base points must satisfy the source-locus conditions:
            # scalar slot zero and every unweighted product c_i conj(c_j) = 0
            flag_ok = c[N - 1] == 0
            if flag_ok:
                for i in range(n - 1):
                    for j in range(n - 1):
                        _cd_mul(p, m, gamma, cc, i * m, cc, j * m, True, tmp)
                        if any(tmp):
                            flag_ok = False
                            break
                    if not flag_ok:
                        break
            if not flag_ok:
                z1_flag_fail += 1
            continue
        # column n of the matrix: the inverse map's slice
        col_zero = True
        for i in range(n):
            off = (i * n + (n - 1)) * m
            for k in range(m):
                if mat[off + k]:
                    col_zero = False
                    break
            if not col_zero:
                break
        if c[N - 1] == 0:
            # slice must vanish: these points land in the inverse base locus
            if col_zero:
                zslice_points += 1
            else:
                roundtrip_fail += 1
            continue
        roundtrip_checked += 1
        lam = (b[n - 1] * c[N - 1]) % p
        good = not col_zero
        for i in range(n):
            off = (i * n + (n - 1)) * m
            for k in range(m):
                if mat[off + k] != (lam * cc[i * m + k]) % p:
                    good = False
                    break
            if not good:
                break
        if not good:
            roundtrip_fail += 1
    return (scanned, on_quadric, base_points, zslice_points,
            roundtrip_checked, roundtrip_fail, sym_fail, trace_fail,
            diag_fail, z1_flag_fail)


def z1_sweep(p, n, m, b, binv, pf, gamma, limit=-1):
    """Walk P(C^{n-1}) over F_p and compare three membership predicates for
    the source base locus: all products c_i conj(c_j) = 0; the square of
    the half-space element x(c) vanishing; all weighted map entries
    vanishing.  Returns (scanned, z1_points, equiv_fail, base_flag_fail)."""
    N = m * (n - 1)
    nn = n - 1
    scanned = z1_points = equiv_fail = base_flag_fail = 0
    tmp = [0] * m
    tmp2 = [0] * m
    for c in _points(p, N):
        if limit >= 0 and scanned >= limit:
            break
        scanned += 1
        # all products c_i conj(c_j) = 0?  Off-locus points exit at the
        # first nonzero product; there x(c)^2 != 0 and the weighted map
        # entries are nonzero too (the b_j are units), so the predicates
        # agree with nothing left to verify.
        s1 = True
        for i in range(nn):
            for j in range(nn):
                _cd_mul(p, m, gamma, c, i * m, c, j * m, True, tmp)
                if any(tmp):
                    s1 = False
                    break
            if not s1:
                break
        if not s1:
            continue
        z1_points += 1
        # weighted map entries must vanish here as well
        for i in range(nn):
            for j in range(nn):
                _cd_mul(p, m, gamma, c, i * m, c, j * m, True, tmp)
                if any((v * b[j]) % p for v in tmp):
                    base_flag_fail += 1
        # the only remaining entry of x(c)^2 is the corner
        # sum_k (b_k / b_n) conj(c_k) c_k; it must vanish on the locus
        corner = [0] * m
        for k in range(nn):
            for t in range(m):
                v = c[k * m + t]
                tmp2[t] = (p - v) % p if t else v
            _cd_mul(p, m, gamma, tmp2, 0, c, k * m, False, tmp)
            f = (b[k] * binv[n - 1]) % p
            for t in range(m):
                corner[t] = (corner[t] + f * tmp[t]) % p
        if any(corner):
            equiv_fail += 1
    return (scanned, z1_points, equiv_fail, base_flag_fail)
