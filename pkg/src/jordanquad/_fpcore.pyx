# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels.

Same API and counter semantics as _fpcore_py; see that module for the
documentation.  Sizes are bounded (dim C <= 8, n <= 8) so everything runs
on stack buffers of plain C longs.
"""

DEF MAXC = 72      # max flat coordinates m*(n-1)+1
DEF MAXM = 8       # max composition-algebra dimension
DEF MAXMAT = 576   # max n*n*m


def isotropic_vector(long p, coeffs):
    cdef long d[MAXC]
    cdef long tail[MAXC]
    cdef long N = len(coeffs)
    cdef long lead, i, t, s, x, tail_len
    if N > MAXC:
        raise ValueError("form dimension too large for the compiled kernel")
    for i in range(N):
        d[i] = coeffs[i] % p
    for lead in range(N):
        tail_len = N - lead - 1
        for t in range(tail_len):
            tail[t] = 0
        while True:
            s = d[lead]
            for t in range(tail_len):
                x = tail[t]
                if x:
                    s += d[lead + 1 + t] * x * x
            if s % p == 0:
                return [0] * lead + [1] + [tail[t] for t in range(tail_len)]
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


cdef inline void _cd_mul(long p, long m, long* gamma, long* x, long xoff,
                         long* y, long yoff, bint conj_y, long* out) nogil:
    cdef long s, t, k, xs, yt
    for k in range(m):
        out[k] = 0
    for s in range(m):
        xs = x[xoff + s]
        if xs == 0:
            continue
        for t in range(m):
            yt = y[yoff + t]
            if yt == 0:
                continue
            if conj_y and t:
                yt = p - yt
            k = s ^ t
            out[k] = (out[k] + xs * yt * gamma[s * m + t]) % p


def quadric_sweep(long p, long n, long m, b, binv, pf, gamma, long limit=-1):
    cdef long bb[MAXM + MAXC]
    cdef long bi[MAXM + MAXC]
    cdef long pff[MAXM]
    cdef long gam[MAXM * MAXM]
    cdef long c[MAXC]
    cdef long cc[MAXC]
    cdef long mat[MAXMAT]
    cdef long tmp[MAXM]
    cdef long N = m * (n - 1) + 1
    cdef long scanned = 0, on_quadric = 0, base_points = 0, zslice_points = 0
    cdef long roundtrip_checked = 0, roundtrip_fail = 0
    cdef long sym_fail = 0, trace_fail = 0, diag_fail = 0, z1_flag_fail = 0
    cdef long lead, i, j, k, t, s, q, x, tr, off, oij, oji, f, v, lam
    cdef bint done = 0, ok, col_zero, good, flag_ok, any_mat
    if N > MAXC or m > MAXM or n * n * m > MAXMAT:
        raise ValueError("configuration too large for the compiled kernel")
    for i in range(n):
        bb[i] = b[i] % p
        bi[i] = binv[i] % p
    for t in range(m):
        pff[t] = pf[t] % p
    for i in range(m * m):
        gam[i] = gamma[i] % p
    for lead in range(N):
        if done:
            break
        for i in range(N):
            c[i] = 0
        c[lead] = 1
        while True:
            if limit >= 0 and scanned >= limit:
                done = 1
                break
            scanned += 1
            # quadric value
            q = bb[n - 1] * c[N - 1] * c[N - 1]
            for i in range(n - 1):
                s = 0
                for t in range(m):
                    x = c[i * m + t]
                    if x:
                        s += pff[t] * x * x
                q += bb[i] * (s % p)
            if q % p == 0:
                on_quadric += 1
                for i in range(N - 1):
                    cc[i] = c[i]
                for t in range(m):
                    cc[(n - 1) * m + t] = c[N - 1] if t == 0 else 0
                for i in range(n):
                    for j in range(n):
                        _cd_mul(p, m, gam, cc, i * m, cc, j * m, 1, tmp)
                        off = (i * n + j) * m
                        for k in range(m):
                            mat[off + k] = (tmp[k] * bb[j]) % p
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
                ok = 1
                for i in range(n):
                    if not ok:
                        break
                    for j in range(i + 1, n):
                        oij = (i * n + j) * m
                        oji = (j * n + i) * m
                        f = (bi[i] * bb[j]) % p
                        for k in range(m):
                            v = mat[oji + k]
                            if k and v:
                                v = p - v
                            if mat[oij + k] != (f * v) % p:
                                ok = 0
                                break
                        if not ok:
                            break
                if not ok:
                    sym_fail += 1
                any_mat = 0
                for k in range(n * n * m):
                    if mat[k]:
                        any_mat = 1
                        break
                if not any_mat:
                    base_points += 1
                    flag_ok = c[N - 1] == 0
                    if flag_ok:
                        for i in range(n - 1):
                            if not flag_ok:
                                break
                            for j in range(n - 1):
                                _cd_mul(p, m, gam, cc, i * m, cc, j * m, 1, tmp)
                                for k in range(m):
                                    if tmp[k]:
                                        flag_ok = 0
                                        break
                                if not flag_ok:
                                    break
                    if not flag_ok:
                        z1_flag_fail += 1
                else:
                    col_zero = 1
                    for i in range(n):
                        off = (i * n + (n - 1)) * m
                        for k in range(m):
                            if mat[off + k]:
                                col_zero = 0
                                break
                        if not col_zero:
                            break
                    if c[N - 1] == 0:
                        if col_zero:
                            zslice_points += 1
                        else:
                            roundtrip_fail += 1
                    else:
                        roundtrip_checked += 1
                        lam = (bb[n - 1] * c[N - 1]) % p
                        good = not col_zero
                        for i in range(n):
                            if not good:
                                break
                            off = (i * n + (n - 1)) * m
                            for k in range(m):
                                if mat[off + k] != (lam * cc[i * m + k]) % p:
                                    good = 0
                                    break
                        if not good:
                            roundtrip_fail += 1
            # advance the odometer
            i = N - 1
            while i > lead:
                c[i] += 1
                if c[i] < p:
                    break
                c[i] = 0
                i -= 1
            if i == lead:
                break
    return (scanned, on_quadric, base_points, zslice_points,
            roundtrip_checked, roundtrip_fail, sym_fail, trace_fail,
            diag_fail, z1_flag_fail)


def z1_sweep(long p, long n, long m, b, binv, pf, gamma, long limit=-1):
    cdef long bb[MAXM + MAXC]
    cdef long bi[MAXM + MAXC]
    cdef long gam[MAXM * MAXM]
    cdef long c[MAXC]
    cdef long tmp[MAXM]
    cdef long tmp2[MAXM]
    cdef long corner[MAXM]
    cdef long N = m * (n - 1)
    cdef long nn = n - 1
    cdef long scanned = 0, z1_points = 0, equiv_fail = 0, base_flag_fail = 0
    cdef long lead, i, j, k, t, f, v
    cdef bint done = 0, s1, hit
    if N > MAXC or m > MAXM:
        raise ValueError("configuration too large for the compiled kernel")
    for i in range(n):
        bb[i] = b[i] % p
        bi[i] = binv[i] % p
    for i in range(m * m):
        gam[i] = gamma[i] % p
    for lead in range(N):
        if done:
            break
        for i in range(N):
            c[i] = 0
        c[lead] = 1
        while True:
            if limit >= 0 and scanned >= limit:
                done = 1
                break
            scanned += 1
            s1 = 1
            for i in range(nn):
                if not s1:
                    break
                for j in range(nn):
                    _cd_mul(p, m, gam, c, i * m, c, j * m, 1, tmp)
                    for k in range(m):
                        if tmp[k]:
                            s1 = 0
                            break
                    if not s1:
                        break
            if s1:
                z1_points += 1
                for i in range(nn):
                    for j in range(nn):
                        _cd_mul(p, m, gam, c, i * m, c, j * m, 1, tmp)
                        hit = 0
                        for k in range(m):
                            if (tmp[k] * bb[j]) % p:
                                hit = 1
                        if hit:
                            base_flag_fail += 1
                for k in range(m):
                    corner[k] = 0
                for i in range(nn):
                    for t in range(m):
                        v = c[i * m + t]
                        if t and v:
                            v = p - v
                        tmp2[t] = v
                    _cd_mul(p, m, gam, tmp2, 0, c, i * m, 0, tmp)
                    f = (bb[i] * bi[n - 1]) % p
                    for t in range(m):
                        corner[t] = (corner[t] + f * tmp[t]) % p
                hit = 0
                for k in range(m):
                    if corner[k]:
                        hit = 1
                        break
                if hit:
                    equiv_fail += 1
            i = N - 1
            while i > lead:
                c[i] += 1
                if c[i] < p:
                    break
                c[i] = 0
                i -= 1
            if i == lead:
                break
    return (scanned, z1_points, equiv_fail, base_flag_fail)
