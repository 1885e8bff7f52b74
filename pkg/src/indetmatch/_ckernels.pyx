# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

A line-for-line mirror of ``_pykernels``: same algorithms, same outputs,
same instrumentation counts. Inputs are contiguous uint32 buffers
(numpy arrays as built by EncodedString).
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "compiled"

cdef int _PRIME_FLAG[24]
for _v in range(24):
    _PRIME_FLAG[_v] = 1 if _v in (2, 3, 5, 7, 11, 13, 17, 19, 23) else 0


cdef inline unsigned long _gcd(unsigned long a, unsigned long b) nogil:
    cdef unsigned long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _is_indet(unsigned long v) nogil:
    return v > 23 or _PRIME_FLAG[v] == 0


def is_indet_value(v):
    """True when the encoded letter stands for more than one character."""
    return bool(_is_indet(v))


cdef void _prefix_into(const unsigned int *s, Py_ssize_t n, Py_ssize_t *out) nogil:
    cdef Py_ssize_t i, t
    if n == 0:
        return
    out[0] = n
    for i in range(1, n):
        t = 0
        while i + t < n and _gcd(s[i + t], s[t]) > 1:
            t += 1
        out[i] = t


cdef void _border_into(const unsigned int *s, Py_ssize_t n, Py_ssize_t *beta) nogil:
    cdef Py_ssize_t i, b
    if n == 0:
        return
    beta[0] = 0
    for i in range(1, n):
        b = beta[i - 1]
        while b > 0 and s[i] != s[b]:
            b = beta[b - 1]
        beta[i] = b + 1 if s[i] == s[b] else 0


def prefix_array(const unsigned int[::1] values):
    """Match-extension table under the shared-prime relation; see
    ``_pykernels.prefix_array``."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t *out
    if n == 0:
        return []
    out = <Py_ssize_t *> PyMem_Malloc(n * sizeof(Py_ssize_t))
    if out == NULL:
        raise MemoryError()
    try:
        _prefix_into(&values[0], n, out)
        return [out[i] for i in range(n)]
    finally:
        PyMem_Free(out)


def border_array(const unsigned int[::1] values):
    """Classic failure function under letter equality (regular strings)."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t *out
    if n == 0:
        return []
    out = <Py_ssize_t *> PyMem_Malloc(n * sizeof(Py_ssize_t))
    if out == NULL:
        raise MemoryError()
    try:
        _border_into(&values[0], n, out)
        return [out[i] for i in range(n)]
    finally:
        PyMem_Free(out)


def bf_search(const unsigned int[::1] y, const unsigned int[::1] q):
    """Check every alignment left to right. The correctness oracle."""
    cdef Py_ssize_t n = y.shape[0], m = q.shape[0]
    cdef Py_ssize_t i, j
    cdef bint hit
    cdef unsigned long long comparisons = 0
    positions = []
    for i in range(n - m + 1):
        hit = True
        for j in range(m):
            comparisons += 1
            if _gcd(y[i + j], q[j]) <= 1:
                hit = False
                break
        if hit:
            positions.append(i + 1)
    return positions, comparisons, max(n - m, 0)


def kmp_regular(const unsigned int[::1] y, const unsigned int[::1] q):
    """Classic linear-time search; assumes both strings are regular."""
    cdef Py_ssize_t n = y.shape[0], m = q.shape[0]
    cdef Py_ssize_t i = 0, j = 0
    cdef unsigned long long comparisons = 0, shifts = 0
    cdef Py_ssize_t *beta = <Py_ssize_t *> PyMem_Malloc(max(m, 1) * sizeof(Py_ssize_t))
    if beta == NULL:
        raise MemoryError()
    positions = []
    try:
        _border_into(&q[0], m, beta)
        while i < n:
            comparisons += 1
            if q[j] == y[i]:
                j += 1
                i += 1
                if j == m:
                    positions.append(i - j + 1)
                    j = beta[j - 1]
                    shifts += 1
            elif j == 0:
                i += 1
            else:
                j = beta[j - 1]
                shifts += 1
    finally:
        PyMem_Free(beta)
    return positions, comparisons, shifts


cdef Py_ssize_t _compute_shift(bint window_has_indet,
                               const unsigned int[::1] y, const unsigned int[::1] q,
                               Py_ssize_t i, Py_ssize_t j,
                               Py_ssize_t *beta, Py_ssize_t ell,
                               unsigned int *qp, Py_ssize_t *pi,
                               unsigned long long *pa_built,
                               unsigned long long *pa_cells) nogil:
    cdef Py_ssize_t length, k, r, v, best
    if window_has_indet or j > ell:
        if j <= 1:
            return 0
        length = 2 * (j - 1)
        for k in range(j - 1):
            qp[k] = q[k]
        for k in range(j - 1):
            qp[j - 1 + k] = y[i - j + 1 + k]
        pa_built[0] += 1
        pa_cells[0] += length
        _prefix_into(qp, length, pi)
        best = 0
        for r in range(j, length + 1):
            v = pi[r - 1]
            if v == 2 * j - r - 1 and v > best:
                best = v
        return best
    if j == 0:
        return 0
    return beta[j - 1]


def kmp_indet(const unsigned int[::1] y, const unsigned int[::1] q):
    """Prefix-based search over indeterminate strings; see
    ``_pykernels.kmp_indet``."""
    cdef Py_ssize_t n = y.shape[0], m = q.shape[0]
    if m == 1:
        return _single_letter_scan(y, q)
    cdef Py_ssize_t ell = 0
    while ell < m and not _is_indet(q[ell]):
        ell += 1
    cdef Py_ssize_t *beta = NULL
    cdef unsigned int *qp = NULL
    cdef Py_ssize_t *pi = NULL
    cdef Py_ssize_t i = 0, j = 0
    cdef bint indet_y = False
    cdef Py_ssize_t right_pos = 0
    cdef unsigned long long comparisons = 0, shifts = 0, pa_built = 0, pa_cells = 0
    positions = []
    try:
        beta = <Py_ssize_t *> PyMem_Malloc(max(ell, 1) * sizeof(Py_ssize_t))
        qp = <unsigned int *> PyMem_Malloc(2 * m * sizeof(unsigned int))
        pi = <Py_ssize_t *> PyMem_Malloc(2 * m * sizeof(Py_ssize_t))
        if beta == NULL or qp == NULL or pi == NULL:
            raise MemoryError()
        _border_into(&q[0], ell, beta)
        while i < n:
            comparisons += 1
            if _gcd(q[j], y[i]) > 1:
                if _is_indet(y[i]):
                    indet_y = True
                    right_pos = i + 1
                j += 1
                i += 1
                if j == m:
                    positions.append(i - j + 1)
                    j = _compute_shift(indet_y, y, q, i, j, beta, ell, qp, pi,
                                       &pa_built, &pa_cells)
                    shifts += 1
                    indet_y = right_pos >= i - j + 1
            else:
                if j == 0:
                    i += 1
                else:
                    j = _compute_shift(indet_y, y, q, i, j, beta, ell, qp, pi,
                                       &pa_built, &pa_cells)
                    shifts += 1
                indet_y = right_pos >= i - j + 1
    finally:
        PyMem_Free(beta)
        PyMem_Free(qp)
        PyMem_Free(pi)
    return positions, comparisons, shifts, pa_built, pa_cells


cdef Py_ssize_t _fill_bad_char(const unsigned int[::1] q, const unsigned long *primes,
                               Py_ssize_t sigma, Py_ssize_t *table) nogil:
    # table[c * (m+1) + j]: rightmost position <= j whose letter contains c.
    cdef Py_ssize_t m = q.shape[0]
    cdef Py_ssize_t c, jj
    cdef Py_ssize_t *row
    for c in range(sigma):
        row = table + c * (m + 1)
        row[0] = 0
        for jj in range(1, m + 1):
            row[jj] = jj if q[jj - 1] % primes[c] == 0 else row[jj - 1]
    return 0


cdef void _fill_good_suffix(const unsigned int[::1] q, Py_ssize_t *gs,
                            unsigned int *scratch, Py_ssize_t *piscratch,
                            Py_ssize_t *bucket) nogil:
    # Weak good-suffix shifts by matched-suffix length; see
    # _pykernels.good_suffix_table for the derivation.
    cdef Py_ssize_t m = q.shape[0]
    cdef Py_ssize_t k, e, se, t, run, border_best, e_star
    for k in range(m):
        scratch[k] = q[m - 1 - k]
    _prefix_into(scratch, m, piscratch)
    for k in range(m + 1):
        bucket[k] = 0
    border_best = 0
    for e in range(1, m):
        se = piscratch[m - e]
        if se == e:
            border_best = e
        elif bucket[se] < e:
            bucket[se] = e
    run = 0
    for t in range(m, -1, -1):
        if bucket[t] > run:
            run = bucket[t]
        e_star = border_best if border_best > run else run
        gs[t] = m - e_star


cdef Py_ssize_t _gsr_shift(const unsigned int[::1] y, const unsigned int[::1] q,
                           Py_ssize_t i, Py_ssize_t matchedlen,
                           unsigned int *qp, Py_ssize_t *pi,
                           unsigned long long *pa_built,
                           unsigned long long *pa_cells) nogil:
    cdef Py_ssize_t m = q.shape[0]
    cdef Py_ssize_t t_len = matchedlen if matchedlen < m - 1 else m - 1
    cdef Py_ssize_t length = t_len + m - 1
    cdef Py_ssize_t k, v, rindex
    for k in range(t_len):
        qp[k] = y[i + m - 2 - k]
    for k in range(m - 1):
        qp[t_len + k] = q[m - 2 - k]
    pa_built[0] += 1
    pa_cells[0] += length
    _prefix_into(qp, length, pi)
    rindex = t_len + 1
    for k in range(t_len + 1, length + 1):
        v = pi[k - 1]
        if v >= t_len:
            rindex = k
            break
        if v > pi[rindex - 1]:
            rindex = k
    return m - (length - rindex + 1)


def bm_regular(const unsigned int[::1] y, const unsigned int[::1] q, primes):
    """Right-to-left search with bad-character and weak good-suffix
    shifts; assumes both strings are regular."""
    cdef Py_ssize_t n = y.shape[0], m = q.shape[0]
    cdef Py_ssize_t sigma = len(primes)
    cdef unsigned long cprimes[9]
    cdef Py_ssize_t c
    for c in range(sigma):
        cprimes[c] = primes[c]
    cdef Py_ssize_t *table = NULL
    cdef Py_ssize_t *gs = NULL
    cdef unsigned int *scratch = NULL
    cdef Py_ssize_t *piscratch = NULL
    cdef Py_ssize_t *bucket = NULL
    cdef Py_ssize_t i, j, last, shift, best
    cdef unsigned long v
    cdef bint matched_all
    cdef unsigned long long comparisons = 0, shifts = 0
    positions = []
    try:
        table = <Py_ssize_t *> PyMem_Malloc(sigma * (m + 1) * sizeof(Py_ssize_t))
        gs = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
        scratch = <unsigned int *> PyMem_Malloc(max(m, 1) * sizeof(unsigned int))
        piscratch = <Py_ssize_t *> PyMem_Malloc(max(m, 1) * sizeof(Py_ssize_t))
        bucket = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
        if table == NULL or gs == NULL or scratch == NULL or piscratch == NULL or bucket == NULL:
            raise MemoryError()
        _fill_bad_char(q, cprimes, sigma, table)
        _fill_good_suffix(q, gs, scratch, piscratch, bucket)
        i = 1
        last = n - m + 1
        while i <= last:
            shift = 1
            matched_all = True
            for j in range(m, 0, -1):
                v = y[i + j - 2]
                comparisons += 1
                if q[j - 1] != v:
                    best = 0
                    for c in range(sigma):
                        if v % cprimes[c] == 0 and table[c * (m + 1) + j - 1] > best:
                            best = table[c * (m + 1) + j - 1]
                    shift = j - best
                    if gs[m - j] > shift:
                        shift = gs[m - j]
                    if shift < 1:
                        shift = 1
                    matched_all = False
                    break
            if matched_all:
                positions.append(i)
                shift = gs[m] if gs[m] > 1 else 1
            i += shift
            shifts += 1
    finally:
        PyMem_Free(table)
        PyMem_Free(gs)
        PyMem_Free(scratch)
        PyMem_Free(piscratch)
        PyMem_Free(bucket)
    return positions, comparisons, shifts


def bm_indet(const unsigned int[::1] y, const unsigned int[::1] q, primes):
    """Right-to-left search over indeterminate strings; see
    ``_pykernels.bm_indet``."""
    cdef Py_ssize_t n = y.shape[0], m = q.shape[0]
    if m == 1:
        return _single_letter_scan(y, q)
    cdef Py_ssize_t sigma = len(primes)
    cdef unsigned long cprimes[9]
    cdef Py_ssize_t c
    for c in range(sigma):
        cprimes[c] = primes[c]
    cdef Py_ssize_t ell = 0
    while ell < m and not _is_indet(q[m - 1 - ell]):
        ell += 1
    cdef Py_ssize_t *table = NULL
    cdef Py_ssize_t *gs = NULL
    cdef unsigned int *scratch = NULL
    cdef Py_ssize_t *piscratch = NULL
    cdef Py_ssize_t *bucket = NULL
    cdef unsigned int *qp = NULL
    cdef Py_ssize_t *pi = NULL
    cdef Py_ssize_t i, j, last, shift, best, matchedlen, skip_bc, skip_gs, right_pos
    cdef unsigned long v
    cdef bint matched_all, indet_y
    cdef unsigned long long comparisons = 0, shifts = 0, pa_built = 0, pa_cells = 0
    positions = []
    try:
        table = <Py_ssize_t *> PyMem_Malloc(sigma * (m + 1) * sizeof(Py_ssize_t))
        gs = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
        scratch = <unsigned int *> PyMem_Malloc(m * sizeof(unsigned int))
        piscratch = <Py_ssize_t *> PyMem_Malloc(m * sizeof(Py_ssize_t))
        bucket = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
        qp = <unsigned int *> PyMem_Malloc(2 * m * sizeof(unsigned int))
        pi = <Py_ssize_t *> PyMem_Malloc(2 * m * sizeof(Py_ssize_t))
        if (table == NULL or gs == NULL or scratch == NULL or piscratch == NULL
                or bucket == NULL or qp == NULL or pi == NULL):
            raise MemoryError()
        _fill_bad_char(q, cprimes, sigma, table)
        _fill_good_suffix(q, gs, scratch, piscratch, bucket)
        right_pos = 0
        i = 1
        last = n - m + 1
        while i <= last:
            indet_y = right_pos >= i
            shift = 1
            matched_all = True
            for j in range(m, 0, -1):
                v = y[i + j - 2]
                if _is_indet(v):
                    indet_y = True
                    if i + j - 1 > right_pos:
                        right_pos = i + j - 1
                comparisons += 1
                if _gcd(q[j - 1], v) <= 1:
                    matchedlen = m - j
                    best = 0
                    for c in range(sigma):
                        if v % cprimes[c] == 0 and table[c * (m + 1) + j - 1] > best:
                            best = table[c * (m + 1) + j - 1]
                    skip_bc = j - best
                    if matchedlen == 0:
                        skip_gs = 1
                    elif indet_y or matchedlen > ell:
                        skip_gs = _gsr_shift(y, q, i, matchedlen, qp, pi,
                                             &pa_built, &pa_cells)
                    else:
                        skip_gs = gs[matchedlen]
                    shift = skip_bc if skip_bc > 1 else 1
                    if skip_gs > shift:
                        shift = skip_gs
                    matched_all = False
                    break
            if matched_all:
                positions.append(i)
                if indet_y or m > ell:
                    skip_gs = _gsr_shift(y, q, i, m, qp, pi, &pa_built, &pa_cells)
                else:
                    skip_gs = gs[m]
                shift = skip_gs if skip_gs > 1 else 1
            i += shift
            shifts += 1
    finally:
        PyMem_Free(table)
        PyMem_Free(gs)
        PyMem_Free(scratch)
        PyMem_Free(piscratch)
        PyMem_Free(bucket)
        PyMem_Free(qp)
        PyMem_Free(pi)
    return positions, comparisons, shifts, pa_built, pa_cells


cdef _single_letter_scan(const unsigned int[::1] y, const unsigned int[::1] q):
    cdef Py_ssize_t n = y.shape[0]
    cdef unsigned long qa = q[0]
    cdef Py_ssize_t idx
    cdef unsigned long long comparisons = 0
    positions = []
    for idx in range(n):
        comparisons += 1
        if _gcd(qa, y[idx]) > 1:
            positions.append(idx + 1)
    return positions, comparisons, max(n - 1, 0), 0, 0
