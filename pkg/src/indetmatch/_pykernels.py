"""Pure-Python search kernels.

Reference implementations of the hot loops over raw letter values
(plain ints: a prime for a regular letter, a product of distinct primes
for an indeterminate one). The compiled extension ``_ckernels`` mirrors
every function here with identical outputs and identical instrumentation
counts; the test suite cross-checks the two backends.

The ``trace`` parameter some kernels take is a diagnostic: pass a list
and the kernel appends every 1-based alignment at which it compares
letters. Only this backend implements it.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure-python"

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)
_IS_PRIME_SMALL = tuple(v in _PRIMES for v in range(24))


def is_indet_value(v):
    """True when the encoded letter stands for more than one character."""
    return v > 23 or not _IS_PRIME_SMALL[v]


def _as_list(seq):
    tolist = getattr(seq, "tolist", None)
    return tolist() if tolist is not None else list(seq)


def prefix_array(values):
    """Match-extension table under the shared-prime relation.

    out[i] is how far the suffix starting at 0-based i keeps matching the
    front of the string letter by letter; out[0] is the whole length.
    Quadratic in the worst case: each entry is grown by direct extension,
    which is what keeps it correct when matching is not transitive.
    """
    s = _as_list(values)
    n = len(s)
    out = [0] * n
    if n == 0:
        return out
    out[0] = n
    for i in range(1, n):
        t = 0
        while i + t < n and gcd(s[i + t], s[t]) > 1:
            t += 1
        out[i] = t
    return out


def border_array(values):
    """Classic failure function under plain letter equality.

    Only meaningful for regular strings, where equality and the matching
    relation coincide. out[i] is the longest proper border of the prefix
    ending at 0-based i.
    """
    s = _as_list(values)
    n = len(s)
    beta = [0] * n
    for i in range(1, n):
        b = beta[i - 1]
        while b > 0 and s[i] != s[b]:
            b = beta[b - 1]
        beta[i] = b + 1 if s[i] == s[b] else 0
    return beta


def bf_search(text_values, pattern_values):
    """Check every alignment left to right. The correctness oracle."""
    y = _as_list(text_values)
    q = _as_list(pattern_values)
    n, m = len(y), len(q)
    positions = []
    comparisons = 0
    for i in range(n - m + 1):
        hit = True
        for j in range(m):
            comparisons += 1
            if gcd(y[i + j], q[j]) <= 1:
                hit = False
                break
        if hit:
            positions.append(i + 1)
    return positions, comparisons, max(n - m, 0)


def kmp_regular(text_values, pattern_values, trace=None):
    """Classic linear-time search; assumes both strings are regular."""
    y = _as_list(text_values)
    q = _as_list(pattern_values)
    n, m = len(y), len(q)
    beta = border_array(q)
    positions = []
    comparisons = 0
    shifts = 0
    i = j = 0
    while i < n:
        if trace is not None and (not trace or trace[-1] != i - j + 1):
            trace.append(i - j + 1)
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
    return positions, comparisons, shifts


def compute_shift_values(window_has_indet, y, q, i, j, beta, ell):
    """Retained matched-prefix length after a full match or mismatch.

    ``i`` is the 1-based text position ending the matched window and
    ``j`` the number of matched letters, so the window is y[i-j+1 .. i]
    (1-based). When the window is regular and lies inside the pattern's
    regular prefix (length ``ell``), the precomputed border of that
    prefix answers directly. Otherwise borders are not transferable
    (matching is not transitive), so the overlap string
    q' = q[1 .. j-1] + window-tail is built and its match-extension
    table scanned for the longest suffix of the window that still
    matches a pattern prefix of the same length.

    Returns ``(retained_len, q_prime)`` where ``q_prime`` is None when
    no overlap string was built (border path or window of length <= 1).
    """
    if window_has_indet or j > ell:
        if j <= 1:
            return 0, None
        qp = q[: j - 1] + y[i - j + 1 : i]
        pi = prefix_array(qp)
        length = 2 * (j - 1)
        best = 0
        for r in range(j, length + 1):
            v = pi[r - 1]
            # pi[r] = 2j - r - 1 means the suffix starting at r runs to the
            # very end of q', i.e. a window suffix matching a pattern prefix.
            if v == 2 * j - r - 1 and v > best:
                best = v
        return best, qp
    if j == 0:
        return 0, None
    return beta[j - 1], None


def kmp_indet(text_values, pattern_values, trace=None):
    """Prefix-based search over indeterminate strings.

    Tracks whether the current window saw an indeterminate text letter
    (``right_pos`` is the rightmost such 1-based position) and only
    trusts the precomputed border when it did not and the matched prefix
    stays inside the pattern's regular prefix.
    """
    y = _as_list(text_values)
    q = _as_list(pattern_values)
    n, m = len(y), len(q)
    if m == 1:
        return _single_letter_scan(y, q, trace)
    ell = 0
    while ell < m and not is_indet_value(q[ell]):
        ell += 1
    beta = border_array(q[:ell])
    positions = []
    comparisons = 0
    shifts = 0
    pa_built = 0
    pa_cells = 0
    i = j = 0
    indet_y = False
    right_pos = 0
    while i < n:
        if trace is not None and (not trace or trace[-1] != i - j + 1):
            trace.append(i - j + 1)
        comparisons += 1
        if gcd(q[j], y[i]) > 1:
            if is_indet_value(y[i]):
                indet_y = True
                right_pos = i + 1
            j += 1
            i += 1
            if j == m:
                positions.append(i - j + 1)
                j, qp = compute_shift_values(indet_y, y, q, i, j, beta, ell)
                if qp is not None:
                    pa_built += 1
                    pa_cells += len(qp)
                shifts += 1
                indet_y = right_pos >= i - j + 1
        else:
            if j == 0:
                i += 1
            else:
                j, qp = compute_shift_values(indet_y, y, q, i, j, beta, ell)
                if qp is not None:
                    pa_built += 1
                    pa_cells += len(qp)
                shifts += 1
            indet_y = right_pos >= i - j + 1
    return positions, comparisons, shifts, pa_built, pa_cells


def bad_char_table(q, primes):
    """table[c][j]: rightmost position <= j whose letter contains character c.

    Rows follow the alphabet order of ``primes``; column 0 is 0 so a
    mismatch at pattern position 1 falls through to a full shift.
    """
    m = len(q)
    table = []
    for p in primes:
        row = [0] * (m + 1)
        for jj in range(1, m + 1):
            row[jj] = jj if q[jj - 1] % p == 0 else row[jj - 1]
        table.append(row)
    return table


def good_suffix_table(q):
    """Weak good-suffix shifts indexed by matched-suffix length 0..m.

    suffix_match(e) (from the match-extension table of the reversed
    pattern) is how far the block ending at e keeps matching the
    pattern's own tail. An alignment moving the pattern end to position
    e survives a matched suffix of length t exactly when
    suffix_match(e) >= min(t, e); the largest such e < m gives the
    smallest safe shift m - e. Buckets plus one descending sweep flatten
    that to O(m) after the table.
    """
    m = len(q)
    pir = prefix_array(q[::-1])
    border_best = 0
    bucket = [0] * (m + 1)
    for e in range(1, m):
        se = pir[m - e]
        if se == e:
            border_best = e
        elif bucket[se] < e:
            bucket[se] = e
    gs = [0] * (m + 1)
    run = 0
    for t in range(m, -1, -1):
        if bucket[t] > run:
            run = bucket[t]
        e_star = border_best if border_best > run else run
        gs[t] = m - e_star
    return gs


def gsr_shift_values(y, q, i, matchedlen):
    """Good-suffix shift when the matched window needs direct re-checking.

    ``i`` is the 1-based alignment and ``matchedlen`` how many pattern
    letters matched (m for a full match). The matched window, capped to
    the last m-1 text letters, is reversed and prepended to the reversed
    pattern head q[1..m-1]; in that string q'' a match-extension of at
    least t_len starting inside the pattern part marks a pattern block
    that covers the whole window, and shorter extensions rank partial
    covers. The leftmost best start yields the smallest safe shift.

    Returns ``(shift, q_prime)`` with the constructed string for
    instrumentation.
    """
    m = len(q)
    t_len = min(matchedlen, m - 1)
    top = i + m - 1
    qp = y[top - t_len : top][::-1] + q[: m - 1][::-1]
    pi = prefix_array(qp)
    length = len(qp)
    rindex = t_len + 1
    for k in range(t_len + 1, length + 1):
        v = pi[k - 1]
        if v >= t_len:
            rindex = k
            break
        if v > pi[rindex - 1]:
            rindex = k
    return m - (length - rindex + 1), qp


def bm_regular(text_values, pattern_values, primes, trace=None):
    """Right-to-left search with bad-character and weak good-suffix
    shifts; assumes both strings are regular."""
    y = _as_list(text_values)
    q = _as_list(pattern_values)
    n, m = len(y), len(q)
    table = bad_char_table(q, primes)
    gs = good_suffix_table(q)
    positions = []
    comparisons = 0
    shifts = 0
    i = 1
    last = n - m + 1
    while i <= last:
        if trace is not None:
            trace.append(i)
        shift = 1
        matched_all = True
        for j in range(m, 0, -1):
            v = y[i + j - 2]
            comparisons += 1
            if q[j - 1] != v:
                best = 0
                for c, p in enumerate(primes):
                    if v % p == 0 and table[c][j - 1] > best:
                        best = table[c][j - 1]
                shift = max(1, j - best, gs[m - j])
                matched_all = False
                break
        if matched_all:
            positions.append(i)
            shift = max(1, gs[m])
        i += shift
        shifts += 1
    return positions, comparisons, shifts


def bm_indet(text_values, pattern_values, primes, trace=None):
    """Right-to-left search over indeterminate strings.

    Every examined text letter (including the mismatching one) feeds the
    indeterminacy bookkeeping. The precomputed good-suffix table is used
    only when the matched window is regular and fits inside the
    pattern's regular suffix (length ``ell``); otherwise the shift is
    recomputed from the window itself.
    """
    y = _as_list(text_values)
    q = _as_list(pattern_values)
    n, m = len(y), len(q)
    if m == 1:
        return _single_letter_scan(y, q, trace)
    ell = 0
    while ell < m and not is_indet_value(q[m - 1 - ell]):
        ell += 1
    table = bad_char_table(q, primes)
    gs = good_suffix_table(q)
    positions = []
    comparisons = 0
    shifts = 0
    pa_built = 0
    pa_cells = 0
    right_pos = 0
    i = 1
    last = n - m + 1
    while i <= last:
        if trace is not None:
            trace.append(i)
        indet_y = right_pos >= i
        shift = 1
        matched_all = True
        for j in range(m, 0, -1):
            v = y[i + j - 2]
            if is_indet_value(v):
                indet_y = True
                if i + j - 1 > right_pos:
                    right_pos = i + j - 1
            comparisons += 1
            if gcd(q[j - 1], v) <= 1:
                matchedlen = m - j
                best = 0
                for c, p in enumerate(primes):
                    if v % p == 0 and table[c][j - 1] > best:
                        best = table[c][j - 1]
                skip_bc = j - best
                if matchedlen == 0:
                    skip_gs = 1
                elif indet_y or matchedlen > ell:
                    skip_gs, qp = gsr_shift_values(y, q, i, matchedlen)
                    pa_built += 1
                    pa_cells += len(qp)
                else:
                    skip_gs = gs[matchedlen]
                shift = max(1, skip_bc, skip_gs)
                matched_all = False
                break
        if matched_all:
            positions.append(i)
            if indet_y or m > ell:
                skip_gs, qp = gsr_shift_values(y, q, i, m)
                pa_built += 1
                pa_cells += len(qp)
            else:
                skip_gs = gs[m]
            shift = max(1, skip_gs)
        i += shift
        shifts += 1
    return positions, comparisons, shifts, pa_built, pa_cells


def _single_letter_scan(y, q, trace=None):
    """m = 1 degenerates to a linear scan for both indeterminate searchers."""
    qa = q[0]
    positions = []
    comparisons = 0
    for idx, v in enumerate(y):
        if trace is not None:
            trace.append(idx + 1)
        comparisons += 1
        if gcd(qa, v) > 1:
            positions.append(idx + 1)
    return positions, comparisons, max(len(y) - 1, 0), 0, 0
