"""Independent oracles and instance helpers shared by the test modules.

Every oracle here is written from the defining property, not from the
implementation's loop structure, so agreement is meaningful.
"""

from math import gcd

import numpy as np

from indetmatch import EncodedString, GenSpec, build_alphabet, generate
from indetmatch.benchgen import derive_trial_seed

GEN_CHARS = "abcdefghi"


def match(u, v):
    return gcd(u, v) > 1


def prefix_array_oracle(values):
    """Longest matching extension at each start, checked wholesale."""
    s = list(values)
    n = len(s)
    out = []
    for i in range(n):
        best = 0
        for k in range(n - i, 0, -1):
            if all(match(s[i + t], s[t]) for t in range(k)):
                best = k
                break
        out.append(best)
    if out:
        out[0] = n
    return out


def border_array_oracle(values):
    """All-borders definition: longest proper border of every prefix."""
    s = list(values)
    out = []
    for i in range(1, len(s) + 1):
        best = 0
        for t in range(1, i):
            if s[:t] == s[i - t : i]:
                best = t
        out.append(best)
    return out


def z_array_equality(values):
    """Classic Z-algorithm under equality; a structurally different path
    to the prefix array on regular strings."""
    s = list(values)
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and s[z[i]] == s[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left, right = i, i + z[i]
    return z


def suffix_match_oracle(q, e):
    """Longest block ending at 1-based e that matches the pattern's own
    tail letter by letter."""
    m = len(q)
    best = 0
    for length in range(1, e + 1):
        if all(match(q[e - 1 - t], q[m - 1 - t]) for t in range(length)):
            best = length
    return best


def good_suffix_oracle(q):
    """Weak-rule shifts by matched-suffix length, straight from the
    candidate-alignment definition."""
    m = len(q)
    table = []
    for t in range(m + 1):
        candidates = [
            e for e in range(1, m) if suffix_match_oracle(q, e) >= min(t, e)
        ]
        e_star = max(candidates, default=0)
        table.append(m - e_star)
    return table


def min_consistent_shift(y, q, alignment, known_indices):
    """Smallest shift to an alignment the examined letters don't contradict.

    ``known_indices`` are the 0-based text positions already compared at
    the current 1-based ``alignment``. Any shift a searcher takes must
    not exceed this value, or it could hop over an occurrence.
    """
    m = len(q)
    known = sorted(known_indices)
    limit = (known[-1] + 1) - alignment + 2 if known else 1
    for s in range(1, limit + 1):
        start = alignment - 1 + s
        ok = True
        for tpos in known:
            j = tpos - start
            if 0 <= j < m and not match(y[tpos], q[j]):
                ok = False
                break
        if ok:
            return s
    return limit


def make_instance(sigma, n, m, k1, k2, seed):
    spec = GenSpec(sigma=sigma, n=n, m=m, k1=k1, k2=k2, seed=seed)
    return generate(spec)


def encoded(values, chars):
    return EncodedString.from_values(values, build_alphabet(chars))


def spec_stream(master_seed, count, sigma_choices=(2, 3, 4, 9), max_n=200, max_m=20):
    """Reproducible stream of instance specs covering the (k1, k2) corners."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(master_seed)))
    for k in range(count):
        sigma = int(rng.choice(sigma_choices))
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(1, min(n, max_m) + 1))
        corner = k % 5
        if corner == 0:
            k1, k2 = 0, 0
        elif corner == 1:
            k1, k2 = n, 0
        elif corner == 2:
            k1, k2 = 0, m
        elif corner == 3:
            k1, k2 = n, m
        else:
            k1 = int(rng.integers(0, n + 1))
            k2 = int(rng.integers(0, m + 1))
        yield GenSpec(sigma=sigma, n=n, m=m, k1=k1, k2=k2, seed=derive_trial_seed(master_seed, k))
