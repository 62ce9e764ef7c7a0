# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""

from array import array

from cpython cimport array as carray


cdef inline long long _find(long long[:] parent, long long x) noexcept nogil:
    cdef long long root = x
    cdef long long nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def orbit_min_labels(rflat, long long n, int m):
    cdef long long total = n ** m
    cdef carray.array out = array("q", range(total))
    cdef long long[:] parent = out
    cdef const long long[:] r = rflat
    cdef long long[64] weights
    cdef long long code, other, hi, lo, a, b, k, ra, rb
    cdef int i
    if m < 2:
        return out
    if m > 64:
        raise ValueError("word length above 64 is not supported")
    for i in range(m):
        weights[i] = n ** (m - 1 - i)
    with nogil:
        for code in range(total):
            for i in range(m - 1):
                hi = weights[i]
                lo = weights[i + 1]
                a = (code // hi) % n
                b = (code // lo) % n
                k = 2 * (a * n + b)
                other = code + (r[k] - a) * hi + (r[k + 1] - b) * lo
                if other == code:
                    continue
                ra = _find(parent, code)
                rb = _find(parent, other)
                if ra < rb:
                    parent[rb] = ra
                elif rb < ra:
                    parent[ra] = rb
        for code in range(total):
            parent[code] = _find(parent, code)
    return out


def orbit_members(rflat, long long n, word, long long guard):
    cdef const long long[:] r = rflat
    cdef int m = len(word)
    cdef int i
    cdef long long k
    cdef tuple w, v
    start = tuple(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(m - 1):
                k = 2 * (<long long>w[i] * n + <long long>w[i + 1])
                v = w[:i] + (r[k], r[k + 1]) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > guard:
                        return None
                    nxt.append(v)
        frontier = nxt
    return seen


def braided(rflat, long long n):
    cdef const long long[:] r = rflat
    cdef long long x, y, z, a, b, c, p, q, s, k
    for x in range(n):
        for y in range(n):
            for z in range(n):
                k = 2 * (x * n + y)
                a = r[k]; b = r[k + 1]; c = z
                k = 2 * (b * n + c)
                b = r[k]; c = r[k + 1]
                k = 2 * (a * n + b)
                a = r[k]; b = r[k + 1]
                k = 2 * (y * n + z)
                p = x; q = r[k]; s = r[k + 1]
                k = 2 * (p * n + q)
                p = r[k]; q = r[k + 1]
                k = 2 * (q * n + s)
                q = r[k]; s = r[k + 1]
                if a != p or b != q or c != s:
                    return False
    return True
