"""Pure-Python kernels.

Reference implementation of the hot loops; ``_kernels.pyx`` mirrors every
function here with the same signature and results.

Conventions shared with the compiled module:

* ``rflat`` is an ``array('q')`` of length ``2 * n * n`` holding the r-table
  with 0-based letters: ``r(a, b) = (rflat[2*(a*n+b)], rflat[2*(a*n+b)+1])``.
* A word of length ``m`` over ``{0..n-1}`` is coded as the base-``n`` integer
  with the first letter most significant, so for fixed length the integer
  order is the lexicographic order of words.
"""

from array import array


def orbit_min_labels(rflat, n, m):
    """Label every word of length ``m`` with the smallest code in its orbit.

    The orbits are those of the group generated by the maps ``r^{i,i+1}``.
    Union-find always keeps the smaller code as root, so the root of a class
    is its deg-lex minimum.
    """
    total = n**m
    parent = list(range(total))
    if m < 2:
        return array("q", parent)
    weights = [n ** (m - 1 - k) for k in range(m)]

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for code in range(total):
        for i in range(m - 1):
            hi, lo = weights[i], weights[i + 1]
            a = (code // hi) % n
            b = (code // lo) % n
            k = 2 * (a * n + b)
            other = code + (rflat[k] - a) * hi + (rflat[k + 1] - b) * lo
            if other == code:
                continue
            ra, rb = find(code), find(other)
            if ra < rb:
                parent[rb] = ra
            elif rb < ra:
                parent[ra] = rb
    return array("q", [find(c) for c in range(total)])


def orbit_members(rflat, n, word, guard):
    """Breadth-first closure of ``word`` (0-based letters) under all ``r^{i,i+1}``.

    Returns the set of member words as tuples.  Returns ``None`` when the
    visited set would exceed ``guard`` words.
    """
    start = tuple(word)
    seen = {start}
    frontier = [start]
    m = len(start)
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(m - 1):
                k = 2 * (w[i] * n + w[i + 1])
                v = w[:i] + (rflat[k], rflat[k + 1]) + w[i + 2 :]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > guard:
                        return None
                    nxt.append(v)
        frontier = nxt
    return seen


def braided(rflat, n):
    """Direct test of r12 r23 r12 == r23 r12 r23 on all n^3 triples."""
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # left side: r12, r23, r12
                k = 2 * (x * n + y)
                a, b, c = rflat[k], rflat[k + 1], z
                k = 2 * (b * n + c)
                b, c = rflat[k], rflat[k + 1]
                k = 2 * (a * n + b)
                a, b = rflat[k], rflat[k + 1]
                # right side: r23, r12, r23
                k = 2 * (y * n + z)
                p, q, s = x, rflat[k], rflat[k + 1]
                k = 2 * (p * n + q)
                p, q = rflat[k], rflat[k + 1]
                k = 2 * (q * n + s)
                q, s = rflat[k], rflat[k + 1]
                if (a, b, c) != (p, q, s):
                    return False
    return True
