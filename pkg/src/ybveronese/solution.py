"""Finite quadratic sets (X, r) and their defining properties.

Generators are the integers ``1..n``; ``r(x, y) = (L[x][y], R[y][x])`` where
``L[x]`` is the left action of ``x`` and ``R[y]`` the right action of ``y``.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass, field
from math import comb, lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import NonBijectiveError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Solution:
    """A quadratic set of order ``n`` given by its full r-table.

    ``table[x-1][y-1]`` is ``r(x, y)``.  Construction rejects tables that are
    out of range or not a bijection of ``{1..n}^2``; all other properties
    (involutivity, nondegeneracy, the braid relation) are reported by
    :func:`validate`.
    """

    n: int
    table: tuple[tuple[Pair, ...], ...]
    left_action: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    right_action: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    rflat: array = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise NonBijectiveError(f"order must be a positive integer, got {n!r}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NonBijectiveError(f"r-table must be {n}x{n}")
        table = tuple(tuple((int(p[0]), int(p[1])) for p in row) for row in self.table)
        object.__setattr__(self, "table", table)

        seen: dict[Pair, Pair] = {}
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                img = table[x - 1][y - 1]
                if not (1 <= img[0] <= n and 1 <= img[1] <= n):
                    raise NonBijectiveError(f"r{(x, y)} = {img} is out of range 1..{n}")
                if img in seen:
                    raise NonBijectiveError(
                        f"non-bijective: {seen[img]} and {(x, y)} both map to {img}"
                    )
                seen[img] = (x, y)

        left = tuple(tuple(table[x][y][0] for y in range(n)) for x in range(n))
        # row y of right_action is the map x -> x^y
        right = tuple(tuple(table[x][y][1] for x in range(n)) for y in range(n))
        flat = array("q", [0] * (2 * n * n))
        for x in range(n):
            for y in range(n):
                k = 2 * (x * n + y)
                flat[k] = table[x][y][0] - 1
                flat[k + 1] = table[x][y][1] - 1
        object.__setattr__(self, "left_action", left)
        object.__setattr__(self, "right_action", right)
        object.__setattr__(self, "rflat", flat)

    @classmethod
    def from_function(cls, n: int, r) -> Solution:
        """Tabulate a callable ``r(x, y) -> (x', y')`` on ``{1..n}^2``."""
        return cls(n, tuple(tuple(tuple(r(x, y)) for y in range(1, n + 1)) for x in range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[Pair, Pair], default_swap: bool = False) -> Solution:
        """Build from an explicit dict of images.

        Pairs missing from ``mapping`` are fixed, or swapped when
        ``default_swap`` is set.
        """

        def r(x, y):
            if (x, y) in mapping:
                return mapping[(x, y)]
            return (y, x) if default_swap else (x, y)

        return cls.from_function(n, r)

    def r(self, x: int, y: int) -> Pair:
        return self.table[x - 1][y - 1]

    def left(self, x: int, y: int) -> int:
        """The left action ``x`` on ``y``."""
        return self.table[x - 1][y - 1][0]

    def right(self, x: int, y: int) -> int:
        """The right action of ``y`` on ``x``."""
        return self.table[x - 1][y - 1][1]

    def pairs(self) -> Iterable[Pair]:
        return itertools.product(range(1, self.n + 1), repeat=2)

    def flat(self) -> tuple[int, ...]:
        """The table flattened row-major, used for deterministic ordering."""
        return tuple(c for row in self.table for p in row for c in p)


@dataclass(frozen=True)
class ValidationReport:
    involutive: bool
    nondegenerate: bool
    braided: bool
    square_free: bool
    condition_O: bool
    is_solution: bool
    fixed_points: list[Pair]
    permutation: tuple[int, ...] | None

    def as_dict(self) -> dict:
        return {
            "involutive": self.involutive,
            "nondegenerate": self.nondegenerate,
            "braided": self.braided,
            "square_free": self.square_free,
            "condition_O": self.condition_O,
            "is_solution": self.is_solution,
            "fixed_points": [list(p) for p in self.fixed_points],
            "permutation": list(self.permutation) if self.permutation is not None else None,
        }


def is_involutive(s: Solution) -> bool:
    return all(s.r(*s.r(x, y)) == (x, y) for x, y in s.pairs())


def _is_permutation(row: Sequence[int], n: int) -> bool:
    return sorted(row) == list(range(1, n + 1))


def is_nondegenerate(s: Solution) -> bool:
    return all(_is_permutation(row, s.n) for row in s.left_action) and all(
        _is_permutation(row, s.n) for row in s.right_action
    )


def is_braided_direct(s: Solution) -> bool:
    """Braid relation checked by composing the maps on every triple."""
    return bool(kernels.braided(s.rflat, s.n))


def is_braided_lr(s: Solution) -> bool:
    """Braid relation checked through the action identities l1, r1 and lr3."""
    L, R = s.left, s.right
    for x, y, z in itertools.product(range(1, s.n + 1), repeat=3):
        xy = R(x, y)
        if L(x, L(y, z)) != L(L(x, y), L(xy, z)):
            return False
        if R(xy, z) != R(R(x, L(y, z)), R(y, z)):
            return False
        if R(L(x, y), L(xy, z)) != L(R(x, L(y, z)), R(y, z)):
            return False
    return True


def is_square_free(s: Solution) -> bool:
    return all(s.r(x, x) == (x, x) for x in range(1, s.n + 1))


def is_trivial(s: Solution) -> bool:
    return all(s.r(x, y) == (y, x) for x, y in s.pairs())


def fixed_points(s: Solution) -> list[Pair]:
    """All pairs with ``r(x, y) = (x, y)``, in lexicographic order."""
    return [(x, y) for x, y in s.pairs() if s.r(x, y) == (x, y)]


def r_orbits(s: Solution) -> list[tuple[Pair, ...]]:
    """Orbits of the cyclic group generated by r on X x X, each sorted."""
    seen: set[Pair] = set()
    orbits = []
    for p in s.pairs():
        if p in seen:
            continue
        orb = [p]
        q = s.r(*p)
        while q != p:
            orb.append(q)
            q = s.r(*q)
        seen.update(orb)
        orbits.append(tuple(sorted(orb)))
    return orbits


def check_condition_O(s: Solution) -> bool:
    """For every (a, b) there is exactly one (c, d) with ``r(c, a) = (d, b)``."""
    counts: dict[Pair, int] = {}
    for c, a in s.pairs():
        d, b = s.r(c, a)
        counts[(a, b)] = counts.get((a, b), 0) + 1
    return all(counts.get(p, 0) == 1 for p in s.pairs())


def detect_permutation_solution(s: Solution) -> tuple[int, ...] | None:
    """Return ``f`` (as the tuple ``f(1), .., f(n)``) if ``r(x,y) = (f(y), f^-1(x))``."""
    rows = set(s.left_action)
    if len(rows) != 1:
        return None
    f = s.left_action[0]
    if not _is_permutation(f, s.n):
        return None
    finv = [0] * s.n
    for i, fi in enumerate(f, start=1):
        finv[fi - 1] = i
    for x, y in s.pairs():
        if s.r(x, y) != (f[y - 1], finv[x - 1]):
            return None
    return tuple(f)


def validate(s: Solution) -> ValidationReport:
    direct = is_braided_direct(s)
    via_actions = is_braided_lr(s)
    if direct != via_actions:
        raise AssertionError(
            f"braid tests disagree (direct={direct}, l1/r1/lr3={via_actions}) for {s}"
        )
    inv = is_involutive(s)
    nondeg = is_nondegenerate(s)
    is_sol = inv and nondeg and direct
    fps = fixed_points(s)
    return ValidationReport(
        involutive=inv,
        nondegenerate=nondeg,
        braided=direct,
        square_free=is_square_free(s),
        condition_O=check_condition_O(s),
        is_solution=is_sol,
        fixed_points=fps,
        permutation=detect_permutation_solution(s),
    )


def orbit_counts(s: Solution) -> tuple[int, int]:
    """Number of two-element r-orbits and total number of r-orbits."""
    orbits = r_orbits(s)
    return sum(1 for o in orbits if len(o) == 2), len(orbits)


def expected_orbit_counts(n: int) -> tuple[int, int]:
    return comb(n, 2), comb(n + 1, 2)


def make_trivial(n: int) -> Solution:
    return Solution.from_function(n, lambda x, y: (y, x))


def make_permutation(n: int, f: Sequence[int]) -> Solution:
    """Permutation solution ``r(x, y) = (f(y), f^-1(x))``; ``f`` given as images of 1..n."""
    f = tuple(int(v) for v in f)
    if len(f) != n or not _is_permutation(f, n):
        raise ValueError(f"{f} is not a permutation of 1..{n}")
    finv = [0] * n
    for i, fi in enumerate(f, start=1):
        finv[fi - 1] = i
    return Solution.from_function(n, lambda x, y: (f[y - 1], finv[x - 1]))


def relabel(s: Solution, perm: Sequence[int]) -> Solution:
    """Rename generator ``x`` to ``perm[x-1]``."""
    perm = tuple(perm)
    if not _is_permutation(perm, s.n):
        raise ValueError(f"{perm} is not a permutation of 1..{s.n}")
    inv = [0] * s.n
    for i, p in enumerate(perm, start=1):
        inv[p - 1] = i

    def r(x, y):
        a, b = s.r(inv[x - 1], inv[y - 1])
        return perm[a - 1], perm[b - 1]

    return Solution.from_function(s.n, r)


def swap_conjugate(s: Solution) -> Solution:
    """The quadratic set ``tau r tau`` where ``tau`` swaps the two factors."""
    return Solution.from_function(s.n, lambda x, y: tuple(reversed(s.r(y, x))))


def permutation_order(f: Sequence[int]) -> int:
    """Order of a permutation given as images of ``1..n``."""
    seen: set[int] = set()
    order = 1
    for start in range(1, len(f) + 1):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = f[x - 1]
            length += 1
        order = lcm(order, length)
    return order
