"""Words over X, deg-lex order, orbits of the maps r^{i,i+1}, and normal forms.

A word is a tuple of generator indices ``1..n``; the empty tuple is the
monoid unit.  Two words are equal in the monoid S(X, r) exactly when one is
reachable from the other by replacing an adjacent pair ``xy`` with ``r(x, y)``,
so the normal form of a word is the deg-lex minimum of its orbit.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from . import kernels
from .errors import GuardExceeded
from .solution import Solution

Word = tuple[int, ...]

DEFAULT_GUARD = 10**6
# X^m is tabulated once per (solution, m) when it has at most this many words
TABLE_LIMIT = 1 << 21


def guard_limit(guard: int | None = None) -> int:
    """Resolve the orbit-size guard: explicit value, ``YBX_GUARD_LIMIT``, or the default."""
    if guard is not None:
        return guard
    env = os.environ.get("YBX_GUARD_LIMIT")
    return int(env) if env else DEFAULT_GUARD


def deglex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    return (len(w), tuple(w))


def render(w: Sequence[int], symbol: str = "x") -> str:
    """Text form of a word, e.g. ``x3*x1``; the empty word renders as ``1``."""
    if not w:
        return "1"
    return "*".join(f"{symbol}{c}" for c in w)


def check_word(s: Solution, w: Sequence[int]) -> Word:
    w = tuple(int(c) for c in w)
    for c in w:
        if not 1 <= c <= s.n:
            raise ValueError(f"letter {c} out of range 1..{s.n}")
    return w


def encode(w: Sequence[int], n: int) -> int:
    code = 0
    for c in w:
        code = code * n + (c - 1)
    return code


def decode(code: int, n: int, m: int) -> Word:
    out = [0] * m
    for k in range(m - 1, -1, -1):
        code, digit = divmod(code, n)
        out[k] = digit + 1
    return tuple(out)


def words_of_length(n: int, m: int) -> Iterable[Word]:
    """All of X^m in deg-lex (= lexicographic) order."""
    return itertools.product(range(1, n + 1), repeat=m)


def apply_r_at(s: Solution, w: Sequence[int], i: int) -> Word:
    """Apply r to the letters at 1-based positions ``i, i+1``."""
    w = tuple(w)
    if not 1 <= i <= len(w) - 1:
        raise IndexError(f"position {i} out of range for a word of length {len(w)}")
    return w[: i - 1] + s.r(w[i - 1], w[i]) + w[i + 1 :]


@dataclass(frozen=True)
class OrbitReport:
    representative: Word
    members: frozenset[Word]
    min_element: Word


def orbit(s: Solution, w: Sequence[int], guard: int | None = None) -> OrbitReport:
    """Breadth-first closure of ``w`` under every ``r^{i,i+1}``."""
    w = check_word(s, w)
    limit = guard_limit(guard)
    zero_based = tuple(c - 1 for c in w)
    found = kernels.orbit_members(s.rflat, s.n, zero_based, limit)
    if found is None:
        raise GuardExceeded(f"orbit of {render(w)} exceeds {limit} words")
    members = frozenset(tuple(c + 1 for c in v) for v in found)
    return OrbitReport(representative=w, members=members, min_element=min(members))


@lru_cache(maxsize=64)
def _orbit_table(s: Solution, m: int):
    return kernels.orbit_min_labels(s.rflat, s.n, m)


def orbit_labels(s: Solution, m: int, guard: int | None = None):
    """For every word code of length ``m``, the code of its orbit minimum."""
    limit = guard_limit(guard)
    if s.n**m > limit:
        raise GuardExceeded(f"X^{m} has {s.n**m} words, above the guard {limit}")
    return _orbit_table(s, m)


def normal_form(s: Solution, w: Sequence[int], guard: int | None = None) -> Word:
    """Deg-lex minimum of the orbit of ``w``; equal to ``w`` in S(X, r)."""
    w = check_word(s, w)
    m = len(w)
    if m < 2:
        return w
    if s.n**m <= min(TABLE_LIMIT, guard_limit(guard)):
        return decode(_orbit_table(s, m)[encode(w, s.n)], s.n, m)
    return orbit(s, w, guard).min_element


def is_normal(s: Solution, w: Sequence[int]) -> bool:
    return normal_form(s, w) == tuple(w)


def normal_monomials(s: Solution, m: int, guard: int | None = None) -> list[Word]:
    """The orbit minima of X^m in ascending deg-lex order.

    For a solution of order n there are C(n+m-1, m) of them.
    """
    if m == 0:
        return [()]
    labels = orbit_labels(s, m, guard)
    return [decode(code, s.n, m) for code, label in enumerate(labels) if code == label]


def expected_dimension(n: int, m: int) -> int:
    return comb(n + m - 1, m)


def ordered_monomials(n: int, m: int) -> list[Word]:
    """Terms x_1^a1 ... x_n^an of length m, ascending."""
    return [tuple(c) for c in itertools.combinations_with_replacement(range(1, n + 1), m)]


def _left_by_letter(s: Solution, c: int, b: Sequence[int]) -> list[int]:
    out = []
    for letter in b:
        out.append(s.left(c, letter))
        c = s.right(c, letter)
    return out


def _right_by_letter(s: Solution, a: Sequence[int], t: int) -> list[int]:
    out = list(a)
    for k in range(len(a) - 1, -1, -1):
        out[k] = s.right(a[k], t)
        t = s.left(a[k], t)
    return out


def left_action_word(s: Solution, a: Sequence[int], b: Sequence[int]) -> Word:
    """The left action of the word ``a`` on the word ``b``.

    A letter acts letter by letter while being acted on from the right,
    ``c(b1 b2 ..) = (c b1)(c^b1 b2)..``, and a word acts through its letters
    from the right: ``(a1 a2..ap) b = a1 (a2..ap b)``.
    """
    out = list(b)
    for c in reversed(tuple(a)):
        out = _left_by_letter(s, c, out)
    return tuple(out)


def right_action_word(s: Solution, a: Sequence[int], b: Sequence[int]) -> Word:
    """The right action of the word ``b`` on the word ``a``; mirror of :func:`left_action_word`."""
    out = list(a)
    for t in b:
        out = _right_by_letter(s, out, t)
    return tuple(out)


def braid_words(s: Solution, a: Sequence[int], b: Sequence[int]) -> tuple[Word, Word]:
    """Move ``b`` across ``a`` inside ``ab`` one adjacent swap at a time.

    The resulting word splits as ``(a b', a^b)`` with the same lengths as
    ``(b, a)``.  Independent of the recursion in :func:`left_action_word`.
    """
    w = list(a) + list(b)
    p, q = len(a), len(b)
    for j in range(q):
        # letter originally at p+j sits at p+j; move it left to position j
        for pos in range(p + j - 1, j - 1, -1):
            w[pos], w[pos + 1] = s.r(w[pos], w[pos + 1])
    return tuple(w[:q]), tuple(w[q:])


def check_M3(s: Solution, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``(a b)(a^b)`` and ``ab`` are equal in S(X, r)."""
    a, b = tuple(a), tuple(b)
    lhs = left_action_word(s, a, b) + right_action_word(s, a, b)
    return normal_form(s, lhs) == normal_form(s, a + b)
