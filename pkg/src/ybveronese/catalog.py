"""Exhaustive enumeration of small solutions and the JSON solution file format."""

from __future__ import annotations

import itertools
import json
from typing import Iterable

from .errors import BoundExceeded, NonBijectiveError, YBXError
from .solution import Solution, is_square_free, relabel, validate

FORMAT = "ybx-solution-v1"
DEFAULT_BOUND = 3


class ParseError(YBXError, ValueError):
    """A solution file is not well-formed."""


def _from_left_action(n: int, left: tuple[tuple[int, ...], ...]) -> Solution | None:
    # involutivity forces x^y = L_{L_x(y)}^{-1}(x)
    inverse = []
    for row in left:
        inv = [0] * n
        for y, v in enumerate(row, start=1):
            inv[v - 1] = y
        inverse.append(inv)
    table = tuple(
        tuple((left[x][y], inverse[left[x][y] - 1][x]) for y in range(n)) for x in range(n)
    )
    try:
        return Solution(n, table)
    except NonBijectiveError:
        return None


def canonical_form(s: Solution) -> Solution:
    """The relabeling of ``s`` with the smallest flattened table."""
    return min((relabel(s, p) for p in itertools.permutations(range(1, s.n + 1))), key=Solution.flat)


def enumerate_solutions(n: int, bound: int = DEFAULT_BOUND, canonical: bool = False) -> list[Solution]:
    """All solutions of order ``n`` sorted by flattened table.

    The search runs over left-action tables whose rows are permutations;
    the right action is then determined by involutivity.  With
    ``canonical`` set, one representative per relabeling class is kept.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds the enumeration bound {bound}")
    perms = list(itertools.permutations(range(1, n + 1)))
    found = []
    for left in itertools.product(perms, repeat=n):
        s = _from_left_action(n, left)
        if s is not None and validate(s).is_solution:
            found.append(s)
    if canonical:
        found = list({canonical_form(s) for s in found})
    return sorted(found, key=Solution.flat)


def pbw_not_square_free_search(n: int, bound: int = DEFAULT_BOUND) -> list[Solution]:
    """Solutions of order ``n`` that are PBW for some enumeration of the
    generators yet are not square-free."""
    from .rewrite import pbw_enumeration_search

    return [
        s
        for s in enumerate_solutions(n, bound)
        if not is_square_free(s) and pbw_enumeration_search(s) is not None
    ]


def to_dict(s: Solution) -> dict:
    return {"format": FORMAT, "n": s.n, "r": [[list(p) for p in row] for row in s.table]}


def serialize(s: Solution) -> bytes:
    return json.dumps(to_dict(s), separators=(",", ":")).encode()


def from_dict(obj) -> Solution:
    if not isinstance(obj, dict):
        raise ParseError("solution file must be a JSON object")
    if obj.get("format") != FORMAT:
        raise ParseError(f"unsupported format {obj.get('format')!r}, expected {FORMAT!r}")
    n = obj.get("n")
    r = obj.get("r")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"field 'n' must be a positive integer, got {n!r}")
    if not isinstance(r, list) or len(r) != n:
        raise ParseError(f"field 'r' must be a list of {n} rows")
    table = []
    for x, row in enumerate(r, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {x} of 'r' must have {n} entries")
        out = []
        for y, pair in enumerate(row, start=1):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
            ):
                raise ParseError(f"r({x},{y}) must be a pair of integers, got {pair!r}")
            out.append(tuple(pair))
        table.append(tuple(out))
    return Solution(n, tuple(table))


def parse(data: bytes | str) -> Solution:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return from_dict(obj)


def export_catalog(solutions: Iterable[Solution]) -> bytes:
    return json.dumps([to_dict(s) for s in solutions], separators=(",", ":")).encode()


def parse_catalog(data: bytes | str) -> list[Solution]:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, list):
        raise ParseError("catalog must be a JSON array")
    return [from_dict(item) for item in obj]
