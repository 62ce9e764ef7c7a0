"""Binomial rewriting and degree-bounded completion in the free monoid.

Every ideal handled here is generated by differences ``u - v`` of words of
equal length with coefficient one, and the S-polynomial of two such binomials
is again such a binomial.  Completion therefore works on pairs of words only:
a rule ``lhs -> rhs`` stands for the binomial ``lhs - rhs`` with ``lhs`` its
deg-lex leading word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundExceeded
from .solution import (
    Solution,
    is_square_free,
    r_orbits,
    relabel,
)
from .words import Word, deglex_key, normal_monomials, ordered_monomials, render


@dataclass(frozen=True)
class BinomialRelation:
    """The binomial ``lhs - rhs`` with ``lhs`` strictly deg-lex larger."""

    lhs: Word
    rhs: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if len(self.lhs) != len(self.rhs):
            raise ValueError(f"unequal lengths in {self.lhs} -> {self.rhs}")
        if not deglex_key(self.lhs) > deglex_key(self.rhs):
            raise ValueError(f"{self.lhs} is not deg-lex above {self.rhs}")

    @classmethod
    def oriented(cls, u: Sequence[int], v: Sequence[int]) -> BinomialRelation | None:
        """The relation ``u = v`` with its leading word first; ``None`` if ``u == v``."""
        u, v = tuple(u), tuple(v)
        if u == v:
            return None
        if deglex_key(u) < deglex_key(v):
            u, v = v, u
        return cls(u, v)

    @property
    def degree(self) -> int:
        return len(self.lhs)

    def render(self, symbol: str = "x", arrow: str = " -> ") -> str:
        return f"{render(self.lhs, symbol)}{arrow}{render(self.rhs, symbol)}"

    def as_dict(self) -> dict:
        return {"lhs": list(self.lhs), "rhs": list(self.rhs)}


def rule_order(rel: BinomialRelation):
    """Canonical listing order: by degree, then leading word descending."""
    return (len(rel.lhs), tuple(-c for c in rel.lhs))


@dataclass(frozen=True)
class RewriteSystem:
    """A list of oriented binomial rules plus the state of its completion.

    ``complete_up_to`` is the degree through which every overlap is known to
    resolve.  ``confluent`` is set when every overlap of the final rules, of
    any length, resolves; the rules are then a Gröbner basis of the ideal.
    """

    rules: tuple[BinomialRelation, ...]
    max_degree: int
    complete_up_to: int
    reduced: bool
    confluent: bool = False

    @property
    def bound_exhausted(self) -> bool:
        return not self.confluent

    def as_dict(self) -> dict:
        return {
            "rules": [r.as_dict() for r in self.rules],
            "complete_up_to": self.complete_up_to,
            "max_degree": self.max_degree,
            "confluent": self.confluent,
            "reduced": self.reduced,
        }


def relations_from_solution(s: Solution) -> list[BinomialRelation]:
    """One binomial per two-element r-orbit of X x X."""
    rels = []
    for orb in r_orbits(s):
        if len(orb) == 1:
            continue
        if len(orb) != 2:
            raise ValueError(f"r-orbit {orb} has {len(orb)} elements; r is not involutive")
        rel = BinomialRelation.oriented(orb[0], orb[1])
        if rel is not None:
            rels.append(rel)
    return sorted(rels, key=rule_order)


def _rules_of(sys_or_rules) -> Sequence[BinomialRelation]:
    if isinstance(sys_or_rules, RewriteSystem):
        return sys_or_rules.rules
    return sys_or_rules


def _find_redex(rules: Sequence[BinomialRelation], w: Word):
    for pos in range(len(w)):
        for idx, rule in enumerate(rules):
            k = len(rule.lhs)
            if w[pos : pos + k] == rule.lhs:
                return pos, rule
    return None


def reduce(sys: RewriteSystem | Sequence[BinomialRelation], w: Sequence[int]) -> Word:
    """Rewrite the leftmost redex (lowest rule index on ties) until none is left.

    Each step lowers the word in deg-lex order at fixed length, so this
    terminates for any finite rule list.
    """
    rules = _rules_of(sys)
    w = tuple(w)
    while True:
        hit = _find_redex(rules, w)
        if hit is None:
            return w
        pos, rule = hit
        w = w[:pos] + rule.rhs + w[pos + len(rule.lhs) :]


def interreduce(rules: Iterable[BinomialRelation]) -> list[BinomialRelation]:
    """Reduced form: no leading word contains another, every rhs is irreducible."""
    work = sorted(set(rules), key=rule_order)
    changed = True
    while changed:
        changed = False
        for i, rule in enumerate(work):
            others = work[:i] + work[i + 1 :]
            if _find_redex(others, rule.lhs) is not None:
                new = BinomialRelation.oriented(reduce(others, rule.lhs), reduce(others, rule.rhs))
                work = others + ([new] if new is not None else [])
                changed = True
                break
            rhs = reduce(others, rule.rhs)
            if rhs != rule.rhs:
                new = BinomialRelation.oriented(rule.lhs, rhs)
                work = others + ([new] if new is not None else [])
                changed = True
                break
        work = sorted(set(work), key=rule_order)
    return work


def overlaps(r1: BinomialRelation, r2: BinomialRelation):
    """Proper overlaps: a nonempty proper suffix of ``r1.lhs`` equal to a prefix of ``r2.lhs``.

    Yields ``(k, word)`` where ``k`` is the overlap length and ``word`` the
    ambiguous word ``r1.lhs + r2.lhs[k:]``.
    """
    a, b = r1.lhs, r2.lhs
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield k, a + b[k:]


def critical_pairs(rules: Sequence[BinomialRelation], degree: int | None = None):
    """Unresolved overlap ambiguities, optionally only those of one length."""
    out = []
    for r1, r2 in itertools.product(rules, repeat=2):
        for k, word in overlaps(r1, r2):
            if degree is not None and len(word) != degree:
                continue
            left = reduce(rules, r1.rhs + r2.lhs[k:])
            right = reduce(rules, r1.lhs[:-k] + r2.rhs)
            if left != right:
                out.append((word, left, right))
    return out


def complete(rules: Iterable[BinomialRelation], max_degree: int) -> RewriteSystem:
    """Resolve overlaps degree by degree up to ``max_degree``.

    Each unresolved overlap contributes the binomial of its two reductions.
    The result is inter-reduced.  If afterwards no overlap of any length is
    left unresolved the system is marked ``confluent``; otherwise it is only
    guaranteed through ``max_degree``.
    """
    work = interreduce(rules)
    start = min((r.degree for r in work), default=max_degree) + 1
    for deg in range(start, max_degree + 1):
        while True:
            new = []
            for _, left, right in critical_pairs(work, deg):
                rel = BinomialRelation.oriented(left, right)
                if rel is not None:
                    new.append(rel)
            if not new:
                break
            work = interreduce(work + new)
    confluent = not critical_pairs(work)
    return RewriteSystem(
        rules=tuple(work),
        max_degree=max_degree,
        complete_up_to=max_degree,
        reduced=True,
        confluent=confluent,
    )


def is_pbw(s: Solution, max_check_degree: int = 3) -> bool:
    """Whether the defining relations are already a Gröbner basis for this enumeration.

    For quadratic relations it is enough that no rule of degree 3 appears.
    """
    quadratic = relations_from_solution(s)
    sys = complete(quadratic, max_check_degree)
    return all(rule.degree < 3 for rule in sys.rules)


def is_binomial_skew_polynomial(s: Solution) -> bool:
    """Relations ``x_j x_i -> x_i' x_j'`` with ``j > i``, ``j > i'``, ``i' < j'``,
    every ordered ``x_i x_j`` (``i < j``) appearing as a right-hand side, and
    the relations forming a Gröbner basis."""
    rels = relations_from_solution(s)
    n = s.n
    if len(rels) != n * (n - 1) // 2:
        return False
    rhs_seen = set()
    for rel in rels:
        (j, i), (ip, jp) = rel.lhs, rel.rhs
        if not (j > i and j > ip and ip < jp):
            return False
        rhs_seen.add(rel.rhs)
    if rhs_seen != {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}:
        return False
    return is_pbw(s)


DEFAULT_SEARCH_BOUND = 8


def pbw_enumeration_search(s: Solution, bound: int = DEFAULT_SEARCH_BOUND) -> tuple[int, ...] | None:
    """First relabeling (in lexicographic order of permutations) making the relations PBW.

    The permutation ``p`` renames ``x_k`` to ``x_{p[k-1]}``.
    """
    if s.n > bound:
        raise BoundExceeded(f"order {s.n} exceeds the enumeration search bound {bound}")
    for perm in itertools.permutations(range(1, s.n + 1)):
        if is_pbw(relabel(s, perm)):
            return perm
    return None


@dataclass(frozen=True)
class NormalBasisGateReport:
    """Outcome of the checks for algebras whose normal basis is the ordered terms.

    ``applicable`` records whether the normal monomials agree with the ordered
    terms through degree 3; when it is false the remaining flags are still
    filled in but carry no claim.
    """

    applicable: bool
    pbw: bool
    square_free: bool
    binomial_skew: bool
    consistent: bool
    mismatched_degrees: tuple[int, ...] = ()

    @property
    def witness_degree(self) -> int | None:
        return self.mismatched_degrees[0] if self.mismatched_degrees else None

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "pbw": self.pbw,
            "square_free": self.square_free,
            "binomial_skew": self.binomial_skew,
            "consistent": self.consistent,
            "mismatched_degrees": list(self.mismatched_degrees),
        }


def normal_basis_gate(s: Solution, max_degree: int = 3) -> NormalBasisGateReport:
    """If the ordered terms are the normal basis, the algebra is PBW and
    square-freeness is equivalent to being a binomial skew polynomial ring."""
    mismatched = tuple(
        m for m in range(1, max_degree + 1) if normal_monomials(s, m) != ordered_monomials(s.n, m)
    )
    applicable = not mismatched
    pbw = is_pbw(s)
    sf = is_square_free(s)
    bsp = is_binomial_skew_polynomial(s)
    consistent = (not applicable) or (pbw and sf == bsp)
    return NormalBasisGateReport(applicable, pbw, sf, bsp, consistent, mismatched)
