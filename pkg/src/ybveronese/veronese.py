"""The d-Veronese solution, the presentation of the Veronese subalgebra, and
the kernel of the Veronese map.

The degree-d normal monomials ``w_1 < ... < w_N`` carry the solution
``rho(w_i, w_j) = (Nor(w_i acting on w_j), Nor(w_i acted on by w_j))``.
Everything else in this module is read off that table together with normal
forms in degree ``2d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import NotApplicable
from .rewrite import BinomialRelation, RewriteSystem, complete, reduce
from .solution import (
    Solution,
    detect_permutation_solution,
    is_square_free,
    is_trivial,
    permutation_order,
)
from .words import (
    Word,
    expected_dimension,
    left_action_word,
    normal_form,
    normal_monomials,
    render,
    right_action_word,
)

IndexPair = tuple[int, int]
Relation = tuple[IndexPair, IndexPair]


@dataclass(frozen=True)
class VeroneseData:
    """Normal monomials of degree ``d`` and the solution ``rho`` they carry.

    ``rho[i-1][j-1]`` is the index pair of ``rho(w_i, w_j)``.
    """

    n: int
    d: int
    basis: tuple[Word, ...]
    rho: tuple[tuple[IndexPair, ...], ...]
    H: frozenset[IndexPair]
    P: frozenset[IndexPair]
    C: frozenset[IndexPair]
    MV: frozenset[IndexPair]

    @property
    def N(self) -> int:
        return len(self.basis)

    def index(self, w: Sequence[int]) -> int:
        return self.basis.index(tuple(w)) + 1

    def rho_at(self, i: int, j: int) -> IndexPair:
        return self.rho[i - 1][j - 1]

    def fixed_points(self) -> list[IndexPair]:
        N = self.N
        return [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if self.rho_at(i, j) == (i, j)]

    def expected_sizes(self) -> dict[str, int]:
        N, n, d = self.N, self.n, self.d
        c = comb(n + 2 * d - 1, n - 1)
        return {"H": comb(N, 2), "P": comb(N + 1, 2), "C": c, "MV": comb(N + 1, 2) - c}

    def sizes(self) -> dict[str, int]:
        return {"H": len(self.H), "P": len(self.P), "C": len(self.C), "MV": len(self.MV)}


def _normal_index(s: Solution, index: dict[Word, int], w: Sequence[int], guard) -> int:
    return index[normal_form(s, w, guard)]


def build_veronese(s: Solution, d: int, guard: int | None = None) -> VeroneseData:
    """Tabulate ``rho`` on the degree-``d`` normal monomials and the sets H, P, C, MV.

    ``rho`` comes from the extended actions; every entry is cross-checked
    against the monoid itself (the image must equal the input in degree
    ``2d``), which fails loudly if the input is not a solution.
    """
    if d < 1:
        raise ValueError(f"degree must be at least 1, got {d}")
    basis = tuple(normal_monomials(s, d, guard))
    index = {w: k for k, w in enumerate(basis, start=1)}
    N = len(basis)
    rho = []
    for wi in basis:
        row = []
        for wj in basis:
            a = left_action_word(s, wi, wj)
            b = right_action_word(s, wi, wj)
            row.append((_normal_index(s, index, a, guard), _normal_index(s, index, b, guard)))
            if normal_form(s, a + b, guard) != normal_form(s, wi + wj, guard):
                raise AssertionError(f"extended actions disagree with the monoid on {render(wi)}, {render(wj)}")
        rho.append(tuple(row))
    rho_t = tuple(rho)

    everything = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    H = frozenset((j, i) for j, i in everything if j > rho_t[j - 1][i - 1][0])
    P = frozenset(p for p in everything if p not in H)
    C = frozenset(
        (i, j) for i, j in P if normal_form(s, basis[i - 1] + basis[j - 1], guard) == basis[i - 1] + basis[j - 1]
    )
    return VeroneseData(n=s.n, d=d, basis=basis, rho=rho_t, H=H, P=P, C=C, MV=P - C)


def _sort_relations(rels: Iterable[Relation]) -> list[Relation]:
    return sorted(rels, key=lambda rel: (-rel[0][0], -rel[0][1]))


def _factor(data: VeroneseData, w: Word) -> IndexPair:
    d = data.d
    return data.index(w[:d]), data.index(w[d:])


@dataclass(frozen=True)
class VeronesePresentation:
    """Quadratic relations of the Veronese subalgebra on the generators ``w_i``.

    Relations are ``(lhs, rhs)`` pairs of index pairs; ``kernel`` and
    ``A_Y_relations`` are the same lists read over ``y_1 .. y_N``.
    """

    data: VeroneseData
    R_a: tuple[Relation, ...]
    R_b: tuple[Relation, ...]
    R_1a: tuple[Relation, ...]

    @property
    def d(self) -> int:
        return self.data.d

    @property
    def N(self) -> int:
        return self.data.N

    @property
    def generators(self) -> list[tuple[int, Word]]:
        return list(enumerate(self.data.basis, start=1))

    @property
    def kernel(self) -> tuple[Relation, ...]:
        return self.R_b

    @property
    def A_Y_relations(self) -> tuple[Relation, ...]:
        return self.R_a

    @property
    def R(self) -> tuple[Relation, ...]:
        return self.R_a + self.R_b

    @property
    def R_1(self) -> tuple[Relation, ...]:
        return self.R_1a + self.R_b

    def as_dict(self) -> dict:
        def rel(r):
            return {"lhs": list(r[0]), "rhs": list(r[1])}

        return {
            "d": self.d,
            "N": self.N,
            "generators": [{"y": k, "w": list(w)} for k, w in self.generators],
            "R_a": [rel(r) for r in self.R_a],
            "R_b": [rel(r) for r in self.R_b],
            "R_1a": [rel(r) for r in self.R_1a],
            "kernel": [rel(r) for r in self.kernel],
        }


def render_relation(rel: Relation, symbol: str = "w") -> str:
    (a, b), (c, e) = rel
    return f"{symbol}{a}*{symbol}{b} - {symbol}{c}*{symbol}{e}"


def presentation(s: Solution, d: int, guard: int | None = None, data: VeroneseData | None = None) -> VeronesePresentation:
    if data is None:
        data = build_veronese(s, d, guard)
    basis = data.basis
    R_a = [((j, i), data.rho_at(j, i)) for j, i in data.H]
    R_b = [((i, j), _factor(data, normal_form(s, basis[i - 1] + basis[j - 1], guard))) for i, j in data.MV]
    R_1a = [((j, i), _factor(data, normal_form(s, basis[j - 1] + basis[i - 1], guard))) for j, i in data.H]
    return VeronesePresentation(
        data=data,
        R_a=tuple(_sort_relations(R_a)),
        R_b=tuple(_sort_relations(R_b)),
        R_1a=tuple(_sort_relations(R_1a)),
    )


def abstract_veronese_solution(s: Solution, d: int, guard: int | None = None) -> Solution:
    """``rho`` as a solution on the abstract symbols ``y_1 .. y_N``."""
    data = build_veronese(s, d, guard)
    return Solution(data.N, data.rho)


def relations_as_rules(rels: Iterable[Relation]) -> list[BinomialRelation]:
    out = []
    for lhs, rhs in rels:
        rule = BinomialRelation.oriented(lhs, rhs)
        if rule is not None:
            out.append(rule)
    return out


def degree_two_closure(rels: Iterable[Relation], N: int) -> dict[IndexPair, IndexPair]:
    """Reduce every y-pair by the given quadratic relations (no completion)."""
    rules = relations_as_rules(rels)
    return {(i, j): reduce(rules, (i, j)) for i in range(1, N + 1) for j in range(1, N + 1)}


def presentations_agree(pres: VeronesePresentation) -> bool:
    """``R_a + R_b`` and ``R_1a + R_b`` send every y-pair to the same word."""
    return degree_two_closure(pres.R, pres.N) == degree_two_closure(pres.R_1, pres.N)


def y_groebner_experiment(pres: VeronesePresentation, max_degree: int = 3) -> RewriteSystem:
    """Complete the y-relations together with the kernel generators.

    Whether the result is already quadratic is not known in general; the
    returned system records how far the check went.
    """
    return complete(relations_as_rules(pres.R), max_degree)


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    applicable: bool = True
    witness: object = None
    details: dict | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "applicable": self.applicable,
            "witness": self.witness,
            "details": self.details or {},
        }


def verify_veronese_map(s: Solution, d: int, guard: int | None = None) -> CheckReport:
    """Images of the A_Y relations and of the kernel generators vanish in A,
    and the number of kernel generators is ``C(N+1,2) - C(n+2d-1, n-1)``."""
    pres = presentation(s, d, guard)
    basis = pres.data.basis

    def vanishes(rel: Relation) -> bool:
        (a, b), (c, e) = rel
        return normal_form(s, basis[a - 1] + basis[b - 1], guard) == normal_form(s, basis[c - 1] + basis[e - 1], guard)

    for kind, rels in (("A_Y_relation", pres.A_Y_relations), ("kernel", pres.kernel)):
        for rel in rels:
            if not vanishes(rel):
                return CheckReport("veronese_map", False, witness={"kind": kind, "relation": [list(rel[0]), list(rel[1])]})
    N, n = pres.N, s.n
    expected = comb(N + 1, 2) - comb(n + 2 * d - 1, n - 1)
    details = {"kernel_size": len(pres.kernel), "expected_kernel_size": expected, "images_checked": len(pres.R)}
    if len(pres.kernel) != expected:
        return CheckReport("veronese_map", False, witness={"kernel_size": len(pres.kernel)}, details=details)
    return CheckReport("veronese_map", True, details=details)


def dveronese_square_free_check(s: Solution, d: int, guard: int | None = None) -> tuple[bool, bool]:
    """``(rho is square-free, that answer agrees with "s is trivial")``."""
    if not is_square_free(s):
        raise NotApplicable("input solution is not square-free")
    sq = is_square_free(abstract_veronese_solution(s, d, guard))
    return sq, sq == is_trivial(s)


def _letterwise(f: Sequence[int], power: int, w: Word) -> Word:
    out = []
    for c in w:
        for _ in range(power):
            c = f[c - 1]
        out.append(c)
    return tuple(out)


def permutation_veronese_check(s: Solution, d: int, guard: int | None = None) -> CheckReport:
    """For ``r(x,y) = (f(y), f^-1(x))``: ``rho`` is the permutation solution of
    ``f^d`` applied letterwise and normalized, trivial when ``ord(f) | d``."""
    f = detect_permutation_solution(s)
    if f is None:
        raise NotApplicable("input is not a permutation solution")
    data = build_veronese(s, d, guard)
    order = permutation_order(f)
    inv_power = (-d) % order
    for i, wi in enumerate(data.basis, start=1):
        for j, wj in enumerate(data.basis, start=1):
            want = (
                data.index(normal_form(s, _letterwise(f, d % order, wj), guard)),
                data.index(normal_form(s, _letterwise(f, inv_power, wi), guard)),
            )
            if data.rho_at(i, j) != want:
                return CheckReport("permutation_veronese", False, witness={"pair": [i, j], "rho": list(data.rho_at(i, j)), "expected": list(want)})
    rho_trivial = is_trivial(Solution(data.N, data.rho))
    details = {"order": order, "rho_trivial": rho_trivial, "f": list(f)}
    if d % order == 0 and not rho_trivial:
        return CheckReport("permutation_veronese", False, witness={"order": order}, details=details)
    return CheckReport("permutation_veronese", True, details=details)


def hilbert_check(s: Solution, degrees: Iterable[int], guard: int | None = None) -> CheckReport:
    """``|N_m| = C(n+m-1, m)`` for every requested degree."""
    counts = {}
    for m in degrees:
        got = len(normal_monomials(s, m, guard))
        counts[m] = got
        if got != expected_dimension(s.n, m):
            return CheckReport("hilbert", False, witness={"degree": m, "count": got}, details={"counts": counts})
    return CheckReport("hilbert", True, details={"counts": counts})
