import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybveronese import (
    NonBijectiveError,
    Solution,
    check_condition_O,
    detect_permutation_solution,
    fixed_points,
    make_permutation,
    make_trivial,
    validate,
)
from ybveronese.solution import (
    expected_orbit_counts,
    is_braided_direct,
    is_braided_lr,
    orbit_counts,
    permutation_order,
    relabel,
    swap_conjugate,
)


def test_trivial_validates():
    rep = validate(make_trivial(3))
    assert rep.involutive and rep.nondegenerate and rep.braided and rep.square_free
    assert rep.is_solution and rep.condition_O
    assert rep.permutation == (1, 2, 3)


def test_square_free_n3_validates(sf3):
    rep = validate(sf3)
    assert (rep.involutive, rep.nondegenerate, rep.braided, rep.square_free) == (True,) * 4
    assert rep.fixed_points == [(1, 1), (2, 2), (3, 3)]
    assert rep.permutation is None


def test_permutation_n2_validates(perm2):
    rep = validate(perm2)
    assert rep.is_solution and not rep.square_free
    assert rep.fixed_points == [(1, 2), (2, 1)]
    assert rep.permutation == (2, 1)
    assert perm2.r(2, 2) == (1, 1)


def test_non_involutive_bijection():
    # r(1,1) = (1,2) but r(1,2) = (2,1), so r(r(1,1)) = (2,1)
    s = Solution.from_mapping(2, {(1, 1): (1, 2), (1, 2): (2, 1), (2, 1): (1, 1)})
    rep = validate(s)
    assert not rep.involutive
    assert not rep.is_solution


def test_fixed_points_trivial():
    assert fixed_points(make_trivial(2)) == [(1, 1), (2, 2)]


def test_condition_O_fails_for_degenerate_involution():
    # x^1 = 1 for both x; r swaps (1,1) and (2,1) and is an involution
    s = Solution.from_mapping(2, {(1, 1): (2, 1), (2, 1): (1, 1)})
    rep = validate(s)
    assert rep.involutive and not rep.nondegenerate
    assert not check_condition_O(s)
    hits = [(a, b, c, d) for a, b, c, d in itertools.product((1, 2), repeat=4) if s.r(c, a) == (d, b)]
    assert len({(a, b) for a, b, _, _ in hits}) < 4


def test_condition_O_examples(sf3):
    assert check_condition_O(make_trivial(3))
    assert check_condition_O(sf3)


def test_construction_rejects_duplicates():
    table = (((1, 1), (1, 1)), ((2, 1), (2, 2)))
    with pytest.raises(NonBijectiveError, match="non-bijective"):
        Solution(2, table)


def test_construction_rejects_out_of_range():
    with pytest.raises(NonBijectiveError, match="out of range"):
        Solution(1, (((1, 2),),))


def test_action_tables(sf3):
    for x, y in sf3.pairs():
        u, v = sf3.r(x, y)
        assert sf3.left_action[x - 1][y - 1] == u
        assert sf3.right_action[y - 1][x - 1] == v


def test_detect_permutation(sf3, perm2):
    assert detect_permutation_solution(perm2) == (2, 1)
    assert detect_permutation_solution(make_trivial(4)) == (1, 2, 3, 4)
    assert detect_permutation_solution(sf3) is None


def test_make_permutation_identity_is_trivial():
    assert make_permutation(3, (1, 2, 3)) == make_trivial(3)


def test_make_permutation_rejects_non_permutation():
    with pytest.raises(ValueError):
        make_permutation(3, (1, 1, 2))


def test_three_cycle():
    rep = validate(make_permutation(3, (2, 3, 1)))
    assert rep.is_solution and not rep.square_free


@pytest.mark.parametrize("n", range(1, 6))
def test_detect_permutation_roundtrip(n):
    for f in itertools.permutations(range(1, n + 1)):
        assert detect_permutation_solution(make_permutation(n, f)) == f


def test_permutation_order():
    assert permutation_order((1, 2, 3)) == 1
    assert permutation_order((2, 1, 3)) == 2
    assert permutation_order((2, 3, 1, 5, 4)) == 6


def test_catalog_invariants(catalog):
    for s in catalog:
        rep = validate(s)
        assert rep.is_solution
        assert len(rep.fixed_points) == s.n
        assert orbit_counts(s) == expected_orbit_counts(s.n)
        assert check_condition_O(s)
        if rep.square_free:
            assert all(x == y for x, y in rep.fixed_points)


def test_relabel_and_swap_conjugate_preserve_solutions(catalog):
    for s in catalog:
        assert validate(swap_conjugate(s)).is_solution
        for p in itertools.permutations(range(1, s.n + 1)):
            assert validate(relabel(s, p)).is_solution


@st.composite
def bijective_tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.product(range(1, n + 1), repeat=2))
    images = draw(st.permutations(pairs))
    return Solution(n, tuple(tuple(images[x * n : (x + 1) * n]) for x in range(n)))


@settings(max_examples=300, deadline=None)
@given(bijective_tables())
def test_braid_formulations_agree(s):
    assert is_braided_direct(s) == is_braided_lr(s)


@settings(max_examples=200, deadline=None)
@given(bijective_tables())
def test_validate_is_total(s):
    rep = validate(s)
    assert rep.is_solution == (rep.involutive and rep.nondegenerate and rep.braided)
    if rep.is_solution:
        assert len(rep.fixed_points) == s.n
