import itertools
from math import comb

import pytest

from ybveronese import NotApplicable, make_permutation, make_trivial, validate
from ybveronese.solution import detect_permutation_solution, is_square_free, is_trivial, permutation_order
from ybveronese.words import normal_monomials
from ybveronese.veronese import (
    abstract_veronese_solution,
    build_veronese,
    dveronese_square_free_check,
    hilbert_check,
    permutation_veronese_check,
    presentation,
    presentations_agree,
    render_relation,
    verify_veronese_map,
    y_groebner_experiment,
)

from oracles import as_dict, brute_veronese, veronese_counts


def idx(*pairs):
    return {tuple(p) for p in pairs}


def test_build_permutation_n2(perm2):
    data = build_veronese(perm2, 2)
    assert data.basis == ((1, 1), (1, 2), (2, 1))
    assert is_trivial(abstract_veronese_solution(perm2, 2))
    assert data.H == idx((2, 1), (3, 1), (3, 2))
    assert data.MV == idx((2, 3))
    assert len(data.C) == 5


def test_build_square_free_n3(sf3):
    data = build_veronese(sf3, 2)
    for i in range(1, 6):
        assert data.rho_at(6, i) == (i, 6)
    assert sorted(data.fixed_points()) == [(1, 1), (2, 2), (3, 5), (4, 4), (5, 3), (6, 6)]


def test_build_trivial_n2():
    data = build_veronese(make_trivial(2), 2)
    assert data.N == 3
    assert data.sizes() == {"H": 3, "P": 6, "C": 5, "MV": 1}


def test_presentation_order_one():
    pres = presentation(make_trivial(1), 3)
    assert pres.N == 1 and not pres.R_a and not pres.R_b and not pres.R_1a


def test_presentation_json_and_text(perm2):
    pres = presentation(perm2, 2)
    d = pres.as_dict()
    assert list(d) == ["d", "N", "generators", "R_a", "R_b", "R_1a", "kernel"]
    assert d["generators"][1] == {"y": 2, "w": [1, 2]}
    assert d["kernel"] == [{"lhs": [2, 3], "rhs": [1, 1]}]
    assert render_relation(pres.R_a[0]) == "w3*w2 - w2*w3"
    assert render_relation(pres.kernel[0], "y") == "y2*y3 - y1*y1"


def test_abstract_solution_square_free_n3(sf3):
    y = abstract_veronese_solution(sf3, 2)
    rep = validate(y)
    assert y.n == 6 and rep.is_solution and not rep.square_free


def test_abstract_solution_trivial():
    for n, d in [(2, 2), (3, 2), (2, 3)]:
        y = abstract_veronese_solution(make_trivial(n), d)
        assert y.n == comb(n + d - 1, d) and is_trivial(y)


def test_verify_map_examples(sf3, perm2):
    rep = verify_veronese_map(sf3, 2)
    assert rep.ok and rep.details["kernel_size"] == 6 == comb(7, 2) - comb(6, 2)
    rep = verify_veronese_map(perm2, 2)
    assert rep.ok and rep.details["kernel_size"] == 1 == comb(4, 2) - comb(5, 1)
    rep = verify_veronese_map(make_trivial(2), 3)
    assert rep.ok and rep.details["kernel_size"] == 3


def test_square_free_check(sf3, perm2):
    assert dveronese_square_free_check(make_trivial(3), 2) == (True, True)
    assert dveronese_square_free_check(sf3, 2) == (False, True)
    with pytest.raises(NotApplicable):
        dveronese_square_free_check(perm2, 2)


def test_permutation_check(sf3, perm2):
    rep = permutation_veronese_check(perm2, 2)
    assert rep.ok and rep.details["rho_trivial"]
    rep = permutation_veronese_check(perm2, 3)
    assert rep.ok and not rep.details["rho_trivial"]
    # at d = 3, rho is the permutation solution of f^3 = f
    data = build_veronese(perm2, 3)
    f3 = detect_permutation_solution(abstract_veronese_solution(perm2, 3))
    assert f3 is not None and f3 != tuple(range(1, data.N + 1))
    assert permutation_veronese_check(make_trivial(3), 2).details["rho_trivial"]
    with pytest.raises(NotApplicable):
        permutation_veronese_check(sf3, 2)


def test_hilbert_check(sf3, perm2):
    assert hilbert_check(sf3, [2]).details["counts"] == {2: 6}
    assert hilbert_check(perm2, [4]).details["counts"] == {4: 5}
    assert hilbert_check(make_trivial(5), [1]).ok


def test_catalog_against_oracle(catalog):
    for s in catalog:
        r = as_dict(s)
        for d in (2, 3):
            pres = presentation(s, d)
            data = pres.data
            ref = brute_veronese(r, s.n, d)
            assert list(data.basis) == ref["basis"]
            assert {(i, j): data.rho_at(i, j) for i in range(1, data.N + 1) for j in range(1, data.N + 1)} == ref["rho"]
            for name in ("H", "P", "C", "MV"):
                assert set(getattr(data, name)) == ref[name]
            assert set(pres.R_a) == ref["R_a"]
            assert set(pres.R_b) == ref["R_b"]
            assert set(pres.R_1a) == ref["R_1a"]


def test_catalog_invariants(catalog):
    for s in catalog:
        for d in (2, 3):
            pres = presentation(s, d)
            data = pres.data
            N = data.N
            want = veronese_counts(s.n, d)
            assert N == want["N"]
            assert data.sizes() == {k: want[k] for k in ("H", "P", "C", "MV")}
            assert len(data.fixed_points()) == N
            assert validate(abstract_veronese_solution(s, d)).is_solution
            allpairs = set(itertools.product(range(1, N + 1), repeat=2))
            assert data.H | data.P == allpairs and not data.H & data.P
            assert data.C | data.MV == data.P and not data.C & data.MV
            lhs = [rel[0] for rel in pres.R]
            assert len(set(lhs)) == len(lhs) == N * N - comb(s.n + 2 * d - 1, s.n - 1)
            for (a, b), (c, e) in pres.R + pres.R_1a:
                assert (a, b) > (c, e)
            # each non-fixed pair occurs in exactly one R_a relation
            fixed = set(data.fixed_points())
            seen = [p for rel in pres.R_a for p in rel]
            assert sorted(seen) == sorted(allpairs - fixed)
            # factoring of N_2d through C is a bijection
            assert sorted(data.basis[i - 1] + data.basis[j - 1] for i, j in data.C) == normal_monomials(s, 2 * d)
            assert presentations_agree(pres)


def test_y_groebner_experiment(sf3, perm2):
    for s in (sf3, perm2):
        pres = presentation(s, 2)
        sys_ = y_groebner_experiment(pres, 3)
        assert sys_.complete_up_to == 3


def test_permutation_solutions_order_dividing_d():
    for n in (2, 3, 4):
        for f in itertools.permutations(range(1, n + 1)):
            s = make_permutation(n, f)
            k = permutation_order(f)
            for d in (2, 3, 4):
                if comb(n + d - 1, d) > 20:
                    continue
                rep = permutation_veronese_check(s, d)
                assert rep.ok
                if d % k == 0:
                    assert rep.details["rho_trivial"]


def test_square_free_veronese_sweep(catalog):
    for s in catalog:
        if not is_square_free(s):
            continue
        for d in (2, 3):
            _, consistent = dveronese_square_free_check(s, d)
            assert consistent
