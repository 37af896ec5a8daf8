from itertools import combinations_with_replacement, permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combhopf.combinat.cycles import (
    Cycle,
    cstd,
    cycle_decomposition,
    cycle_type,
    csupp,
    cyclic_shuffle,
    matching_product,
    matchings,
    ordered_cycle_type,
    permutation_from_cycles,
)
from combhopf.combinat.enumerate import count, enumerate_family
from combhopf.combinat.graphs import forest_code, forest_representative, graph_code, graph_representative, parking_normalize
from combhopf.combinat.partitions import class_size, hook_dimension, mn_character, partitions, sign, z
from combhopf.combinat.words import (
    compose,
    connected_factorization,
    cross_inversions,
    inverse,
    is_connected,
    parse_word,
    shifted_concat,
    shuffle,
    standardize,
)
from combhopf.errors import BudgetExceededError, ParseError

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
endos = st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n)).map(tuple)


def C(*e):
    return Cycle(tuple(e))


# ------------------------------------------------------------------ words


def test_standardize():
    assert standardize((1, 1, 2, 1, 2, 1, 3, 1, 3, 2)) == (1, 2, 6, 3, 7, 4, 9, 5, 10, 8)
    assert standardize((1, 1, 1)) == (1, 2, 3)
    assert standardize((3, 2, 1)) == (3, 2, 1)


def test_shifted_concat():
    assert shifted_concat((1, 2), (2, 2)) == (1, 2, 4, 4)
    assert shifted_concat((), (3, 1, 2)) == (3, 1, 2)
    assert shifted_concat((2, 1), (2, 3, 1)) == (2, 1, 4, 5, 3)


def test_shuffle():
    assert sorted(shuffle((1,), (2,))) == [(1, 2), (2, 1)]
    assert len(shuffle((1, 2), (3, 4))) == 6
    assert sorted(shuffle((1,), (2, 3))) == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]


def test_connected_factorization():
    assert is_connected((6, 2, 6, 1, 2, 4))
    assert connected_factorization((4, 2, 3, 2, 2, 7, 7)) == [(4, 2, 3, 2, 2), (2, 2)]
    assert connected_factorization((1, 2, 3)) == [(1,), (1,), (1,)]


def test_cross_inversions():
    assert cross_inversions((2, 4, 3, 1), 3) == 3
    assert cross_inversions((3, 4, 2, 1), 2) == 4
    assert cross_inversions((3, 1, 2), 0) == 0


def test_parse_word():
    assert parse_word("4232277") == (4, 2, 3, 2, 2, 7, 7)
    assert parse_word("10,2,1") == (10, 2, 1)
    assert parse_word("") == ()
    with pytest.raises(ParseError):
        parse_word("1,x")


@given(endos)
def test_factorization_reassembles(f):
    acc = ()
    for piece in connected_factorization(f):
        assert is_connected(piece)
        acc = shifted_concat(acc, piece)
    assert acc == f


@given(perms)
def test_inverse_composes_to_identity(p):
    assert compose(p, inverse(p)) == tuple(range(1, len(p) + 1))


# ----------------------------------------------------------------- cycles


def test_cycle_words_of_3142():
    (c,) = cycle_decomposition((3, 1, 4, 2))
    assert c.words() == {(1, 3, 4, 2), (2, 1, 3, 4), (3, 4, 2, 1), (4, 2, 1, 3)}


def test_cycle_decomposition():
    assert {c.support for c in cycle_decomposition((4, 1, 3, 5, 2))} == {frozenset({1, 2, 4, 5}), frozenset({3})}
    assert all(len(c) == 1 for c in cycle_decomposition((1, 2, 3, 4)))


def test_cyclic_shuffle_example():
    got = cyclic_shuffle(C(1, 3, 2), C(4, 5))
    want = {C(*map(int, s)) for s in ["13245", "13425", "13452", "14325", "14352", "14532",
                                      "13254", "13524", "13542", "15324", "15342", "15432"]}
    assert got == want
    words = {permutation_from_cycles([c], 5) for c in got}
    assert words == {tuple(map(int, s)) for s in ["34251", "35421", "31452", "45231", "41532", "41253",
                                                  "35214", "34512", "31524", "54213", "51423", "51234"]}


def test_cyclic_shuffle_edge_cases():
    assert cyclic_shuffle(C(1, 2), None) == {C(1, 2)}
    assert cyclic_shuffle(C(1), C(3)) == {C(1, 3)}
    with pytest.raises(ValueError):
        cyclic_shuffle(C(1, 2), C(2, 3))


def test_matchings_of_four_fixed_points():
    c1, c2 = [C(1), C(2)], [C(3), C(4)]
    assert len(matchings(c1, c2)) == 7
    got = {frozenset(c.elements for c in cs) for cs in matching_product(c1, c2)}
    want = [[(1,), (2,), (3,), (4,)], [(1,), (2, 3), (4,)], [(1,), (2, 4), (3,)], [(1, 3), (2,), (4,)],
            [(1, 3), (2, 4)], [(1, 4), (2,), (3,)], [(1, 4), (2, 3)]]
    assert got == {frozenset(w) for w in want}


def test_matching_against_empty():
    assert matching_product([C(1, 2)], []) == {(C(1, 2),)}
    with pytest.raises(ValueError):
        matchings([C(1)], [C(1)])


def test_cstd():
    a, b, c = 1, 2, 3
    assert cstd([(c, b, a), (a, b, a), (a, c), (b, a)]) == (2, 6, 7, 9, 10, 1, 3, 5, 4, 8)
    assert cstd([(1,)]) == (1,)


def test_cstd_is_idempotent_on_its_output():
    seen = 0
    for total in range(1, 5):
        for sizes in partitions(total):
            for letters in product(range(1, 4), repeat=total):
                words, i = [], 0
                for s in sizes:
                    words.append(letters[i:i + s])
                    i += s
                sigma = cstd(words)
                again = cstd([c.elements for c in cycle_decomposition(sigma)])
                assert again == sigma
                seen += 1
    assert seen > 100


def test_cycle_classes():
    assert csupp((4, 1, 3, 5, 2)) == ((1, 2, 4, 5), (3,))
    assert cycle_type((4, 1, 3, 5, 2)) == (4, 1)
    assert ordered_cycle_type((4, 1, 3, 5, 2)) == (4, 1)
    assert csupp((2, 4, 3, 1)) == ((1, 2, 4), (3,)) and cycle_type((2, 4, 3, 1)) == (3, 1)
    assert cycle_type((1, 2, 3)) == (1, 1, 1) and ordered_cycle_type((1, 2, 3)) == (1, 1, 1)


@given(perms)
def test_cycles_rebuild_the_permutation(p):
    assert permutation_from_cycles(cycle_decomposition(p), len(p)) == p


# ------------------------------------------------------------- characters


def test_mn_character_examples():
    assert mn_character((3,), (2, 1)) == 1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    for mu in partitions(4):
        assert mn_character((1, 1, 1, 1), mu) == sign(mu)
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("n", range(1, 7))
def test_mn_row_orthogonality(n):
    parts = list(partitions(n))
    for lam in parts:
        for nu in parts:
            s = sum(class_size(mu) * mn_character(lam, mu) * mn_character(nu, mu) for mu in parts)
            assert s == (factorial(n) if lam == nu else 0)
        assert mn_character(lam, (1,) * n) == hook_dimension(lam)


def test_z():
    assert z((2, 1, 1)) == 4 and z((3,)) == 3 and z(()) == 1


# ------------------------------------------------------------------ graphs


def test_parking_normalize():
    assert parking_normalize((5, 2, 5, 1, 2, 4)) == (True, (1, 2, 2, 4, 5, 5))
    assert parking_normalize((1, 1)) == (True, (1, 1))
    assert parking_normalize((2, 2))[0] is False


def test_graph_codes_of_parking_functions():
    assert len({graph_code(p) for p in enumerate_family("parking_functions", 2)}) == 3
    assert len({graph_code(p) for p in enumerate_family("parking_functions", 3)}) == 7


@given(endos, st.randoms(use_true_random=False))
def test_graph_code_is_isomorphism_invariant(f, rnd):
    n = len(f)
    tau = list(range(1, n + 1))
    rnd.shuffle(tau)
    tau = tuple(tau)
    assert graph_code(compose(inverse(tau), compose(f, tau))) == graph_code(f)
    assert graph_code(graph_representative(graph_code(f))) == graph_code(f)


def test_forest_codes_roundtrip():
    for n in range(1, 6):
        for p in enumerate_family("nondecreasing_parking_functions", n):
            code = forest_code(p)
            assert forest_code(forest_representative(code)) == code


# ------------------------------------------------------------- enumeration


def test_enumeration_counts():
    assert [count("connected_endofunctions", n) for n in range(1, 6)] == [1, 3, 20, 197, 2511]
    assert count("nondecreasing_parking_functions", 3) == 5
    assert count("permutations", 3) == 6
    assert [count("connected_permutations", n) for n in range(1, 6)] == [1, 1, 3, 13, 71]
    assert [count("involutions", n) for n in range(1, 5)] == [1, 2, 4, 10]
    assert [count("parking_functions", n) for n in range(1, 5)] == [1, 3, 16, 125]


def test_enumeration_is_duplicate_free():
    words = list(enumerate_family("endofunctions", 4))
    assert len(words) == len(set(words)) == 256
    assert words == sorted(words)


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError, match="budget"):
        count("endofunctions", 8)
    assert count("endofunctions", 3, budget=3) == 27
    with pytest.raises(ValueError):
        count("trees", 3)


def test_permutation_family_matches_itertools():
    assert list(enumerate_family("permutations", 4)) == list(permutations(range(1, 5)))


def test_nondecreasing_family():
    got = list(enumerate_family("nondecreasing_parking_functions", 3))
    want = [w for w in combinations_with_replacement(range(1, 4), 3) if all(a <= i for i, a in enumerate(w, 1))]
    assert sorted(got) == sorted(want)
