from itertools import combinations
from math import comb

import pytest

from thom.alphabet import (
    all_cliques,
    cliques,
    components,
    disjoint_union,
    parse_alphabet,
    restrict,
    serialize_alphabet,
    validate_alphabet,
)
from thom.errors import DuplicateGenerator, ParseError, SelfPair, UnknownGenerator

from oracles import brute_force_cliques

A1 = validate_alphabet(["a", "b"], [("a", "b")])
A2 = validate_alphabet(["a", "b"])
A3 = validate_alphabet(["a", "b", "c"], [("a", "b")])
K4 = validate_alphabet("abcd", combinations("abcd", 2))


def test_validate_normalizes_pairs():
    a = validate_alphabet(["a", "b"], [("b", "a"), ("a", "b"), ("b", "a")])
    assert a == A1
    assert a.commuting_pairs == {("a", "b")}


@pytest.mark.parametrize("names, pairs, exc", [
    (["a"], [("a", "a")], SelfPair),
    (["a", "b"], [("a", "c")], UnknownGenerator),
    (["a", "a"], [], DuplicateGenerator),
])
def test_validate_errors(names, pairs, exc):
    with pytest.raises(exc):
        validate_alphabet(names, pairs)


def test_cliques_examples():
    assert cliques(A1, 2) == [("a", "b")]
    assert cliques(A2, 2) == []
    assert len(cliques(K4, 2)) == comb(4, 2)
    assert cliques(A1, 0) == [()]
    assert cliques(K4, 5) == []


def test_cliques_lexicographic():
    alpha = validate_alphabet("abcde", [("a", "c"), ("a", "e"), ("c", "e"), ("b", "d"), ("a", "b")])
    assert cliques(alpha, 2) == [("a", "b"), ("a", "c"), ("a", "e"), ("b", "d"), ("c", "e")]
    assert cliques(alpha, 3) == [("a", "c", "e")]


def test_cliques_match_brute_force(rng):
    for _ in range(40):
        n = rng.randint(0, 12)
        gens = [f"g{i}" for i in range(n)]
        pairs = [p for p in combinations(gens, 2) if rng.random() < 0.45]
        alpha = validate_alphabet(gens, pairs)
        ours = [c for level in all_cliques(alpha) for c in level]
        assert ours == brute_force_cliques(gens, pairs)
        assert all(cliques(alpha, k) == [] for k in range(n + 1, n + 3))


def test_empty_alphabet():
    e = validate_alphabet([])
    assert cliques(e, 0) == [()]
    assert cliques(e, 1) == []
    assert components(e) == []


def test_components():
    assert components(A2) == [("a",), ("b",)]
    assert components(A1) == [("a", "b")]
    assert components(A3) == [("a", "b"), ("c",)]


def test_components_partition_and_reassemble(rng):
    for _ in range(30):
        n = rng.randint(1, 10)
        gens = [f"g{i}" for i in range(n)]
        alpha = validate_alphabet(gens, [p for p in combinations(gens, 2) if rng.random() < 0.2])
        parts = components(alpha)
        assert sorted(g for p in parts for g in p) == sorted(gens)
        subs = [restrict(alpha, p) for p in parts]
        owner = {g: i for i, p in enumerate(parts) for g in p}
        assert all(owner[a] == owner[b] for a, b in alpha.commuting_pairs)
        union = disjoint_union(subs)
        assert set(union.generators) == set(gens)
        assert union.commuting_pairs == alpha.commuting_pairs


def test_restrict():
    assert restrict(A3, {"a", "b"}) == A1
    c = restrict(A3, {"c"})
    assert c.generators == ("c",) and not c.commuting_pairs
    assert restrict(A1, set()) == validate_alphabet([])
    with pytest.raises(UnknownGenerator):
        restrict(A1, {"z"})


def test_parse_and_serialize():
    text = """# chain of three
generators: a b c
commute: a b
commute: b c
commute: b a   # repeat is idempotent
"""
    alpha = parse_alphabet(text)
    assert alpha.generators == ("a", "b", "c")
    assert alpha.commuting_pairs == {("a", "b"), ("b", "c")}
    assert parse_alphabet(serialize_alphabet(alpha)) == alpha


@pytest.mark.parametrize("text, exc", [
    ("commute: a b\n", ParseError),
    ("generators: a b\nfrobnicate: a\n", ParseError),
    ("generators: a b\ncommute: a\n", ParseError),
    ("generators: a b\ncommute: a a\n", SelfPair),
    ("generators: a b\ncommute: a z\n", UnknownGenerator),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_alphabet(text)


def test_parse_error_carries_line_number():
    with pytest.raises(ParseError) as info:
        parse_alphabet("generators: a\n\nbogus line\n")
    assert info.value.lineno == 3
