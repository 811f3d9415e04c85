import itertools

import pytest
from hypothesis import given, strategies as st

from schubcalc.errors import ParseError, RankBoundError
from schubcalc.permutation import (
    Permutation,
    all_permutations,
    check_rank,
    code,
    code_inverse,
    descents,
    identity,
    inverse,
    length,
    long_permutation,
    multiply,
    right_multiply_transposition,
    stabilize,
)

P = Permutation.parse


def brute_inversions(window):
    return sum(1 for i, j in itertools.combinations(range(len(window)), 2) if window[i] > window[j])


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


@pytest.mark.parametrize("text, expected", [("123", 0), ("321", 3), ("1423", 2)])
def test_length(text, expected):
    assert length(P(text)) == expected == brute_inversions(P(text).window)


@pytest.mark.parametrize("text, expected", [("123", set()), ("321", {1, 2}), ("132", {2})])
def test_descents(text, expected):
    assert descents(P(text)) == expected


def test_code_examples():
    assert code(P("321")) == (2, 1, 0)
    assert code(P("123")) == (0, 0, 0)
    assert code_inverse((0, 2, 0, 0)) == P("1423")


def test_code_inverse_rejects_bad_entries():
    with pytest.raises(ValueError):
        code_inverse((0, 3, 0))
    with pytest.raises(ValueError):
        code_inverse((-1,))


def test_group_operations():
    assert multiply(P("213"), P("213")) == identity()
    assert long_permutation(3) == P("321")
    assert right_multiply_transposition(P("1324"), 2, 4) == P("1423")
    # composition convention: (uv)(i) = u(v(i))
    u, v = P("2314"), P("1342")
    uv = multiply(u, v)
    assert all(uv(i) == u(v(i)) for i in range(1, 6))


def test_stabilize():
    assert stabilize(P("21"), 4).window == (2, 1, 3, 4)
    assert stabilize(P("132"), 3).window == (1, 3, 2)
    assert length(stabilize(P("321"), 6)) == 3
    with pytest.raises(ValueError):
        stabilize(P("321"), 2)


def test_equality_ignores_trailing_fixed_points():
    assert P("213") == P("2134") == P("21")
    assert hash(P("213")) == hash(P("21"))
    assert P("123") == identity()
    assert P("132") == P("1324")


def test_parse_forms():
    assert P("1,4,2,3") == P("1423")
    assert P("10,1,2,3,4,5,6,7,8,9").rank == 10
    for bad in ["", "1x3", "122", "1,,2", "0"]:
        with pytest.raises(ParseError):
            P(bad)


def test_text_round_trip():
    w = P("3,1,2,10,4,5,6,7,8,9")
    assert Permutation.parse(w.to_text()) == w
    assert identity().to_text() == "1"
    assert P("21").to_text(4) == "2134"


def test_rank_bound():
    check_rank(16)
    with pytest.raises(RankBoundError):
        check_rank(17)
    with pytest.raises(RankBoundError):
        check_rank(6, rank_bound=5)


def test_code_bijection_small_ranks():
    for n in range(1, 7):
        seen = set()
        for w in all_permutations(n):
            c = code(stabilize(w, n))
            assert all(ci <= n - i for i, ci in enumerate(c, 1))
            assert code_inverse(c) == w
            seen.add(c)
        assert len(seen) == len(list(itertools.product(*[range(n - i + 1) for i in range(1, n + 1)])))


@given(perms)
def test_length_is_code_sum(w):
    assert length(w) == sum(code(w)) == brute_inversions(w.window)


@given(perms)
def test_descents_literal(w):
    win = w.window
    expected = {i for i in range(1, len(win)) if win[i - 1] > win[i]}
    assert descents(w) == expected


@given(perms, st.integers(0, 4))
def test_stabilization_invariance(w, extra):
    big = stabilize(w, w.n + extra)
    assert length(big) == length(w)
    assert descents(big) == descents(w)
    assert code(big)[: w.n] == code(w) and not any(code(big)[w.n:])


@given(perms)
def test_inverse(w):
    assert multiply(w, inverse(w)) == identity()
