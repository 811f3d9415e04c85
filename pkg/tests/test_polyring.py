import pytest
from hypothesis import given, settings, strategies as st

from schubcalc.errors import ParseError
from schubcalc.polyring import SparsePolynomial, constant, monomial, x

x1, x2, x3 = x(1), x(2), x(3)

exponents = st.lists(st.integers(0, 3), min_size=0, max_size=6)
polys = st.dictionaries(exponents.map(tuple), st.integers(-50, 50), max_size=8).map(SparsePolynomial)


def homogeneous(d):
    def build(terms):
        return SparsePolynomial({m: c for m, c in terms.items() if sum(m) == d})

    vecs = st.lists(st.integers(0, d), min_size=1, max_size=5).map(tuple)
    return st.dictionaries(vecs, st.integers(-9, 9), max_size=6).map(build)


def test_ring_examples():
    assert x1 * x1 == SparsePolynomial({(2,): 1})
    p = SparsePolynomial.parse("3*x1^2 - x2")
    assert p + SparsePolynomial() == p
    assert (x1 + x2) * (x1 + x2) == SparsePolynomial({(2,): 1, (1, 1): 2, (0, 2): 1})


def test_no_zero_terms():
    assert not (x1 - x1)
    assert len(SparsePolynomial({(1,): 2, (1, 0): -2, (0,): 5})) == 1


def test_coefficient():
    p = SparsePolynomial.parse("x1^2 + 3*x1*x2")
    assert p.coefficient((1, 1)) == 3
    assert (x1 * x1).coefficient((0, 2)) == 0
    assert p.coefficient((2, 0, 0)) == 1


def test_swap_variables():
    assert x1.swap_variables(1) == x2
    assert (x1 * x2).swap_variables(1) == x1 * x2
    assert (x1**2 * x2).swap_variables(2) == x1**2 * x3


def test_divided_difference_examples():
    assert x1.divided_difference(1) == constant(1)
    assert (x1 * x2).divided_difference(1) == SparsePolynomial()
    assert (x1**2).divided_difference(1) == x1 + x2


def test_divided_difference_closed_form():
    # d_1 x1^a = h_{a-1}(x1, x2) = sum of x1^k x2^(a-1-k)
    for a in range(1, 8):
        expected = SparsePolynomial({(k, a - 1 - k): 1 for k in range(a)})
        assert (x1**a).divided_difference(1) == expected


def test_evaluation():
    assert (x1 + x2).evaluate_all_ones() == 2
    assert (x1**2 * x2).evaluate_all_ones() == 1
    assert (x1**2 + 1).evaluate_mod_p((1,), 2) == 0
    assert SparsePolynomial.parse("-3*x1 + 1").evaluate_mod_p((1,), 5) == 3
    with pytest.raises(ValueError):
        x1.evaluate_mod_p((1,), 1)


def test_lex_min_monomial():
    assert SparsePolynomial.parse("x1^2 + x1*x2 + x2^2").lex_min_monomial() == (0, 2)
    assert x1.lex_min_monomial() == (1,)
    assert SparsePolynomial.parse("x1^2 + x1*x2 + x1*x3").lex_min_monomial() == (1, 0, 1)
    with pytest.raises(ValueError):
        SparsePolynomial().lex_min_monomial()


def test_monomial_canonical():
    assert monomial((1, 0, 0)) == (1,)
    assert monomial(()) == ()


@pytest.mark.parametrize(
    "text",
    ["0", "7", "-x1", "3*x1^2*x2 + x3", "x1^2 - 2*x1*x2 + x2^2 - 11", "x12^3"],
)
def test_text_round_trip(text):
    p = SparsePolynomial.parse(text)
    assert str(p) == text
    assert SparsePolynomial.parse(str(p)) == p


def test_parse_accepts_loose_spacing_and_repeats():
    assert SparsePolynomial.parse(" 2 * x1*x1 +x1^2") == SparsePolynomial({(2,): 3})


@pytest.mark.parametrize("bad", ["", "x", "x0", "3x1", "x1^", "+", "x1 + + x2", "y1"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        SparsePolynomial.parse(bad)


def test_json_round_trip():
    p = SparsePolynomial.parse("-3*x1^2*x2 + 12345678901234567890*x3")
    data = p.to_json()
    assert all(isinstance(t["coeff"], str) for t in data)
    assert SparsePolynomial.from_json(data) == p
    with pytest.raises(ParseError):
        SparsePolynomial.from_json([{"exponents": [1, -1], "coeff": "1"}])


@given(polys)
def test_text_round_trip_random(p):
    assert SparsePolynomial.parse(str(p)) == p


@given(polys, st.integers(1, 5))
def test_dd_squared_is_zero(p, i):
    assert not p.divided_difference(i).divided_difference(i)


@given(polys, st.integers(1, 4), st.integers(2, 4))
def test_dd_commute_far_apart(p, i, gap):
    j = i + gap
    assert p.divided_difference(i).divided_difference(j) == p.divided_difference(j).divided_difference(i)


@given(polys, st.integers(1, 4))
def test_dd_braid(p, i):
    a = p.divided_difference(i).divided_difference(i + 1).divided_difference(i)
    b = p.divided_difference(i + 1).divided_difference(i).divided_difference(i + 1)
    assert a == b


@given(polys, st.integers(1, 5))
def test_dd_kills_exactly_the_symmetric(p, i):
    assert (not p.divided_difference(i)) == (p.swap_variables(i) == p)


@given(polys, st.integers(1, 5))
def test_dd_times_difference_recovers_numerator(p, i):
    q = p.divided_difference(i)
    assert q * (x(i) - x(i + 1)) == p - p.swap_variables(i)


@given(st.integers(1, 6).flatmap(homogeneous), st.integers(1, 4))
def test_dd_lowers_degree(p, i):
    q = p.divided_difference(i)
    if q:
        assert q.is_homogeneous() and q.degree() == p.degree() - 1


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == SparsePolynomial()


@given(polys, st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_evaluation_is_a_homomorphism(p, point):
    q = p * p + p
    assert q.evaluate(point) == p.evaluate(point) ** 2 + p.evaluate(point)
    assert q.evaluate_mod_p(point, 7) == q.evaluate(point) % 7
