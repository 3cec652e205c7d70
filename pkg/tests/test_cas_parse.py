import pytest

from ulrichfano.cas import ParseError, format_ideal, paper_ideal, parse_ideal, parse_poly, Ring


def test_fixture_ideal(J):
    assert J.ring.p == 32467
    assert J.ring.names == ("x", "y", "z", "w")
    assert J.degrees() == [3, 3, 3, 3]
    # leading printed coefficient -2215 becomes its least nonnegative residue
    assert str(J.gens[0]).startswith(f"{32467 - 2215}x^3+10620x^2y")


def test_principal_and_defaults():
    I = parse_ideal("x")
    assert I.degrees() == [1] and I.ring.p == 32467


def test_zero_generator_rejected():
    with pytest.raises(ParseError, match="zero"):
        parse_ideal("x*y - y*x")


def test_inhomogeneous_rejected():
    with pytest.raises(ParseError, match="homogeneous"):
        parse_ideal("x^2 + y")
    with pytest.raises(ParseError):
        parse_ideal("x + 1")


def test_error_positions():
    with pytest.raises(ParseError) as info:
        parse_ideal("p 7\nvars x y z w\nx^2 + q*y\n")
    assert info.value.line == 3 and info.value.col == 7
    with pytest.raises(ParseError) as info:
        parse_ideal("x^2+3 4y^2")
    assert info.value.col == 7
    assert parse_ideal("x y").gens == parse_ideal("x*y").gens
    with pytest.raises(ParseError, match="exponent"):
        parse_ideal("x^")


def test_term_syntax_variants():
    R = Ring(101)
    a = parse_poly("3*x^2*y - 2 x y^2 + 5xyz", R)
    b = parse_poly("3x^2y-2xy^2+5*x*y*z", R)
    assert a == b
    assert parse_poly("-x", R) == R.var("x") * -1


def test_header_and_round_trip(J):
    text = format_ideal(J)
    assert parse_ideal(text).gens == J.gens
    assert parse_ideal("p 101\nvars a b c d\na*b - c*d  # comment\n").ring.names == ("a", "b", "c", "d")


def test_bad_prime_header():
    with pytest.raises(ParseError):
        parse_ideal("p 100\nx")
