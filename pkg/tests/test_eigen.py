from __future__ import annotations

from fractions import Fraction

import pytest

from eigen.errors import (
    BackendMismatch,
    BadOrder,
    EigenSyntaxError,
    GeneratorOutOfRange,
    NegationUnrepresentable,
    NotAnOrbit,
    ZeroEigenvalue,
)
from eigen.orbits import orbit_of
from eigen.syntax import format_eigen, parse_eigen, parse_eigen_list
from eigen.values import (
    Rational,
    RootOfUnity,
    Symbolic,
    UnitKind,
    classify_unit,
    eigen_construct,
    eigen_inv,
    eigen_mul,
    eigen_neg,
    eigen_product,
    require_backend,
)


def test_parse_each_backend() -> None:
    assert parse_eigen("rat:3/2") == Rational(Fraction(3, 2))
    assert parse_eigen("rat:-2") == Rational(Fraction(-2))
    assert parse_eigen("zeta:12:17") == RootOfUnity(12, 5)
    assert parse_eigen("sym:x1") == Symbolic(1, (1,))


def test_symbolic_entries_share_the_generator_count() -> None:
    first, second = parse_eigen_list(["sym:x1", "sym:-x2^-1*x3"])
    assert first == Symbolic(1, (1, 0, 0))
    assert second == Symbolic(-1, (0, -1, 1))
    assert format_eigen(second) == "sym:-x1^0*x2^-1*x3"


def test_symbolic_format_keeps_the_width() -> None:
    value = Symbolic(1, (1, 0, 0))
    text = format_eigen(value)
    assert text == "sym:x1*x2^0*x3^0"
    assert parse_eigen(text) == value
    assert format_eigen(Symbolic(-1, (0, 0))) == "sym:-x1^0*x2^0"
    assert parse_eigen("sym:-x1^0*x2^0") == Symbolic(-1, (0, 0))


@pytest.mark.parametrize("text", ["2", "zeta:x:1", "sym:y1", "sym:x0", "poly:q"])
def test_bad_syntax_is_rejected(text: str) -> None:
    with pytest.raises(EigenSyntaxError):
        parse_eigen(text)


def test_zero_is_not_an_eigenvalue() -> None:
    with pytest.raises(ZeroEigenvalue):
        parse_eigen("rat:0")


def test_roots_of_unity_compare_by_value() -> None:
    assert RootOfUnity(4, 1) == RootOfUnity(8, 2)
    assert hash(RootOfUnity(4, 1)) == hash(RootOfUnity(8, 2))
    assert eigen_mul(RootOfUnity(4, 1), RootOfUnity(6, 1)) == RootOfUnity(12, 5)


def test_negation_of_odd_order_roots() -> None:
    assert eigen_neg(RootOfUnity(4, 1)) == RootOfUnity(4, 3)
    with pytest.raises(NegationUnrepresentable):
        eigen_neg(RootOfUnity(3, 1))
    assert eigen_neg(RootOfUnity(3, 1), promote=True) == RootOfUnity(6, 5)
    assert eigen_neg(RootOfUnity(5, 2), promote=True) == RootOfUnity(10, 9)


def test_unit_classification() -> None:
    assert classify_unit(Rational(Fraction(-1))) is UnitKind.IS_MINUS_ONE
    assert classify_unit(RootOfUnity(2, 1)) is UnitKind.IS_MINUS_ONE
    assert classify_unit(Symbolic(1, (0, 0))) is UnitKind.IS_ONE
    assert classify_unit(Symbolic(-1, (1, 0))) is UnitKind.GENERIC
    product = eigen_product([Rational(Fraction(2)), Rational(Fraction(1, 2))], [1, 1])
    assert classify_unit(product) is UnitKind.IS_ONE


def test_orbits_identify_inverse_pairs() -> None:
    assert orbit_of(Rational(Fraction(1, 2))) == orbit_of(Rational(Fraction(2)))
    assert orbit_of(RootOfUnity(5, 4)) == orbit_of(RootOfUnity(5, 1))
    lam = Symbolic(1, (2, -1))
    assert orbit_of(eigen_inv(lam)) == orbit_of(lam)
    with pytest.raises(NotAnOrbit):
        orbit_of(RootOfUnity(2, 1))


def test_backends_do_not_mix() -> None:
    with pytest.raises(BackendMismatch):
        require_backend([Rational(Fraction(2)), RootOfUnity(3, 1)])
    with pytest.raises(BackendMismatch):
        require_backend([Symbolic(1, (1,)), Symbolic(1, (1, 0))])


def test_eigen_construct_each_backend() -> None:
    assert eigen_construct("rat", 2) == Rational(Fraction(2))
    assert eigen_construct("rat", (3, 2)) == Rational(Fraction(3, 2))
    i = eigen_construct("zeta", (4, 1))
    assert i == RootOfUnity(4, 1)
    assert classify_unit(eigen_mul(i, i)) is UnitKind.IS_MINUS_ONE
    assert eigen_construct("sym", (1, {1: 1})) == Symbolic(1, (1,))
    assert eigen_construct("sym", (1, {1: 1}), generators=3) == Symbolic(1, (1, 0, 0))


def test_eigen_construct_errors() -> None:
    with pytest.raises(ZeroEigenvalue):
        eigen_construct("rat", 0)
    with pytest.raises(ZeroEigenvalue):
        eigen_construct("rat", (1, 0))
    with pytest.raises(BadOrder):
        eigen_construct("zeta", (0, 1))
    with pytest.raises(GeneratorOutOfRange):
        eigen_construct("sym", (1, {3: 1}), generators=2)
