from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kring.errors import NotAUnit, PoleAtX
from kring.localized import ONE, P3, Q, ZERO, LocalizedClass, canonicalize, divide_exact, evaluate_at, ring_arith
from kring.render import ClassDecodeError, class_from_json, class_to_json, euler_characteristic


def test_group_order_class_factors_into_units() -> None:
    assert P3 == Q * (Q + 1) * (Q - 1)
    assert P3.is_unit
    assert not (Q * Q + 1).is_unit


def test_division_by_units_leaves_a_denominator() -> None:
    value = ONE / (Q - 1)
    assert not value.is_polynomial
    assert value.den == (0, 0, 1)
    assert value * (Q - 1) == ONE
    assert str(value) == "1/(q-1)"


def test_exact_division_cancels_common_factors() -> None:
    assert divide_exact(Q * Q - 1, Q - 1) == Q + 1
    assert (Q**3 - Q) / (Q * Q + Q) == Q - 1
    assert Q**-2 * Q**2 == ONE


def test_division_by_non_unit_raises() -> None:
    with pytest.raises(NotAUnit):
        divide_exact(Q**3 + 2, Q * Q + 1)
    with pytest.raises(NotAUnit):
        ONE / ZERO


def test_integer_coercion_on_both_sides() -> None:
    assert 2 * Q + 1 == Q + Q + ONE
    assert 1 - Q == -(Q - 1)
    assert LocalizedClass.from_int(0) == ZERO
    assert not ZERO


def test_evaluation_is_exact() -> None:
    assert evaluate_at(P3, 5) == 120
    assert (ONE / (Q + 1)).evaluate(3) == Fraction(1, 4)
    with pytest.raises(PoleAtX):
        (ONE / (Q - 1)).evaluate(1)


def test_pretty_rendering() -> None:
    assert str(Q * Q + 4 * Q + 1) == "q^2 + 4q + 1"
    assert str(P3) == "q^3 - q"
    assert str(ZERO) == "0"
    assert str(-Q) == "-q"


def test_coefficients_and_euler_characteristic() -> None:
    value = Q * Q + 4 * Q + 1
    assert value.coefficients() == [1, 4, 1]
    assert euler_characteristic(value) == 6
    assert euler_characteristic(P3) == 0


def test_class_json_round_trip_keeps_denominators() -> None:
    value = (Q**4 - 3 * Q + 7) / (Q * (Q + 1) ** 2)
    payload = class_to_json(value)
    assert payload["den"] == [1, 2, 0]
    assert all(isinstance(coeff, str) for _, coeff in payload["num"])
    assert class_from_json(payload) == value


def test_class_json_rejects_malformed_payloads() -> None:
    with pytest.raises(ClassDecodeError):
        class_from_json({"num": [[0, "1"]], "den": [1, 2]})
    with pytest.raises(ClassDecodeError):
        class_from_json({"num": [["x", "1"]], "den": [0, 0, 0]})


def _random_class(rng: random.Random) -> LocalizedClass:
    coefficients = [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))]
    den = [rng.randint(0, 2) for _ in range(3)]
    return LocalizedClass.from_coefficients(coefficients, den)


def test_ring_laws_and_evaluation_on_random_classes() -> None:
    rng = random.Random(20240611)
    for _ in range(40):
        a, b, c = (_random_class(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a - b) + b == a
        assert evaluate_at(a * b, 5) == evaluate_at(a, 5) * evaluate_at(b, 5)
        assert evaluate_at(a + c, 7) == evaluate_at(a, 7) + evaluate_at(c, 7)


def test_canonicalize_cancels_units() -> None:
    assert canonicalize(P3.numerator, (1, 1, 1)) == ONE
    assert canonicalize((Q * Q + Q).numerator) == Q * Q + Q
    zero = canonicalize(0, (2, 0, 1))
    assert zero == ZERO
    assert zero.den == (0, 0, 0)


def test_ring_arith_ops() -> None:
    inverse = ONE / (Q - 1)
    assert ring_arith(inverse, -inverse, "add") == ZERO
    assert ring_arith(P3, ONE / P3, "mul") == ONE
    assert ring_arith(Q * Q + Q, Q - 1, "mul") == P3
    assert ring_arith(P3, Q, "sub") == Q**3 - 2 * Q


def test_constant_classes_hash_like_ints() -> None:
    for value in (0, 1, -3, 42):
        constant = LocalizedClass.from_int(value)
        assert constant == value
        assert hash(constant) == hash(value)
    assert {ONE: "one"}[1] == "one"
    assert len({ZERO, 0, (Q - Q), P3 / P3, 1}) == 2
