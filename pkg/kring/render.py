"""JSON codec for localized classes."""
from __future__ import annotations

from typing import Any, Dict

from kring.errors import EngineError
from kring.localized import LocalizedClass


class ClassDecodeError(EngineError):
    """Raised when a serialized class cannot be parsed."""

    code = "class_decode_error"


def class_to_json(value: LocalizedClass) -> Dict[str, Any]:
    """Encode as {"num": [[exp, "coeff"], ...], "den": [a, b, c]} with decimal-string coefficients."""
    return {
        "num": [[exp, str(coeff)] for exp, coeff in value.terms()],
        "den": list(value.den),
    }


def class_from_json(payload: Dict[str, Any]) -> LocalizedClass:
    try:
        terms = [(int(exp), int(coeff)) for exp, coeff in payload.get("num", [])]
        den = [int(value) for value in payload.get("den", [0, 0, 0])]
    except (TypeError, ValueError) as exc:
        raise ClassDecodeError(f"malformed class payload: {payload!r}") from exc
    if len(den) != 3 or any(value < 0 for value in den):
        raise ClassDecodeError("denominator must hold three non-negative exponents", details={"den": den})
    return LocalizedClass.from_terms(terms, den)


def euler_characteristic(value: LocalizedClass) -> int:
    """Specialization q -> 1 of a polynomial class."""
    total = value.evaluate(1)
    if total.denominator != 1:
        raise ClassDecodeError("q -> 1 specialization is not integral", details={"class": str(value)})
    return int(total.numerator)
