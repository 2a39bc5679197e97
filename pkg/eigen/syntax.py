"""Textual eigenvalue syntax: "rat:3/2", "zeta:12:5", "sym:x1^2*x3^-1", "sym:-x2"."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Sequence

from eigen.errors import EigenSyntaxError
from eigen.orbits import TraceOrbit
from eigen.values import EigenClass, Rational, RootOfUnity, Symbolic, eigen_construct

_FACTOR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def _parse_symbolic_body(body: str) -> tuple[int, Dict[int, int]]:
    text = body.strip()
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    elif text.startswith("+"):
        text = text[1:]
    exps: Dict[int, int] = {}
    if text == "1":
        return sign, exps
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise EigenSyntaxError(f"bad symbolic factor {factor!r}", details={"text": body})
        index = int(match.group(1))
        if index < 1:
            raise EigenSyntaxError("symbolic generators are numbered from x1", details={"text": body})
        exps[index] = exps.get(index, 0) + int(match.group(2) or 1)
    return sign, exps


def symbolic_generator_count(texts: Sequence[str]) -> int:
    """Largest generator index mentioned by the symbolic entries of ``texts``."""
    top = 0
    for text in texts:
        tag, _, body = text.partition(":")
        if tag.strip() == "sym":
            _, exps = _parse_symbolic_body(body)
            top = max([top, *exps.keys()])
    return top


def parse_eigen(text: str, *, generators: int | None = None) -> EigenClass:
    tag, sep, body = text.strip().partition(":")
    if not sep:
        raise EigenSyntaxError(f"eigenvalue {text!r} lacks a backend prefix", details={"text": text})
    try:
        if tag == "rat":
            return eigen_construct("rat", Fraction(body.strip()))
        if tag == "zeta":
            order, _, exponent = body.partition(":")
            return eigen_construct("zeta", (int(order), int(exponent)))
    except ValueError as exc:
        raise EigenSyntaxError(f"cannot parse {text!r}: {exc}", details={"text": text}) from exc
    if tag == "sym":
        sign, exps = _parse_symbolic_body(body)
        return eigen_construct("sym", (sign, exps), generators=generators)
    raise EigenSyntaxError(f"unknown backend {tag!r}", details={"text": text})


def parse_eigen_list(texts: Sequence[str]) -> List[EigenClass]:
    """Parse a job's eigenvalues; symbolic entries share the job-wide generator count."""
    count = symbolic_generator_count(texts)
    return [parse_eigen(text, generators=count) for text in texts]


def format_eigen(value: EigenClass) -> str:
    if isinstance(value, Rational):
        return f"rat:{value.value}"
    if isinstance(value, RootOfUnity):
        return f"zeta:{value.order}:{value.exponent}"
    assert isinstance(value, Symbolic)
    # zero exponents are written too so the width parses back
    factors = [
        f"x{index}" if exp == 1 else f"x{index}^{exp}"
        for index, exp in enumerate(value.exponents, start=1)
    ]
    body = "*".join(factors) or "1"
    return f"sym:{'-' if value.sign < 0 else ''}{body}"


def format_orbit(orbit: TraceOrbit) -> str:
    return format_eigen(orbit.representative)
