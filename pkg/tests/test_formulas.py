from __future__ import annotations

from typing import Tuple

import pytest

from eigen.syntax import parse_eigen_list
from formulas import char as char_module
from formulas.alpha import AlphaCounts, alpha_counts
from formulas.char import (
    CharRoute,
    char_class_closed,
    check_char_routes,
    reducible_and_diag_classes,
    reducible_strata,
)
from formulas.coefficients import generic_coefficients, interaction_term, iterated_tube_closed_form
from formulas.errors import ClosedFormMismatch, TooManyPunctures, UnsupportedSurface
from formulas.rep import rep_class_closed, rep_class_for_surface
from kring.localized import P3, Q, ZERO
from operators.surface import SurfaceSpec, iterated_semisimple
from wmodule.element import CoreGenerator as G
from wmodule.element import ModuleElement


def _eigs(*texts: str) -> tuple:
    return tuple(parse_eigen_list(texts))


@pytest.mark.parametrize(
    "texts,expected",
    [
        (("rat:3",), AlphaCounts(0, 0)),
        (("rat:2", "rat:1/2"), AlphaCounts(1, 0)),
        (("rat:-2", "rat:1/2"), AlphaCounts(0, 1)),
        (("zeta:4:1", "zeta:4:1"), AlphaCounts(1, 1)),
        (("zeta:3:1", "zeta:3:1", "zeta:3:1"), AlphaCounts(1, 0)),
        (("sym:x1", "sym:x2"), AlphaCounts(0, 0)),
    ],
)
def test_alpha_counts(texts: Tuple[str, ...], expected: AlphaCounts) -> None:
    assert alpha_counts(_eigs(*texts)) == expected


def test_alpha_counts_respect_the_cap() -> None:
    with pytest.raises(TooManyPunctures):
        alpha_counts(_eigs("rat:2", "rat:3", "rat:5"), cap=2)


def test_single_puncture_has_no_generic_part() -> None:
    assert generic_coefficients(1) == (ZERO, ZERO, ZERO, ZERO)
    with pytest.raises(ValueError):
        generic_coefficients(0)


@pytest.mark.parametrize(
    "texts",
    [
        ("rat:3",),
        ("rat:2", "rat:1/2"),
        ("rat:-2", "rat:1/2"),
        ("rat:2", "rat:3", "rat:5"),
        ("zeta:4:1", "zeta:4:1"),
        ("zeta:3:1", "zeta:3:1", "zeta:3:1"),
        ("sym:x1", "sym:x2", "sym:x1*x2^-1"),
    ],
)
def test_iterated_tube_closed_form_matches_the_tubes(texts: Tuple[str, ...]) -> None:
    eigs = _eigs(*texts)
    assert iterated_tube_closed_form(eigs) == iterated_semisimple(eigs)


def test_rep_closed_form_benchmark() -> None:
    assert rep_class_closed(1, 0, _eigs("rat:2")) == Q * (Q * Q - 1) * (Q * Q + 4 * Q + 1)


def test_rep_closed_form_needs_a_semisimple_puncture() -> None:
    with pytest.raises(UnsupportedSurface):
        rep_class_closed(1, 1, ())
    with pytest.raises(UnsupportedSurface):
        rep_class_for_surface(SurfaceSpec(genus=2))


def test_char_benchmark() -> None:
    spec = SurfaceSpec(genus=1, semisimple=_eigs("sym:x1"))
    assert char_class_closed(spec) == Q * Q + 4 * Q + 1


def test_char_with_reducibles_at_seven() -> None:
    spec = SurfaceSpec(genus=1, semisimple=_eigs("rat:2", "rat:1/2"))
    assert check_char_routes(spec).evaluate(7) == 3144


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("jordan_plus", [0, 1])
@pytest.mark.parametrize(
    "texts",
    [("rat:3",), ("rat:2", "rat:1/2"), ("rat:-2", "rat:1/2"), ("zeta:4:1", "zeta:4:1"), ("rat:2", "rat:3", "rat:1/6")],
)
def test_char_routes_agree(genus: int, jordan_plus: int, texts: Tuple[str, ...]) -> None:
    spec = SurfaceSpec(genus=genus, jordan_plus=jordan_plus, semisimple=_eigs(*texts))
    display = char_class_closed(spec, route=CharRoute.DISPLAY)
    assert display == char_class_closed(spec, route="strata")
    assert display.is_polynomial
    if jordan_plus:
        assert display * P3 == rep_class_closed(genus, jordan_plus, spec.semisimple)


def test_char_route_disagreement_is_reported(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(char_module, "_display_route", lambda g, s, alpha: ZERO)
    with pytest.raises(ClosedFormMismatch):
        check_char_routes(SurfaceSpec(genus=1, semisimple=_eigs("rat:3")))


def test_char_closed_forms_need_semisimple_punctures_and_genus() -> None:
    with pytest.raises(UnsupportedSurface):
        char_class_closed(SurfaceSpec(genus=1, jordan_plus=1))
    with pytest.raises(UnsupportedSurface):
        char_class_closed(SurfaceSpec(genus=0, semisimple=_eigs("rat:2", "rat:1/2")))


@pytest.mark.parametrize("genus", [1, 2, 3])
@pytest.mark.parametrize("texts", [("rat:2", "rat:1/2"), ("zeta:3:1", "zeta:3:1", "zeta:3:1")])
def test_reducible_strata_add_up(genus: int, texts: Tuple[str, ...]) -> None:
    eigs = _eigs(*texts)
    reducible, diagonal = reducible_and_diag_classes(genus, eigs)
    strata = reducible_strata(genus, eigs)
    assert strata.total == reducible
    assert strata.completely_reducible == diagonal * (Q * Q + Q)


def test_interaction_term() -> None:
    assert not interaction_term(parse_eigen_list(["sym:x1", "sym:x2"]))
    scale = Q * P3**2 * (Q + 1)
    assert interaction_term(parse_eigen_list(["rat:2", "rat:1/2"])) == ModuleElement(
        {G.T2: scale, G.TP: scale * (Q - 1)}
    )
    assert interaction_term(parse_eigen_list(["zeta:4:1", "zeta:4:1"])) == ModuleElement(
        {G.T2: scale, G.TP: scale * (Q - 1), G.TM2: scale, G.TM: scale * (Q - 1)}
    )
