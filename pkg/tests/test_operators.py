from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from eigen.orbits import orbit_of
from eigen.values import Rational, RootOfUnity, eigen_neg
from engine_config import DEFAULT_DATA_FILE
from kring.localized import ONE, P3, Q
from operators.datafile import FittedOperator, read_operator_file, write_operator_file
from operators.errors import MissingOperatorData, OperatorDataCorrupt
from operators.eta import eta_apply, eta_inverse_apply
from operators.linear import TubeKind
from operators.semisimple import delta, semisimple_tube, semisimple_tube_apply
from operators.tubes import (
    handle_sky_image,
    handle_tube,
    handle_tube_apply,
    jordan_sky_image,
    jordan_tube,
    jordan_tube_apply,
    load_operator_data,
)
from wmodule.element import CORE_ORDER
from wmodule.element import CoreGenerator as G
from wmodule.element import ModuleElement

LAMBDA0 = Rational(Fraction(3))
SAMPLE_ORBIT = orbit_of(Rational(Fraction(5)))


@pytest.fixture(scope="module")
def operator_data() -> dict:
    return load_operator_data()


def _basis_vectors() -> list:
    return [ModuleElement.basis(gen) for gen in CORE_ORDER] + [ModuleElement.basis(SAMPLE_ORBIT)]


def test_eta_and_its_inverse_compose_to_identity() -> None:
    for vector in _basis_vectors():
        assert eta_inverse_apply(eta_apply(vector)) == vector
        assert eta_apply(eta_inverse_apply(vector)) == vector


def test_eta_scales_jordan_and_skyscraper_generators() -> None:
    assert eta_apply(ModuleElement.basis(G.TP)) == ModuleElement.basis(G.TP, Q * Q - 1)
    assert eta_apply(ModuleElement.basis(SAMPLE_ORBIT)) == ModuleElement.basis(SAMPLE_ORBIT, Q * Q + Q)


def test_delta_collapses_trace_plus_minus_two() -> None:
    assert delta(Rational(Fraction(1))) == ModuleElement({G.T2: ONE, G.TP: Q - 1})
    assert delta(Rational(Fraction(-1))) == ModuleElement({G.TM2: ONE, G.TM: Q - 1})
    assert delta(Rational(Fraction(1, 3))) == ModuleElement.basis(orbit_of(LAMBDA0), Q)


def test_semisimple_tube_moves_identity_to_its_trace() -> None:
    tube = semisimple_tube(LAMBDA0)
    image = tube.apply(ModuleElement.basis(G.T2))
    assert image == ModuleElement.basis(orbit_of(LAMBDA0), P3 * (Q * Q + Q))
    minus = tube.apply(ModuleElement.basis(G.TM2))
    assert minus == ModuleElement.basis(orbit_of(eigen_neg(LAMBDA0)), P3 * (Q * Q + Q))


def test_reduced_semisimple_tube_is_unreduced_after_eta_inverse() -> None:
    reduced = semisimple_tube(LAMBDA0, reduced=True)
    unreduced = semisimple_tube(LAMBDA0, reduced=False)
    for vector in _basis_vectors():
        assert reduced.apply(vector) == unreduced.apply(eta_inverse_apply(vector))


def test_semisimple_tube_with_roots_of_unity() -> None:
    tube = semisimple_tube(RootOfUnity(8, 1))
    image = tube.apply(ModuleElement.basis(orbit_of(RootOfUnity(8, 1))))
    # lambda0 * lambda0^-1 = 1 lands on T_2 and the Jordan stratum
    assert image.coefficient(G.T2) == P3
    assert image.coefficient(orbit_of(RootOfUnity(4, 1))) == P3 * Q


def test_fitted_tubes_are_unreduced_after_eta_inverse(operator_data: dict) -> None:
    pairs = [
        (handle_tube(reduced=True, data=operator_data), handle_tube(reduced=False, data=operator_data)),
        (jordan_tube(1, reduced=True, data=operator_data), jordan_tube(1, reduced=False, data=operator_data)),
        (jordan_tube(-1, reduced=True, data=operator_data), jordan_tube(-1, reduced=False, data=operator_data)),
    ]
    for reduced, unreduced in pairs:
        for vector in _basis_vectors():
            assert reduced.apply(vector) == unreduced.apply(eta_inverse_apply(vector))


def test_fitted_identity_columns(operator_data: dict) -> None:
    handle = handle_tube(reduced=False, data=operator_data)
    # 1080 commuting pairs in SL2(F_5), times |SL2(F_5)| = 120
    assert handle.core_matrix()[G.T2][G.T2].evaluate(5) == 1080 * 120
    jordan = jordan_tube(1, reduced=False, data=operator_data)
    assert jordan.core_matrix()[G.T2][G.TP] == P3 * (Q * Q - 1)
    assert jordan.core_matrix()[G.T2][G.T2] == 0


def test_skyscraper_columns_of_fitted_tubes() -> None:
    image = jordan_sky_image(1, SAMPLE_ORBIT)
    assert image.coefficient(SAMPLE_ORBIT) != 0
    flipped = jordan_sky_image(-1, SAMPLE_ORBIT)
    assert flipped.coefficient(orbit_of(eigen_neg(Rational(Fraction(5))))) != 0
    assert handle_sky_image(SAMPLE_ORBIT).coefficient(G.T2) == P3**2 * (Q * Q + 4 * Q + 1)


def test_operator_file_round_trip(tmp_path: Path, operator_data: dict) -> None:
    target = write_operator_file(tmp_path / "ops.json", operator_data.values())
    restored = read_operator_file(target)
    assert restored == operator_data
    record = operator_data[TubeKind.HANDLE].to_record()
    assert FittedOperator.from_record(record).checksum == record["checksum"]


def test_tampered_operator_file_is_rejected(tmp_path: Path) -> None:
    document = json.loads(DEFAULT_DATA_FILE.read_text())
    document["operators"][0]["entries"][0][0] = [9]
    target = tmp_path / "tampered.json"
    target.write_text(json.dumps(document))
    with pytest.raises(OperatorDataCorrupt):
        read_operator_file(target)


def test_missing_operator_file(tmp_path: Path) -> None:
    with pytest.raises(MissingOperatorData):
        read_operator_file(tmp_path / "absent.json")

def test_apply_helpers(operator_data: dict) -> None:
    identity = ModuleElement.basis(G.T2)
    assert semisimple_tube_apply(orbit_of(LAMBDA0), identity) == ModuleElement.basis(orbit_of(LAMBDA0), P3 * (Q * Q + Q))
    assert semisimple_tube_apply(LAMBDA0, identity, reduced=False) == semisimple_tube(LAMBDA0, reduced=False).apply(identity)
    jordan = jordan_tube_apply(1, identity, reduced=False, data=operator_data)
    assert jordan.coefficient(G.TP) == P3 * (Q * Q - 1)
    assert jordan.coefficient(G.T2) == 0
    handle = handle_tube_apply(identity, reduced=False, data=operator_data)
    assert handle.coefficient(G.T2) == P3**2 * (Q + 4)
