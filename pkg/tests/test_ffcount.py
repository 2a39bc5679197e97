from __future__ import annotations

from typing import Tuple

import pytest

from ffcount import lifting
from ffcount.budget import WorkBudget
from ffcount.errors import (
    NotPrime,
    OracleMismatch,
    PrimeTooLarge,
    ProfileSystemSingular,
    TraceNotLiftable,
    WorkLimitExceeded,
)
from ffcount.group import ID, MINUS_ID, group_data
from ffcount.lifting import compare_point_count, is_admissible, lift_trace, trace_of_eigenvalue
from ffcount.points import ResidueSurface, count_representation_points
from ffcount.profiles import fiber_profile_counts, samples_every_pattern
from interpolate.fit import expected_sky_column, semisimple_residue
from kring.localized import ZERO
from operators.linear import TubeKind
from operators.tubes import load_operator_data
from wmodule.element import CORE_ORDER
from wmodule.element import CoreGenerator as G


@pytest.fixture(scope="module")
def operator_data() -> dict:
    return load_operator_data()


def test_group_enumeration_at_three() -> None:
    group = group_data(3)
    assert group.order == 24
    # Id, -Id, four unipotent classes and the single regular trace 0
    assert len(group.classes) == 7
    assert int(group.class_sizes.sum()) == 24
    assert int(group.class_sizes[ID]) == int(group.class_sizes[MINUS_ID]) == 1


def test_group_guardrails() -> None:
    with pytest.raises(NotPrime):
        group_data(4)
    with pytest.raises(NotPrime):
        group_data(2)
    with pytest.raises(PrimeTooLarge):
        group_data(67, max_prime=61)


@pytest.mark.parametrize("p,expected", [(3, 168), (5, 1080), (7, 3696)])
def test_commuting_pairs(p: int, expected: int) -> None:
    assert count_representation_points(p, ResidueSurface(genus=1)) == expected


def test_small_spheres() -> None:
    assert count_representation_points(3, ResidueSurface(genus=0, jordan_plus=1)) == 0
    assert count_representation_points(5, ResidueSurface(genus=0, minus_id=2)) == 1
    assert count_representation_points(5, ResidueSurface(genus=0, traces=(0, 0))) == 30


def test_work_limit_is_enforced() -> None:
    with pytest.raises(WorkLimitExceeded):
        count_representation_points(5, ResidueSurface(genus=2), work_limit=10)
    budget = WorkBudget(10_000)
    with pytest.raises(WorkLimitExceeded):
        budget.charge(20_000, label="sample")
    assert budget.remaining == 10_000


def test_trace_plus_minus_two_cannot_be_a_puncture() -> None:
    with pytest.raises(TraceNotLiftable):
        count_representation_points(5, ResidueSurface(genus=1, traces=(2,)))
    with pytest.raises(TraceNotLiftable):
        lift_trace(5, 3)


def test_lifted_traces_return_to_their_residue() -> None:
    for t in range(13):
        if t in (2, 11):
            continue
        assert trace_of_eigenvalue(13, lift_trace(13, t)) == t


def test_admissibility() -> None:
    assert is_admissible(17, ResidueSurface(genus=1, traces=(0,)))
    # eigenvalue 2 of trace 0 mod 5 is not a square
    assert not is_admissible(5, ResidueSurface(genus=1, traces=(0,)))
    assert not is_admissible(7, ResidueSurface(genus=1, minus_id=2, traces=(6,)))
    assert not is_admissible(3, ResidueSurface(genus=0, traces=(0,)))


ORACLE_CASES: Tuple[Tuple[int, ResidueSurface], ...] = (
    (3, ResidueSurface(genus=1)),
    (5, ResidueSurface(genus=1)),
    (17, ResidueSurface(genus=1, traces=(0,))),
    (3, ResidueSurface(genus=1, jordan_plus=1)),
    (3, ResidueSurface(genus=0, traces=(0,))),
    (7, ResidueSurface(genus=1, traces=(6,))),
    (13, ResidueSurface(genus=1, jordan_minus=1, traces=(12,))),
)


@pytest.mark.parametrize("p,surface", ORACLE_CASES)
def test_point_counts_match_the_classes(operator_data: dict, p: int, surface: ResidueSurface) -> None:
    comparison = compare_point_count(p, surface, data=operator_data, strict=True)
    assert comparison.agree, comparison.to_dict()


def test_comparison_outside_the_regime_does_not_fail(operator_data: dict) -> None:
    comparison = compare_point_count(5, ResidueSurface(genus=1, traces=(0,)), data=operator_data, strict=True)
    assert not comparison.admissible
    assert comparison.count == 1920
    assert comparison.predicted == 5520


def test_strict_comparison_raises_inside_the_regime(monkeypatch: pytest.MonkeyPatch, operator_data: dict) -> None:
    monkeypatch.setattr(lifting, "assemble_representation_class", lambda spec, data=None: ZERO)
    with pytest.raises(OracleMismatch):
        compare_point_count(5, ResidueSurface(genus=1), data=operator_data, strict=True)


def test_sky_pairs_that_hide_a_character_pattern() -> None:
    # mod 13 the traces 1 and 12 are the only ones with chi(t-2) = chi(t+2) = 1
    assert not samples_every_pattern(13, (1, 12))
    assert samples_every_pattern(13, (3, 10))
    assert samples_every_pattern(17, (1, 16))
    with pytest.raises(ProfileSystemSingular):
        fiber_profile_counts(13, TubeKind.JORDAN_PLUS, 1)
    profile = fiber_profile_counts(13, TubeKind.JORDAN_PLUS, 3)
    core, sky = expected_sky_column(TubeKind.JORDAN_PLUS, 13, 3)
    assert {gen.value: value for gen, value in profile.core.items()} == core
    assert profile.sky == sky


def test_identity_input_of_semisimple_tube() -> None:
    p = 17
    lam = semisimple_residue(p)
    t0 = (lam + pow(lam, -1, p)) % p
    profile = fiber_profile_counts(p, TubeKind.SEMISIMPLE, G.T2, trace0=t0)
    assert profile.core == {}
    assert profile.sky == {t0: (p * p + p) * (p**3 - p)}


@pytest.mark.parametrize("kind", [TubeKind.JORDAN_PLUS, TubeKind.JORDAN_MINUS])
def test_jordan_profiles_match_the_fitted_matrix(operator_data: dict, kind: TubeKind) -> None:
    p = 13
    fitted = operator_data[kind]
    for source in CORE_ORDER:
        profile = fiber_profile_counts(p, kind, source)
        for output in CORE_ORDER:
            assert profile.coefficient(output) == fitted.entry(output, source).evaluate(p), (source, output)
