import json
from fractions import Fraction

import pytest

from arrstab.partitions import LambdaSet, Partition
from arrstab.stability import (
    PsiParams,
    StabilityReport,
    general_bound,
    is_stable_step,
    kequal_char,
    kequal_summands,
    lambda_char_smalln,
    psi,
    sharp_bound_certified,
    theorem_bounds,
)
from arrstab.symfunc import SCHUR, SymmetricFunction, e, h, schur


def test_params_validation():
    PsiParams(n=3, q=0, r=1, t=1, d=2, k=3)
    with pytest.raises(ValueError):
        PsiParams(n=0, q=0, r=1, t=1, d=2, k=3)
    with pytest.raises(ValueError):
        PsiParams(n=3, q=-1, r=1, t=1, d=2, k=3)
    with pytest.raises(ValueError):
        PsiParams(n=3, q=0, r=0, t=1, d=2, k=3)
    with pytest.raises(ValueError):
        PsiParams(n=3, q=0, r=1, t=1, d=1, k=3)
    with pytest.raises(ValueError):
        PsiParams(n=3, q=0, r=1, t=1, d=3, k=3)


def test_derived_degree():
    params = PsiParams(n=10, q=2, r=1, t=2, d=2, k=4)
    assert params.i == (10 - 1 - 2) + 2 * 2


def test_psi_vanishing():
    # r > t
    assert not psi(PsiParams(n=8, q=0, r=3, t=2, d=2, k=3))
    assert not psi(PsiParams(n=9, q=1, r=2, t=1, d=3, k=4))
    # t > n/k
    assert not psi(PsiParams(n=5, q=0, r=1, t=2, d=2, k=3))
    assert not psi(PsiParams(n=4, q=0, r=1, t=2, d=2, k=4))


def test_psi_first_nonzero():
    params = PsiParams(n=3, q=0, r=1, t=1, d=2, k=3)
    assert params.i == 3
    value = psi(params)
    assert value == schur((3,))
    assert value.is_nonnegative_integral()


def test_kequal_examples():
    for n in range(1, 9):
        assert not kequal_char(n, 1, 2, 3)
    for n in range(1, 3):
        assert not kequal_char(n, 3, 2, 3)
    assert kequal_char(3, 3, 2, 3) == schur((3,))
    assert kequal_char(4, 3, 2, 3) == schur((4,)) + schur((3, 1))
    # both-odd parity case at the smallest admissible size
    assert kequal_char(5, 11, 3, 5) == e(5)


def test_kequal_summand_enumeration():
    tags = {(p.r, p.t, p.q) for p in kequal_summands(6, 3, 2, 3)}
    assert tags == {(1, 1, 3)}
    assert kequal_summands(2, 3, 2, 3) == []
    for p in kequal_summands(12, 6, 2, 3):
        assert p.i == 6


def test_stable_step():
    assert is_stable_step(schur((3, 1)), schur((2, 1)))
    assert not is_stable_step(schur((2, 2)), schur((2, 1)))
    zero = SymmetricFunction(SCHUR)
    assert is_stable_step(zero, zero)
    assert not is_stable_step(schur((2,)), zero)
    assert not is_stable_step(zero, schur((2,)))
    with pytest.raises(ValueError):
        is_stable_step(schur((3, 1)), schur((1, 1)))


def test_theorem_bounds():
    assert theorem_bounds(2, 3, 3) == {Fraction(6)}
    assert theorem_bounds(2, 8, 13) == {Fraction(26), Fraction(104, 5)}
    assert theorem_bounds(3, 4, 0) == {Fraction(0)}
    assert theorem_bounds(3, 5, 4) == {Fraction(4)}  # odd d: single bound
    with pytest.raises(ValueError):
        theorem_bounds(2, 2, 3)


def test_general_bound():
    assert general_bound(LambdaSet([(2,)]), 5, 3) == Fraction(20, 2)
    assert general_bound(LambdaSet([(3,)]), 5, 3) == 8
    assert general_bound(LambdaSet([(2, 2)]), 1, 2) == 0
    for i in range(4):
        assert general_bound(LambdaSet([(2,)]), i, 2) == 4 * i


def test_certified_bound_small():
    report = sharp_bound_certified(2, 3, 3)
    assert report.sharp_bound == 6
    assert report.horizon == 6
    assert report.certified and not report.vacuous
    assert not report.stable_steps[6]
    assert report.chars[3] == schur((3,))


def test_certified_bound_vacuous():
    report = sharp_bound_certified(2, 4, 4)
    assert report.vacuous
    assert report.sharp_bound is None
    assert report.bound_text() == "vacuous"
    assert all(not ch for ch in report.chars.values())


def test_certified_bound_horizon_limited():
    report = sharp_bound_certified(2, 3, 3, horizon=4)
    assert not report.certified
    assert report.bound_text() == "horizon-limited"


def test_report_json_round_trip():
    report = sharp_bound_certified(2, 3, 3)
    blob = json.dumps(report.to_json_obj(), sort_keys=True)
    back = StabilityReport.from_json_obj(json.loads(blob))
    assert back.sharp_bound == report.sharp_bound
    assert back.chars == report.chars
    assert back.stable_steps == report.stable_steps
    assert back.bounds == report.bounds
    assert back.horizon == report.horizon


def test_report_csv_row():
    report = sharp_bound_certified(2, 3, 4)
    assert report.csv_row() == "3,4,7"


def test_lambda_char_smalln_examples():
    lam = LambdaSet([(2,)])
    value = lambda_char_smalln(3, 2, lam, 1)
    assert value == schur((3,)) + schur((2, 1))
    # dimension equals the number of removed hyperplanes
    from arrstab.symfunc import sn_character

    dim = sum(c * sn_character(tuple(key), (1, 1, 1)) for key, c in value.items())
    assert dim == 3
    for n in range(2, 6):
        assert not lambda_char_smalln(n, 2, lam, 0)
    # single-block base at its own size: formula and lattice model agree
    lam3 = LambdaSet([(3,)])
    assert lambda_char_smalln(3, 2, lam3, 3) == kequal_char(3, 3, 2, 3)


def test_degrees_below_first_tabulated_row_are_vacuous():
    # the d=2 tables start at i = 2k-3; everything below is identically zero
    first_row = {3: 3, 4: 5, 5: 7, 6: 9}
    for k, start in first_row.items():
        for i in range(0, start):
            report = sharp_bound_certified(2, k, i)
            assert report.vacuous, (k, i)
        report = sharp_bound_certified(2, k, start)
        assert not report.vacuous, k
