import sys, os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../.."))

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from apis.penta.algebra import (
    FrankKind,
    FrankParameter,
    _clamp_unit,
    conjugate_tnorm,
    tconorm,
    tnorm,
    tnorm_many,
    unit_value,
)
from apis.penta.errors import ConsistencyError, InvalidParameterError, UnitRangeError

GRID = [
    FrankParameter.minimum(),
    FrankParameter.of(0.1),
    FrankParameter.of(0.5),
    FrankParameter.product(),
    FrankParameter.of(2),
    FrankParameter.of(10),
    FrankParameter.of(100),
    FrankParameter.lukasiewicz(),
]

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
param = st.sampled_from(GRID)


@pytest.fixture(scope="module")
def sample():
    rng = np.random.default_rng(20240607)
    return rng.random((10_000, 2)).tolist()


# ── Examples ──────────────────────────────────────────────────────────────────

def test_tnorm_min_limit():
    assert tnorm(0, 0.3, 0.7) == 0.3


def test_tnorm_product_limit():
    assert tnorm(1, 0.5, 0.4) == pytest.approx(0.2, abs=1e-12)


def test_tnorm_s2_matches_closed_form():
    expected = math.log2(1 + (math.sqrt(2) - 1) ** 2)
    assert tnorm(2, 0.5, 0.5) == pytest.approx(expected, abs=1e-12)
    assert tnorm(2, 0.5, 0.5) == pytest.approx(0.2284, abs=1e-4)


def test_tconorm_examples():
    assert tconorm(0, 0.3, 0.7) == pytest.approx(0.7, abs=1e-12)
    assert tconorm(1, 0.5, 0.4) == pytest.approx(0.7, abs=1e-12)
    assert tconorm(2, 0.5, 0.5) == pytest.approx(1 - tnorm(2, 0.5, 0.5), abs=1e-12)


def test_conjugate_examples():
    assert conjugate_tnorm(0, 0.7, 0.6) == pytest.approx(0.3, abs=1e-12)
    assert conjugate_tnorm(1, 0.5, 0.4) == pytest.approx(0.2, abs=1e-12)
    v = conjugate_tnorm(2, 0.3, 0.8)
    assert v == pytest.approx(tnorm(0.5, 0.3, 0.8), abs=1e-12)
    assert v == pytest.approx(0.3 - tnorm(2, 0.3, 0.2), abs=1e-9)


def test_limit_branches_are_exact():
    assert tnorm(FrankParameter.lukasiewicz(), 0.7, 0.6) == pytest.approx(0.3, abs=1e-15)
    assert tconorm(FrankParameter.lukasiewicz(), 0.7, 0.6) == 1.0
    assert tconorm(FrankParameter.minimum(), 0.2, 0.9) == 0.9


def test_boundary_identities_are_exact():
    for p in GRID:
        assert tnorm(p, 0.37, 1.0) == 0.37
        assert tnorm(p, 1.0, 0.37) == 0.37
        assert tnorm(p, 0.37, 0.0) == 0.0
        assert tnorm(p, 0.0, 0.37) == 0.0


# ── Parameters ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("raw,kind", [
    ("min", FrankKind.MIN),
    ("prod", FrankKind.PRODUCT),
    ("luk", FrankKind.LUKASIEWICZ),
    ("inf", FrankKind.LUKASIEWICZ),
    ("0", FrankKind.MIN),
    ("1", FrankKind.PRODUCT),
    ("2.5", FrankKind.GENERAL),
    (" LUK ", FrankKind.LUKASIEWICZ),
])
def test_parse_names_and_numbers(raw, kind):
    assert FrankParameter.parse(raw).kind is kind


@pytest.mark.parametrize("raw", ["-1", "abc", "nan", "", "frank"])
def test_parse_rejects_bad_input(raw):
    with pytest.raises(InvalidParameterError):
        FrankParameter.parse(raw)


def test_branch_thresholds():
    assert FrankParameter.of(1 + 1e-10).kind is FrankKind.PRODUCT
    assert FrankParameter.of(1 + 1e-7).kind is FrankKind.GENERAL
    assert FrankParameter.of(1e-13).kind is FrankKind.MIN
    assert FrankParameter.of(1e-11).kind is FrankKind.GENERAL
    assert FrankParameter.of(1e13).kind is FrankKind.LUKASIEWICZ


def test_conjugate_swaps_limits_and_is_involutive():
    assert FrankParameter.minimum().conjugate() == FrankParameter.lukasiewicz()
    assert FrankParameter.product().conjugate() == FrankParameter.product()
    for p in GRID:
        assert p.conjugate().conjugate() == p
    assert FrankParameter.of(4).conjugate().s == pytest.approx(0.25)


def test_label():
    assert FrankParameter.parse("min").label == "min"
    assert str(FrankParameter.of(2)) == "2"


def test_unit_value_rejects_out_of_range():
    with pytest.raises(UnitRangeError, match=r"x out of \[0,1\]"):
        tnorm(0, 1.3, 0.2)
    with pytest.raises(UnitRangeError):
        unit_value(float("nan"), "mu")
    assert unit_value("0.25", "mu") == 0.25


def test_clamp_unit_absorbs_drift_only():
    assert _clamp_unit(1.0 + 1e-13, "t") == 1.0
    assert _clamp_unit(-1e-13, "t") == 0.0
    with pytest.raises(ConsistencyError):
        _clamp_unit(-1e-6, "t")


# ── Identities over the sample ────────────────────────────────────────────────

def test_frank_equation(sample):
    for p in GRID:
        worst = max(
            abs(tnorm(p, x, y) - tnorm(p, 1 - x, 1 - y) - (x + y - 1)) for x, y in sample
        )
        assert worst <= 1e-9, p


def test_frank_equation_equivalent_form(sample):
    for p in GRID:
        worst = max(
            abs(tnorm(p, x, 1 - y) - tnorm(p, y, 1 - x) - (x - y)) for x, y in sample
        )
        assert worst <= 1e-9, p


def test_duality(sample):
    for p in GRID:
        worst = max(abs(tconorm(p, x, y) + tnorm(p, x, y) - (x + y)) for x, y in sample)
        assert worst <= 1e-9, p


def test_conjugacy(sample):
    for p in GRID:
        for x, alpha in sample[:2500]:
            beta = 1 - alpha
            assert abs(conjugate_tnorm(p, x, alpha) + tnorm(p, x, beta) - x) <= 1e-9


def test_conjugate_equals_parameter_swap_and_difference_form(sample):
    for p in GRID:
        for x, y in sample[:2500]:
            swapped = tnorm(p.conjugate(), x, y)
            assert abs(conjugate_tnorm(p, x, y) - swapped) <= 1e-9
            assert abs(swapped - (x - tnorm(p, x, 1 - y))) <= 1e-9


EXTREME = [FrankParameter.of(s) for s in (1.1e-12, 1e-11, 1e-9, 1e9, 1e11, 9e11)]


def test_extreme_parameters_stay_on_general_branch():
    assert all(p.kind is FrankKind.GENERAL for p in EXTREME)


def test_frank_identities_near_branch_cutoffs(sample):
    for p in EXTREME:
        for x, y in sample[:3000]:
            assert abs(tnorm(p, x, y) - tnorm(p, 1 - x, 1 - y) - (x + y - 1)) <= 1e-9, (p, x, y)
            assert abs(tconorm(p, x, y) + tnorm(p, x, y) - (x + y)) <= 1e-9, (p, x, y)
            assert abs(conjugate_tnorm(p, x, y) - (x - tnorm(p, x, 1 - y))) <= 1e-9, (p, x, y)


# ── T-norm axioms ─────────────────────────────────────────────────────────────

@given(param, unit, unit)
def test_commutativity(p, x, y):
    assert abs(tnorm(p, x, y) - tnorm(p, y, x)) <= 1e-9


@given(param, unit, unit, unit)
def test_associativity(p, x, y, z):
    assert abs(tnorm(p, tnorm(p, x, y), z) - tnorm(p, x, tnorm(p, y, z))) <= 1e-9


@given(param, unit)
def test_identity_element(p, x):
    assert tnorm(p, x, 1.0) == x


@given(param, unit, unit, unit)
def test_bounded_by_min_and_lukasiewicz(p, x, y, _):
    v = tnorm(p, x, y)
    assert max(0.0, x + y - 1) - 1e-9 <= v <= min(x, y) + 1e-9


def test_monotone_on_lattice():
    points = [i / 20 for i in range(21)]
    for p in GRID:
        for x in points:
            row = [tnorm(p, x, y) for y in points]
            assert all(b >= a - 1e-9 for a, b in zip(row, row[1:])), p


def test_tnorm_many_folds_left():
    p = FrankParameter.of(3)
    values = [0.9, 0.8, 0.7, 0.6]
    expected = tnorm(p, tnorm(p, tnorm(p, 0.9, 0.8), 0.7), 0.6)
    assert tnorm_many(p, values) == expected
    assert tnorm_many(p, []) == 1.0


# ── Limits ────────────────────────────────────────────────────────────────────

def test_limit_towards_min(sample):
    s = 1e-7
    p = FrankParameter.of(s)
    bound = math.log(2 / (1 - s)) / abs(math.log(s))
    for x, y in sample:
        gap = min(x, y) - tnorm(p, x, y)
        assert -1e-12 <= gap <= bound + 1e-12


def test_limit_towards_lukasiewicz(sample):
    s = 1e7
    p = FrankParameter.of(s)
    bound = math.log(2 / (1 - 1 / s)) / math.log(s)
    for x, y in sample:
        gap = tnorm(p, x, y) - max(0.0, x + y - 1)
        assert -1e-12 <= gap <= bound + 1e-12


def test_limit_towards_product(sample):
    for s in (1 - 1e-7, 1 + 1e-7):
        p = FrankParameter.of(s)
        assert p.kind is FrankKind.GENERAL
        assert max(abs(tnorm(p, x, y) - x * y) for x, y in sample) <= 1e-6
