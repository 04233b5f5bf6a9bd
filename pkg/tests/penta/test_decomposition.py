import sys, os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "../.."))

import logging

import numpy as np
import pytest
from hypothesis import given, strategies as st

from apis.penta.algebra import FrankParameter, tnorm
from apis.penta.decomposition import (
    _residual,
    check_partition,
    compose,
    decompose,
    decompose_lg,
    iota_direct,
    marginals,
)
from apis.penta.errors import ConsistencyError, PartitionError, UnitRangeError
from apis.penta.models import BipolarPair, PentaCoords

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


def _close(coords, expected, tol=1e-12):
    return all(abs(a - b) <= tol for a, b in zip(coords.as_tuple(), expected))


@pytest.fixture(scope="module")
def sample():
    rng = np.random.default_rng(7)
    return rng.random((10_000, 2)).tolist()


# ── Examples ──────────────────────────────────────────────────────────────────

def test_decompose_truth_corner_product():
    assert _close(decompose(BipolarPair(x=1, y=0), FrankParameter.product()), (1, 0, 0, 0, 0))


def test_decompose_midpoint_product():
    c = decompose((0.5, 0.5), 1)
    assert _close(c, (0.25, 0.25, 0.1875, 0.1875, 0.125))


def test_decompose_min_matches_closed_form_example():
    c = decompose((0.7, 0.2), 0)
    assert _close(c, (0.5, 0, 0, 0.1, 0.4))


@pytest.mark.parametrize("pair,expected", [
    ((0.7, 0.2), (0.5, 0, 0, 0.1, 0.4)),
    ((0.5, 0.5), (0, 0, 0, 0, 1)),
    ((0.8, 0.7), (0.1, 0, 0.5, 0, 0.4)),
])
def test_decompose_lg_examples(pair, expected):
    assert _close(decompose_lg(pair), expected)


@pytest.mark.parametrize("coords,expected", [
    ((1, 0, 0, 0, 0), (1, 0)),
    ((0.5, 0, 0, 0.1, 0.4), (0.7, 0.2)),
    ((0.25, 0.25, 0.1875, 0.1875, 0.125), (0.5, 0.5)),
])
def test_compose_examples(coords, expected):
    tau, phi, kappa, pi, iota = coords
    pair = compose(PentaCoords(tau=tau, phi=phi, kappa=kappa, pi=pi, iota=iota))
    assert pair.x == pytest.approx(expected[0], abs=1e-12)
    assert pair.y == pytest.approx(expected[1], abs=1e-12)


def test_compose_rejects_broken_partition():
    bad = PentaCoords.model_construct(tau=0.5, phi=0.5, kappa=0.5, pi=0.0, iota=0.0)
    with pytest.raises(PartitionError, match="partition violation"):
        compose(bad)


def test_check_partition_rejects_out_of_range():
    with pytest.raises(UnitRangeError):
        check_partition(1.2, -0.2, 0, 0, 0)


def test_negative_residual_is_consistency_error():
    with pytest.raises(ConsistencyError):
        _residual(0.6, 0.6, 0.0, 0.0)
    assert _residual(0.5, 0.5, 1e-13, 0.0) == 0.0


# ── Partition of unity and round trip ─────────────────────────────────────────

def test_partition_and_round_trip_over_grid(sample):
    for p in GRID:
        for x, y in sample:
            c = decompose((x, y), p)
            assert abs(sum(c.as_tuple()) - 1) <= 1e-9
            back = compose(c)
            assert abs(back.x - x) <= 1e-9 and abs(back.y - y) <= 1e-9, (p, x, y)


@pytest.mark.parametrize("s", [1.1e-12, 1e-11, 1e9, 1e11, 9e11])
def test_round_trip_near_branch_cutoffs(sample, s):
    p = FrankParameter.of(s)
    for x, y in sample[:3000]:
        c = decompose((x, y), p)
        assert abs(sum(c.as_tuple()) - 1) <= 1e-9
        back = compose(c)
        assert abs(back.x - x) <= 1e-9 and abs(back.y - y) <= 1e-9, (x, y)


def test_large_parameter_leaves_no_negative_residual():
    c = decompose((0.16065200877512686, 0.9699254132161326), FrankParameter.of(1e11))
    assert c.iota >= 0.0
    back = compose(c)
    assert abs(back.x - 0.16065200877512686) <= 1e-9


def test_residual_agrees_with_direct_formula(sample, caplog):
    with caplog.at_level(logging.WARNING, logger="apis.penta.decomposition"):
        for p in GRID:
            for x, y in sample[:1000]:
                c = decompose((x, y), p)
                assert abs(c.iota - iota_direct((x, y), p)) <= 1e-9
    assert "mismatch" not in caplog.text


def test_quadruple_grouping_is_immaterial():
    p = FrankParameter.of(5)
    x, y = 0.35, 0.8
    left = iota_direct((x, y), p) / 2
    right = tnorm(p, 1 - x, tnorm(p, 1 - y, tnorm(p, x, y)))
    assert abs(left - right) <= 1e-9


def test_closed_form_agreement_on_grid():
    p = FrankParameter.minimum()
    for i in range(101):
        for j in range(101):
            pair = (i / 100, j / 100)
            a = decompose(pair, p).as_tuple()
            b = decompose_lg(pair).as_tuple()
            assert max(abs(u - v) for u, v in zip(a, b)) <= 1e-12, pair


def test_marginal_identities_at_s0(sample):
    for x, y in sample:
        diff, total = marginals(decompose((x, y), 0))
        assert abs(diff - (x - y)) <= 1e-12
        assert abs(total - (x + y)) <= 1e-12


@pytest.mark.parametrize("pair,expected", [
    ((1, 0), (1, 0, 0, 0, 0)),
    ((0, 1), (0, 1, 0, 0, 0)),
    ((0, 0), (0, 0, 0, 1, 0)),
    ((1, 1), (0, 0, 1, 0, 0)),
])
def test_corners_for_every_parameter(pair, expected):
    for p in GRID:
        assert _close(decompose(pair, p), expected, tol=1e-12), p


def test_indeterminacy_peaks_at_midpoint_for_s0():
    assert decompose_lg((0.5, 0.5)).iota == 1.0
    for i in range(0, 101, 5):
        for j in range(0, 101, 5):
            assert decompose_lg((i / 100, j / 100)).iota <= 1.0


# ── Symmetries ────────────────────────────────────────────────────────────────

@given(st.sampled_from(GRID), unit, unit)
def test_truth_falsity_symmetry(p, x, y):
    c = decompose((x, y), p)
    assert abs(c.tau - decompose((y, x), p).phi) <= 1e-9
    assert abs(decompose((1 - x, 1 - y), p).tau - c.phi) <= 1e-9


@given(st.sampled_from(GRID), unit, unit)
def test_indeterminacy_symmetry(p, x, y):
    iota = decompose((x, y), p).iota
    assert abs(iota - decompose((y, x), p).iota) <= 1e-9
    assert abs(iota - decompose((1 - x, 1 - y), p).iota) <= 1e-9


@given(st.sampled_from(GRID), unit, unit)
def test_undefinedness_contradiction_symmetry(p, x, y):
    c = decompose((x, y), p)
    swapped = decompose((y, x), p)
    assert abs(c.pi - swapped.pi) <= 1e-9
    assert abs(c.kappa - swapped.kappa) <= 1e-9
    assert abs(decompose((1 - x, 1 - y), p).pi - c.kappa) <= 1e-9


def test_symmetries_over_seeded_sample(sample):
    for p in (FrankParameter.minimum(), FrankParameter.of(2), FrankParameter.lukasiewicz()):
        for x, y in sample[:2000]:
            c = decompose((x, y), p)
            mirrored = decompose((y, x), p)
            flipped = decompose((1 - x, 1 - y), p)
            assert abs(c.tau - mirrored.phi) <= 1e-9
            assert abs(flipped.tau - c.phi) <= 1e-9
            assert abs(c.iota - mirrored.iota) <= 1e-9
            assert abs(c.iota - flipped.iota) <= 1e-9
            assert abs(flipped.pi - c.kappa) <= 1e-9
