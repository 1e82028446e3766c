import pytest

from conftest import DEGREE3_TERMS_35
from metafib.closedform import WeightSequence, closed_form_buffer, golomb_term
from metafib.harness import (
    first_valid_index,
    verify_construction,
    verify_golomb,
    wellposed_scan,
)


class TestVerifyConstruction:
    def test_degree3_matches_listing(self):
        report = verify_construction(3, 35)
        assert report.match
        assert report.first_mismatch is None
        assert closed_form_buffer(3, 35).to_list() == DEGREE3_TERMS_35

    @pytest.mark.parametrize("d", [1, 2, 5, 10])
    def test_sweep(self, d):
        report = verify_construction(d, 10_000)
        assert report.match
        assert report.first_valid_index <= 3 * d + 3

    def test_first_valid_index_measured(self):
        # identity fails right at 3d+2 and holds from 3d+3 on
        for d in (1, 2, 3, 6):
            report = verify_construction(d, 2000)
            assert report.first_valid_index == 3 * d + 3

    def test_weighted(self):
        report = verify_construction(3, 5000, WeightSequence((9, 20)))
        assert report.match
        assert "weights" in report.subject

    def test_requires_room_past_initial_condition(self):
        with pytest.raises(ValueError):
            verify_construction(3, 11)


class TestVerifyGolomb:
    def test_small(self):
        report = verify_golomb(6)
        assert report.match
        assert report.range_checked == (1, 6)

    def test_initial_condition_only(self):
        assert verify_golomb(3).match

    def test_sweep(self):
        report = verify_golomb(100_000)
        assert report.match
        assert report.first_valid_index == 4

    def test_first_valid_index_is_first_post_initial_index(self):
        # purely quasilinear: nothing beyond the three seeds is exceptional
        assert verify_golomb(1000).first_valid_index == 4


class TestFirstValidIndex:
    def test_golomb(self):
        values = [golomb_term(m) for m in range(1, 200)]
        assert first_valid_index(values) == 4

    def test_closed_form(self):
        values = closed_form_buffer(4, 500).to_list()
        assert first_valid_index(values) == 3 * 4 + 3

    def test_identity_never_holding(self):
        # strictly positive constants: a(m - a(m-1)) + a(m - a(m-2)) = 2 != 1
        assert first_valid_index([1] * 20) == 21


class TestWellposedScan:
    def test_hofstadter_q_no_overshoot(self):
        assert wellposed_scan([1, 1], 100_000) is None

    def test_forced_overshoot(self):
        # a(3) = a(-1) + a(2) = 0 + 4 = 4 > 3
        assert wellposed_scan([1, 4], 10) == 3

    def test_golomb_no_overshoot(self):
        # computed pieces satisfy a(m) <= m, with equality on the 3n+2 class
        assert wellposed_scan([3, 2, 1], 1000) is None
        assert all(golomb_term(m) <= m for m in range(4, 1001))
        assert all(golomb_term(m) == m for m in range(5, 1001) if m % 3 == 2)

    def test_initial_values_are_not_scanned(self):
        # a(2) = 4 > 2 is part of the initial condition, not a computed term
        assert wellposed_scan([1, 4], 2) is None

    def test_scan_stops_at_first_overshoot(self):
        # beyond the overshoot the sequence would hit a forward reference,
        # so the scan must not compute past it
        assert wellposed_scan([1, 4], 10_000) == 3
