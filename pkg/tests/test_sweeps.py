import numpy as np
import pytest

from timelock import SweepConfig, SynthSpec, fsamp_sweep, padding_sweep
from timelock.sweeps import CONTRACT_T1, DIRECTIONS, EXPAND_T1, direction_targets
from timelock.model import Partition

QUICK_SYNTH = SynthSpec(duration_s=0.5)
QUICK_SWEEP = SweepConfig(pad_fractions=(0.001, 0.1), fsamp_factors=(1.0, 0.5))


@pytest.fixture(scope="module")
def default_rows():
    """Full-size padding sweep: default demonstration trial and default grids."""
    return padding_sweep(SweepConfig())


class TestSweepConfig:
    def test_defaults(self):
        cfg = SweepConfig()
        assert cfg.pad_fractions[0] == 0.001
        assert cfg.pad_fractions[-1] == 0.25
        assert 0.01 in cfg.pad_fractions
        assert 0.1 in cfg.pad_fractions
        assert cfg.fsamp_factors == (1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125)
        assert cfg.directions == DIRECTIONS
        assert cfg.warp_magnitude == 0.2

    @pytest.mark.parametrize("kwargs", [
        {"pad_fractions": ()},
        {"pad_fractions": (-0.1,)},
        {"fsamp_factors": ()},
        {"fsamp_factors": (0.5, 1.0)},        # not descending
        {"fsamp_factors": (1.5,)},            # outside (0, 1]
        {"fsamp_factors": (0.0,)},
        {"directions": ()},
        {"directions": ("sideways",)},
        {"directions": (CONTRACT_T1, CONTRACT_T1)},
        {"warp_magnitude": 0.0},
        {"warp_magnitude": -0.2},
    ])
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SweepConfig(**kwargs)


class TestDirectionTargets:
    def test_contract_t1(self, demo_partition):
        t1, t2 = direction_targets(demo_partition, CONTRACT_T1, 0.2)
        assert t1 == round(demo_partition.len_t1 * 0.8)
        assert t1 + t2 == demo_partition.len_t1 + demo_partition.len_t2

    def test_expand_t1(self, demo_partition):
        t1, t2 = direction_targets(demo_partition, EXPAND_T1, 0.2)
        assert t1 == round(demo_partition.len_t1 * 1.2)
        assert t1 + t2 == demo_partition.len_t1 + demo_partition.len_t2

    def test_extreme_magnitude_clamps(self):
        p = Partition(0, 10, 20, 20)
        t1, t2 = direction_targets(p, EXPAND_T1, 5.0)
        assert t1 == 19 and t2 == 1


class TestPaddingSweep:
    def test_row_grid_and_order(self, default_rows):
        cfg = SweepConfig()
        assert len(default_rows) == 2 * 2 * len(cfg.pad_fractions)
        expected = [(d, iv, pad)
                    for d in cfg.directions
                    for iv in ("t1", "t2")
                    for pad in cfg.pad_fractions]
        got = [(r.direction, r.interval, r.pad_fraction) for r in default_rows]
        assert got == expected
        assert all(r.status == "ok" for r in default_rows)

    def test_reference_padding_meets_similarity_claim(self, default_rows):
        for r in default_rows:
            if r.pad_fraction == 0.1:
                assert r.dtw_similarity >= 0.99

    def test_small_padding_degrades_correlation(self, default_rows):
        by_cell = {(r.direction, r.interval, r.pad_fraction): r for r in default_rows}
        for d in DIRECTIONS:
            for iv in ("t1", "t2"):
                assert (by_cell[(d, iv, 0.1)].correlation
                        > by_cell[(d, iv, 0.001)].correlation)

    def test_energy_ratio_near_one_at_reference_padding(self, default_rows):
        for r in default_rows:
            if r.pad_fraction == 0.1:
                assert r.energy_ratio == pytest.approx(1.0, abs=0.01)

    def test_zero_pad_fraction_still_produces_rows(self):
        rows = padding_sweep(SweepConfig(pad_fractions=(0.0,)), QUICK_SYNTH)
        assert len(rows) == 4
        assert all(r.status == "ok" for r in rows)

    def test_failing_cells_become_error_rows(self):
        # a 4-sample trial leaves single-sample intervals the resampler rejects
        tiny = SynthSpec(duration_s=4.0 / 2048.0)
        rows = padding_sweep(SweepConfig(pad_fractions=(0.1,)), tiny)
        assert len(rows) == 4
        assert all(r.status == "SegmentTooShortError" for r in rows)
        assert all(r.correlation is None for r in rows)


class TestFsampSweep:
    def test_single_unit_factor_matches_padding_sweep(self):
        frows = fsamp_sweep(SweepConfig(pad_fractions=(0.001, 0.1),
                                        fsamp_factors=(1.0,)), QUICK_SYNTH)
        prows = padding_sweep(SweepConfig(pad_fractions=(0.001, 0.1),
                                          fsamp_factors=(1.0,)), QUICK_SYNTH)
        assert len(frows) == len(prows)
        for fr, pr in zip(frows, prows):
            assert fr.fsamp_factor == 1.0
            assert (fr.direction, fr.interval, fr.pad_fraction) == \
                   (pr.direction, pr.interval, pr.pad_fraction)
            assert fr.correlation == pr.correlation
            assert fr.dtw_similarity == pr.dtw_similarity

    def test_factor_order_and_grid(self):
        rows = fsamp_sweep(QUICK_SWEEP, QUICK_SYNTH)
        assert len(rows) == 2 * 2 * 2 * 2
        assert [r.fsamp_factor for r in rows[:8]] == [1.0] * 8
        assert [r.fsamp_factor for r in rows[8:]] == [0.5] * 8

    def test_nyquist_breaking_factor_yields_error_rows(self):
        rows = fsamp_sweep(SweepConfig(pad_fractions=(0.1,),
                                       fsamp_factors=(1.0, 0.001)), QUICK_SYNTH)
        ok = [r for r in rows if r.fsamp_factor == 1.0]
        bad = [r for r in rows if r.fsamp_factor == 0.001]
        assert all(r.status == "ok" for r in ok)
        assert all(r.status == "NyquistViolationError" for r in bad)
        assert all(r.correlation is None for r in bad)
