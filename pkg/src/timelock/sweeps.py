"""Parameter sweeps over padding fraction and sampling frequency."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import TimelockError
from .model import Partition, partition_from_events
from .pipeline import WarpReport, plan_warp, warp_trial
from .resample import SincConfig
from .synth import SynthSpec, generate

CONTRACT_T1 = "contract_t1_expand_t2"
EXPAND_T1 = "expand_t1_contract_t2"
DIRECTIONS = (CONTRACT_T1, EXPAND_T1)
INTERVALS = ("t1", "t2")


@dataclass(frozen=True)
class SweepConfig:
    """Grids for the padding and sampling-frequency sweeps.

    pad_fractions are fractions of f_samp; fsamp_factors scale the base
    sampling rate and must be sorted descending within (0, 1];
    warp_magnitude is the fractional change applied to t1 (t2 absorbs the
    complement so total length is preserved).
    """

    pad_fractions: tuple[float, ...] = (0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.25)
    fsamp_factors: tuple[float, ...] = (1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125)
    directions: tuple[str, ...] = DIRECTIONS
    warp_magnitude: float = 0.2

    def __post_init__(self) -> None:
        if not self.pad_fractions:
            raise ValueError("pad_fractions must be nonempty")
        for pad in self.pad_fractions:
            if not (math.isfinite(pad) and pad >= 0):
                raise ValueError(f"pad fractions must be >= 0 and finite, got {pad}")
        if not self.fsamp_factors:
            raise ValueError("fsamp_factors must be nonempty")
        prev = math.inf
        for f in self.fsamp_factors:
            if not 0.0 < f <= 1.0:
                raise ValueError(f"fsamp factors must lie in (0, 1], got {f}")
            if f >= prev:
                raise ValueError(f"fsamp factors must be sorted descending, got {self.fsamp_factors}")
            prev = f
        if not self.directions:
            raise ValueError("directions must be nonempty")
        if len(set(self.directions)) != len(self.directions):
            raise ValueError(f"duplicate directions in {self.directions}")
        for d in self.directions:
            if d not in DIRECTIONS:
                raise ValueError(f"unknown direction {d!r}; choose from {DIRECTIONS}")
        if not (math.isfinite(self.warp_magnitude) and self.warp_magnitude > 0):
            raise ValueError(f"warp_magnitude must be positive, got {self.warp_magnitude}")


@dataclass(frozen=True)
class PaddingSweepRow:
    direction: str
    interval: str
    pad_fraction: float
    correlation: float | None
    dtw_distance: float | None
    dtw_similarity: float | None
    energy_ratio: float | None
    status: str


@dataclass(frozen=True)
class FsampSweepRow:
    fsamp_factor: float
    direction: str
    interval: str
    pad_fraction: float
    correlation: float | None
    dtw_similarity: float | None
    status: str


def direction_targets(p: Partition, direction: str, magnitude: float) -> tuple[int, int]:
    """Complementary target lengths for a sweep direction at a warp magnitude."""
    total = p.len_t1 + p.len_t2
    scale = 1.0 - magnitude if direction == CONTRACT_T1 else 1.0 + magnitude
    t1 = round(p.len_t1 * scale)
    t1 = min(max(t1, 1), total - 1)
    return t1, total - t1


def padding_sweep(sweep: SweepConfig, synth_spec: SynthSpec = SynthSpec(),
                  sinc: SincConfig = SincConfig()) -> list[PaddingSweepRow]:
    """Warp the demonstration trial once per (direction, pad_fraction) cell.

    Rows come out ordered by direction, interval, then pad fraction; a cell
    that raises records the error class name in its rows' status instead of
    aborting the sweep.
    """
    trial = generate(synth_spec)
    part = partition_from_events(trial)
    cells: dict[tuple[str, float], WarpReport | str] = {}
    for direction in sweep.directions:
        t1_target, t2_target = direction_targets(part, direction, sweep.warp_magnitude)
        for pad in sweep.pad_fractions:
            try:
                spec = plan_warp(part, t1_target, t2_target, pad, trial.f_samp)
                cells[(direction, pad)] = warp_trial(trial, part, spec, sinc)
            except TimelockError as err:
                cells[(direction, pad)] = type(err).__name__

    rows = []
    for direction in sweep.directions:
        for interval in INTERVALS:
            for pad in sweep.pad_fractions:
                cell = cells[(direction, pad)]
                if isinstance(cell, str):
                    rows.append(PaddingSweepRow(direction, interval, pad,
                                                None, None, None, None, cell))
                else:
                    r = cell.intervals[interval]
                    rows.append(PaddingSweepRow(
                        direction, interval, pad,
                        correlation=r.correlation,
                        dtw_distance=r.dtw.distance,
                        dtw_similarity=r.dtw.similarity,
                        energy_ratio=r.energy_ratio,
                        status="ok",
                    ))
    return rows


def fsamp_sweep(sweep: SweepConfig, synth_spec: SynthSpec = SynthSpec(),
                sinc: SincConfig = SincConfig()) -> list[FsampSweepRow]:
    """Rerun the padding sweep with the trial regenerated at each rate factor."""
    rows = []
    for factor in sweep.fsamp_factors:
        try:
            spec_f = replace(synth_spec, f_samp=synth_spec.f_samp * factor)
            inner = padding_sweep(sweep, spec_f, sinc)
        except TimelockError as err:
            name = type(err).__name__
            inner = [PaddingSweepRow(d, interval, pad, None, None, None, None, name)
                     for d in sweep.directions
                     for interval in INTERVALS
                     for pad in sweep.pad_fractions]
        for row in inner:
            rows.append(FsampSweepRow(factor, row.direction, row.interval,
                                      row.pad_fraction, row.correlation,
                                      row.dtw_similarity, row.status))
    return rows
