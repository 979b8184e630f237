"""End-to-end trial warping: partition, pad, resample, truncate, concatenate."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadRateError,
    BadTargetError,
    EmptyBatchError,
    InconsistentTrialsError,
    ZeroVarianceError,
)
from .metrics import DtwResult, dtw, energy, pearson
from .model import EventMarker, Partition, Trial
from .resample import SincConfig, resample_padded


@dataclass(frozen=True)
class WarpSpec:
    """Target lengths and padding policy for the two warpable intervals."""

    t1_target_len: int
    t2_target_len: int
    pad_left: int = 0
    pad_right: int = 0
    preserve_length: bool = True

    def __post_init__(self) -> None:
        for name, v in (("t1_target_len", self.t1_target_len),
                        ("t2_target_len", self.t2_target_len)):
            if int(v) != v or v < 1:
                raise BadTargetError(f"{name} must be a positive integer, got {v}")
        if self.pad_left < 0 or self.pad_right < 0:
            raise BadTargetError(
                f"pad amounts must be >= 0, got ({self.pad_left}, {self.pad_right})"
            )

    def ratios(self, p: Partition) -> tuple[float, float]:
        """Input-over-output length ratio per interval; >1 contracts, <1 expands."""
        return (p.len_t1 / self.t1_target_len, p.len_t2 / self.t2_target_len)

    def directions(self, p: Partition) -> tuple[str, str]:
        return tuple(
            "contract" if r > 1.0 else ("expand" if r < 1.0 else "identity")
            for r in self.ratios(p)
        )


@dataclass(frozen=True)
class IntervalReport:
    """Per-interval warp quality: ratio, correlation, DTW, and energies."""

    ratio: float
    correlation: float
    dtw: DtwResult
    energy_in: float
    energy_out: float

    @property
    def energy_ratio(self) -> float:
        """ratio * E_out / E_in; 1.0 means energy scaled exactly as predicted."""
        if self.energy_in == 0.0:
            return math.nan
        return self.ratio * self.energy_out / self.energy_in


@dataclass(frozen=True)
class WarpReport:
    """A warped trial plus the per-interval quality metrics."""

    warped: Trial
    t1: IntervalReport
    t2: IntervalReport

    @property
    def intervals(self) -> dict[str, IntervalReport]:
        return {"t1": self.t1, "t2": self.t2}


def plan_warp(p: Partition, t1_target: int, t2_target: int, pad_fraction: float,
              f_samp: float, preserve_length: bool = True) -> WarpSpec:
    """Build a WarpSpec: pads are round(pad_fraction * f_samp) per side.

    In preserving mode (the default) the targets must sum to the current
    warpable length so the output trial keeps the input length.
    """
    if not (math.isfinite(pad_fraction) and pad_fraction >= 0):
        raise BadTargetError(f"pad_fraction must be >= 0 and finite, got {pad_fraction}")
    if not (math.isfinite(f_samp) and f_samp > 0):
        raise BadRateError(f"f_samp must be positive and finite, got {f_samp}")
    if preserve_length and t1_target + t2_target != p.len_t1 + p.len_t2:
        raise BadTargetError(
            f"targets {t1_target}+{t2_target} must preserve the warpable length "
            f"{p.len_t1}+{p.len_t2}={p.len_t1 + p.len_t2}"
        )
    pads = round(pad_fraction * f_samp)
    return WarpSpec(t1_target, t2_target, pad_left=pads, pad_right=pads,
                    preserve_length=preserve_length)


def warp_trial(trial: Trial, p: Partition, spec: WarpSpec,
               cfg: SincConfig = SincConfig(), pad_mode: str = "neighbor") -> WarpReport:
    """Warp the middle two intervals of a trial to the spec's target lengths.

    The pre and post ranges are copied verbatim; t1 and t2 are padded with
    neighbouring signal, resampled, truncated, and concatenated back in.
    Event markers are remapped onto the new grid (distinct markers that land
    on the same output sample after a contraction raise BadEventsError).

    Each interval's report carries the rescale ratio, the Pearson correlation
    of the warped interval against the original interval index-remapped by
    nearest-sample lookup to the target length (NaN if an interval is
    constant), the DTW alignment of original versus warped, and the signal
    energies before and after.
    """
    if p.n_samples != len(trial):
        raise InconsistentTrialsError(
            f"partition covers {p.n_samples} samples but trial has {len(trial)}"
        )
    if spec.preserve_length and spec.t1_target_len + spec.t2_target_len != p.len_t1 + p.len_t2:
        raise BadTargetError(
            "targets do not preserve the warpable length; build the spec with "
            "preserve_length=False for a non-preserving warp"
        )
    x = trial.samples
    warped_t1 = resample_padded(x, p.t1, spec.t1_target_len, spec.pad_left,
                                spec.pad_right, cfg, pad_mode)
    warped_t2 = resample_padded(x, p.t2, spec.t2_target_len, spec.pad_left,
                                spec.pad_right, cfg, pad_mode)
    out = np.concatenate([x[:p.onset], warped_t1, warped_t2, x[p.offset:]])
    events = tuple(_remap_event(e, p, spec) for e in trial.events)
    warped = Trial(out, trial.f_samp, events)
    return WarpReport(
        warped=warped,
        t1=_interval_report(x[p.onset:p.transition], warped_t1),
        t2=_interval_report(x[p.transition:p.offset], warped_t2),
    )


def _interval_report(original: np.ndarray, warped: np.ndarray) -> IntervalReport:
    ratio = len(original) / len(warped)
    reference = _nearest_remap(original, len(warped))
    try:
        corr = pearson(warped, reference)
    except ZeroVarianceError:
        corr = math.nan
    return IntervalReport(
        ratio=ratio,
        correlation=corr,
        dtw=dtw(original, warped),
        energy_in=energy(original),
        energy_out=energy(warped),
    )


def _nearest_remap(seg: np.ndarray, out_len: int) -> np.ndarray:
    """Index-remap seg to out_len samples by nearest-sample lookup."""
    if out_len == 1:
        return seg[:1].copy()
    pos = np.arange(out_len) * ((len(seg) - 1) / (out_len - 1))
    return seg[np.rint(pos).astype(np.int64)]


def _scale_offset(offset: int, old_len: int, new_len: int) -> int:
    if old_len == 1:
        return 0
    pos = offset * ((new_len - 1) / (old_len - 1))
    return min(new_len - 1, int(round(pos)))


def _remap_event(e: EventMarker, p: Partition, spec: WarpSpec) -> EventMarker:
    idx = e.index
    if idx < p.onset:
        new = idx
    elif idx < p.transition:
        new = p.onset + _scale_offset(idx - p.onset, p.len_t1, spec.t1_target_len)
    elif idx < p.offset:
        new = (p.onset + spec.t1_target_len
               + _scale_offset(idx - p.transition, p.len_t2, spec.t2_target_len))
    else:
        new = idx + (spec.t1_target_len + spec.t2_target_len) - (p.len_t1 + p.len_t2)
    return EventMarker(new, e.label)


@dataclass(frozen=True)
class MeanLengths:
    """Warp every trial to the rounded mean interval lengths of the batch."""


@dataclass(frozen=True)
class FixedTargets:
    """Warp every trial to the given interval lengths."""

    t1: int
    t2: int


TargetPolicy = MeanLengths | FixedTargets


def align_batch(items, policy: TargetPolicy, pad_fraction: float,
                cfg: SincConfig = SincConfig(), preserve_length: bool = True,
                pad_mode: str = "neighbor") -> list[WarpReport]:
    """Warp a batch of (trial, partition) pairs to shared interval lengths.

    All trials must share the onset index and, in preserving mode, the total
    warpable length; afterwards the onset, transition, and offset indices are
    identical across every output trial. The target-length reduction runs
    before any warp; the per-trial warps are independent pure calls.
    """
    items = list(items)
    if not items:
        raise EmptyBatchError("no trials to align")
    for trial, p in items:
        if p.n_samples != len(trial):
            raise InconsistentTrialsError(
                f"partition covers {p.n_samples} samples but trial has {len(trial)}"
            )
    onsets = sorted({p.onset for _, p in items})
    if len(onsets) != 1:
        raise InconsistentTrialsError(f"onset indices differ across trials: {onsets}")
    totals = sorted({p.len_t1 + p.len_t2 for _, p in items})
    if preserve_length and len(totals) != 1:
        raise InconsistentTrialsError(
            f"warpable lengths differ across trials: {totals}; "
            "disable preserve_length to align them anyway"
        )

    if isinstance(policy, FixedTargets):
        t1_target, t2_target = policy.t1, policy.t2
        if preserve_length and totals[0] != t1_target + t2_target:
            raise InconsistentTrialsError(
                f"fixed targets {t1_target}+{t2_target} do not preserve the "
                f"shared warpable length {totals[0]}"
            )
    elif isinstance(policy, MeanLengths):
        # round half to even, then let t2 absorb the remainder in preserving mode
        t1_target = round(sum(p.len_t1 for _, p in items) / len(items))
        if preserve_length:
            t2_target = totals[0] - t1_target
        else:
            t2_target = round(sum(p.len_t2 for _, p in items) / len(items))
    else:
        raise TypeError(f"unknown target policy: {policy!r}")

    reports = []
    for trial, p in items:
        spec = plan_warp(p, t1_target, t2_target, pad_fraction, trial.f_samp,
                         preserve_length=preserve_length)
        reports.append(warp_trial(trial, p, spec, cfg, pad_mode))
    return reports
