import numpy as np
import pytest

from timelock import EventMarker, Partition, Trial, partition_from_events, validate_trial
from timelock.errors import (
    BadEventsError,
    BadRateError,
    DegenerateIntervalError,
    DuplicateEventError,
    EmptySignalError,
    MissingEventError,
    NonFiniteError,
)
from timelock.model import event_index_from_seconds


def _trial(n=100, events=((20, "onset"), (50, "transition"), (80, "offset")), f_samp=2048.0):
    rng = np.random.default_rng(42)
    return Trial(rng.normal(size=n), f_samp, tuple(EventMarker(i, lbl) for i, lbl in events))


class TestTrialValidation:
    def test_valid_trial_passes(self):
        t = Trial([0.0, 1.0, 0.0], 2048.0, (EventMarker(1, "onset"),))
        assert validate_trial(t) is t

    def test_empty_signal(self):
        with pytest.raises(EmptySignalError):
            Trial([], 2048.0)

    @pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
    def test_non_finite_samples(self, bad):
        with pytest.raises(NonFiniteError):
            Trial([0.0, bad, 1.0], 2048.0)

    @pytest.mark.parametrize("rate", [0.0, -1.0, np.nan, np.inf])
    def test_bad_rate(self, rate):
        with pytest.raises(BadRateError):
            Trial([0.0, 1.0], rate)

    def test_unordered_events(self):
        with pytest.raises(BadEventsError):
            Trial(np.zeros(10), 1.0, (EventMarker(5, "a"), EventMarker(2, "b")))

    def test_event_out_of_range(self):
        with pytest.raises(BadEventsError):
            Trial(np.zeros(10), 1.0, (EventMarker(10, "a"),))

    def test_negative_event_index(self):
        with pytest.raises(BadEventsError):
            EventMarker(-1, "a")

    def test_duplicate_index_rejected(self):
        with pytest.raises(BadEventsError):
            Trial(np.zeros(10), 1.0, (EventMarker(3, "a"), EventMarker(3, "b")))

    def test_samples_are_copied_and_frozen(self):
        src = np.ones(8)
        t = Trial(src, 1.0)
        src[0] = 99.0
        assert t.samples[0] == 1.0
        with pytest.raises(ValueError):
            t.samples[0] = 5.0

    def test_two_dimensional_samples_rejected(self):
        with pytest.raises(ValueError):
            Trial(np.zeros((4, 2)), 1.0)

    def test_nyquist_accessor_exact(self):
        t = Trial([0.0, 1.0], 2048.0)
        assert t.f_nyq == 1024.0


class TestPartition:
    def test_from_events(self):
        p = partition_from_events(_trial())
        assert (p.onset, p.transition, p.offset, p.n_samples) == (20, 50, 80, 100)
        assert p.pre == (0, 20)
        assert p.t1 == (20, 50)
        assert p.t2 == (50, 80)
        assert p.post == (80, 100)

    def test_boundary_partition_empty_pre_post(self):
        p = Partition(onset=0, transition=50, offset=100, n_samples=100)
        assert p.pre == (0, 0)
        assert p.post == (100, 100)
        assert p.len_t1 + p.len_t2 == 100

    def test_empty_t1_rejected(self):
        with pytest.raises(DegenerateIntervalError):
            Partition(onset=20, transition=20, offset=80, n_samples=100)

    def test_empty_t2_rejected(self):
        with pytest.raises(DegenerateIntervalError):
            Partition(onset=20, transition=80, offset=80, n_samples=100)

    def test_out_of_order_bounds_rejected(self):
        with pytest.raises(ValueError):
            Partition(onset=50, transition=20, offset=80, n_samples=100)

    def test_reversed_labels_degenerate(self):
        t = _trial(events=((20, "transition"), (50, "onset"), (80, "offset")))
        with pytest.raises(DegenerateIntervalError):
            partition_from_events(t)

    def test_missing_event(self):
        t = _trial(events=((20, "onset"), (50, "transition")))
        with pytest.raises(MissingEventError):
            partition_from_events(t)

    def test_duplicate_event(self):
        t = _trial(events=((20, "onset"), (50, "onset"), (80, "offset")))
        with pytest.raises(DuplicateEventError):
            partition_from_events(t)

    def test_custom_labels(self):
        t = _trial(events=((10, "go"), (40, "mid"), (70, "stop")))
        p = partition_from_events(t, "go", "mid", "stop")
        assert (p.onset, p.transition, p.offset) == (10, 40, 70)

    def test_tiling_and_roundtrip(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(4, 400))
            a, b, c = sorted(rng.choice(np.arange(1, n), size=3, replace=False))
            if a == b or b == c:
                continue
            x = rng.normal(size=n)
            t = Trial(x, 100.0, (EventMarker(int(a), "onset"),
                                 EventMarker(int(b), "transition"),
                                 EventMarker(int(c), "offset")))
            p = partition_from_events(t)
            lengths = [hi - lo for lo, hi in (p.pre, p.t1, p.t2, p.post)]
            assert sum(lengths) == n
            rebuilt = np.concatenate([t.samples[lo:hi] for lo, hi in (p.pre, p.t1, p.t2, p.post)])
            assert np.array_equal(rebuilt, t.samples)


class TestSecondsConversion:
    @pytest.mark.parametrize("seconds,f_samp,expected", [
        (2.5, 1.0, 2),    # exact half -> earlier sample
        (3.5, 1.0, 3),
        (2.4, 1.0, 2),
        (2.6, 1.0, 3),
        (0.1, 2048.0, 205),   # 204.8 rounds up
        (0.0, 2048.0, 0),
    ])
    def test_rounding(self, seconds, f_samp, expected):
        assert event_index_from_seconds(seconds, f_samp) == expected

    def test_bad_rate(self):
        with pytest.raises(BadRateError):
            event_index_from_seconds(1.0, 0.0)
