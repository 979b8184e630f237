import numpy as np
import pytest

from timelock import SynthSpec, generate, partition_from_events
from timelock.cli import main as cli_main
from timelock.metrics import dtw


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    # the first DTW call triggers numba compilation; keep it out of timed tests
    dtw(np.array([0.0, 1.0]), np.array([1.0, 0.0]))


@pytest.fixture(scope="session")
def demo_trial():
    """The default demonstration trial: 4 s at 2048 Hz, events at quarter points."""
    return generate(SynthSpec())


@pytest.fixture(scope="session")
def demo_partition(demo_trial):
    return partition_from_events(demo_trial)


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(*argv):
        code = cli_main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
