import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rmplan.scenario import PRESETS  # noqa: E402
from rmplan.surface import Flat, GaussianPeak, PeakSum, Plane  # noqa: E402

PAPER_FIELDS = {name: PRESETS[name]["field"] for name in ("one-peak", "three-peaks", "four-peaks")}


def all_fields():
    """Flat, planar and every preset surface, keyed by a readable id."""
    fields = {"flat0": Flat(0.0), "flat3": Flat(3.0), "plane21": Plane(2.0, 1.0), "plane-13": Plane(-1.0, 3.0)}
    fields.update(PAPER_FIELDS)
    return fields


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def one_peak():
    return PAPER_FIELDS["one-peak"]


@pytest.fixture(scope="session")
def two_peaks():
    return PeakSum((GaussianPeak(3.0, (1.0, 2.0), 0.7), GaussianPeak(-2.0, (4.0, 4.0), 1.5)))


# one line per acceptance check, printed at the end of the session
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
