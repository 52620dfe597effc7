import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ginlab.experiments import experiment_curve, experiment_nonsmooth

#: Seeds fixed for the whole suite; every randomized check is reproducible.
SUITE_SEED = 20240 + 517


@pytest.fixture(scope="session")
def curve_reports():
    """The three acceptance curve runs, shared across criteria (the (3,3)
    run is the expensive one)."""
    return {
        (a, b): experiment_curve(a, b, seed=SUITE_SEED, degree_cap=25)
        for (a, b) in [(2, 2), (2, 3), (3, 3)]
    }


@pytest.fixture(scope="session")
def nonsmooth_report():
    return experiment_nonsmooth(seed=SUITE_SEED, degree_cap=25)
