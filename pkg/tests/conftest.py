import pathlib

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

REPO = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def covers_dir() -> pathlib.Path:
    return REPO / "covers"
