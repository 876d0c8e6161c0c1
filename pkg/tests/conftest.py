import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

GOLDEN = Path(__file__).with_name("golden")

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def oracle():
    """Values computed offline with mpmath at 50 digits (see make_oracles.py)."""
    return json.loads((GOLDEN / "oracle_values.json").read_text())
