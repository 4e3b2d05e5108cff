import pytest
from hypothesis import settings

from nocones.cartan import build_root_datum

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

RANK2 = ("A2", "B2", "C2", "G2")


@pytest.fixture(scope="session")
def datums():
    return {lab: build_root_datum(lab) for lab in ("A1", "A2", "A3", "B2", "C2", "G2", "B3", "A1xA1")}
