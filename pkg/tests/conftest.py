import pytest

from rkdist import catalog


@pytest.fixture(scope="session")
def base():
    """The twelve base catalog profiles, keyed by name."""
    return {name: catalog.get(name) for name in catalog.BASE_NAMES}
