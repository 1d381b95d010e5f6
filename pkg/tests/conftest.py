import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def planar_catalog():
    from orlnorm import catalog_planar_norms
    return catalog_planar_norms()


@pytest.fixture(scope="session")
def orlicz_catalog():
    from orlnorm import catalog_orlicz_functions
    return catalog_orlicz_functions()
