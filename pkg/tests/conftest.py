import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from app import create_app
from app.config import TestingConfig

# Las operaciones con numpy sobre grafos de cientos de vértices superan el deadline por defecto.
settings.register_profile('vce', deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('vce')


@pytest.fixture
def app():
    return create_app(TestingConfig)


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    return CliRunner()
