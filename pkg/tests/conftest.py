import pytest

from src.config.settings import get_settings

ENV_VARS = ('ELLIPSUM_ORDER', 'ELLIPSUM_JOBS', 'ELLIPSUM_FORMAT', 'ELLIPSUM_MAX_DIMENSION',
            'ELLIPSUM_SEED', 'ELLIPSUM_ENVIRONMENT')


@pytest.fixture
def clean_env(monkeypatch):
    """No ELLIPSUM_* variables and a fresh settings cache."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()
