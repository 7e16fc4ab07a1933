import pytest

from src.config.settings import Settings, get_settings
from src.core.exceptions import ConfigurationError


def test_defaults(clean_env):
    current = Settings()
    assert current.order is None
    assert current.jobs == 1
    assert current.output_format == 'json'
    assert current.is_development
    assert set(current.to_dict()) == {'environment', 'order', 'jobs', 'output_format',
                                      'max_dimension', 'seed', 'log_level'}


def test_environment_values(clean_env):
    clean_env.setenv('ELLIPSUM_ORDER', '25')
    clean_env.setenv('ELLIPSUM_JOBS', '3')
    clean_env.setenv('ELLIPSUM_FORMAT', 'CSV')
    clean_env.setenv('ELLIPSUM_ENVIRONMENT', 'production')
    current = Settings()
    assert (current.order, current.jobs, current.output_format) == (25, 3, 'csv')
    assert current.is_production


def test_blank_order_means_unset(clean_env):
    clean_env.setenv('ELLIPSUM_ORDER', ' ')
    assert Settings().order is None


@pytest.mark.parametrize('name, value', [
    ('ELLIPSUM_ORDER', 'many'),
    ('ELLIPSUM_ORDER', '0'),
    ('ELLIPSUM_JOBS', '0'),
    ('ELLIPSUM_FORMAT', 'xml'),
    ('ELLIPSUM_MAX_DIMENSION', '20'),
])
def test_rejected_values(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ConfigurationError):
        Settings()


def test_cached(clean_env):
    assert get_settings() is get_settings()
