"""
Application Settings Management
Centralized configuration using environment variables
"""

import os
import logging
from pathlib import Path
from typing import Optional
from functools import lru_cache

from ..core.exceptions import ConfigurationError

# Setup logging
logging.basicConfig(level=os.getenv('ELLIPSUM_LOG_LEVEL', 'WARNING').upper())
logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('json', 'csv', 'text')


class Settings:
    """Engine configuration settings"""

    def __init__(self):
        """Initialize settings from environment variables"""
        # Load .env file if exists
        self._load_env_file()

        # Truncation and output
        self.order: Optional[int] = self._int_or_none('ELLIPSUM_ORDER')
        self.jobs: int = int(os.getenv('ELLIPSUM_JOBS', '1'))
        self.output_format: str = os.getenv('ELLIPSUM_FORMAT', 'json').lower()

        # Exact linear algebra
        self.max_dimension: int = int(os.getenv('ELLIPSUM_MAX_DIMENSION', '10'))

        # Seed for random exact test data
        self.seed: int = int(os.getenv('ELLIPSUM_SEED', '20240'))

        # Environment
        self.environment: str = os.getenv('ELLIPSUM_ENVIRONMENT', 'development')
        self.log_level: str = os.getenv('ELLIPSUM_LOG_LEVEL', 'WARNING').upper()

        # Validate configuration
        self._validate_config()

    def _load_env_file(self):
        """Load .env file if exists"""
        env_file = Path('.env')
        if env_file.exists():
            try:
                from dotenv import load_dotenv
                load_dotenv()
                logger.info("Loaded .env file")
            except ImportError:
                logger.warning("python-dotenv not installed, skipping .env file")

    @staticmethod
    def _int_or_none(name: str) -> Optional[int]:
        raw = os.getenv(name)
        if raw is None or raw.strip() == '':
            return None
        try:
            return int(raw)
        except ValueError:
            raise ConfigurationError(f"{name} must be an integer, got {raw!r}")

    def _validate_config(self):
        """Validate configuration"""
        errors = []

        if self.order is not None and self.order < 1:
            errors.append("ELLIPSUM_ORDER must be at least 1")

        if self.jobs < 1:
            errors.append("ELLIPSUM_JOBS must be at least 1")

        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"ELLIPSUM_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")

        if not 2 <= self.max_dimension <= 12:
            errors.append("ELLIPSUM_MAX_DIMENSION must lie between 2 and 12")

        if errors:
            for error in errors:
                logger.error(f"Configuration Error: {error}")
            raise ConfigurationError("Configuration validation failed")

    @property
    def is_production(self) -> bool:
        """Check if running in production"""
        return self.environment == 'production'

    @property
    def is_development(self) -> bool:
        """Check if running in development"""
        return self.environment == 'development'

    def to_dict(self) -> dict:
        """Convert settings to dictionary"""
        return {
            'environment': self.environment,
            'order': self.order,
            'jobs': self.jobs,
            'output_format': self.output_format,
            'max_dimension': self.max_dimension,
            'seed': self.seed,
            'log_level': self.log_level,
        }

    def __repr__(self) -> str:
        """String representation of settings"""
        return f"<Settings: {self.environment} - order: {self.order}, jobs: {self.jobs}>"


# Create singleton instance
@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Export settings instance
settings = get_settings()
