"""Application configuration using Pydantic Settings."""

import logging
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Tunables shared by the library, the CLI and the tasks.

    NOTE: the only source is explicit initialisation. Environment variables and
    .env files are ignored so a run is fully described by its command line; the
    CLI passes flag overrides as keyword arguments.
    """

    model_config = SettingsConfigDict(case_sensitive=False, extra="ignore", frozen=True)

    # Brute-force oracle
    oracle_max_points: int = Field(100, ge=4)
    oracle_warn_points: int = Field(40, ge=4)
    # Heuristic exit cross-check runs the oracle only up to this size.
    oracle_check_max_points: int = Field(40, ge=4)

    # Search schedule: T = stale_factor * n^2 unless given explicitly.
    stale_factor: int = Field(20, ge=1)
    max_doublings: int = Field(16, ge=0)

    # Output
    bound_digits: int = Field(6, ge=0, le=1000)
    svg_viewport: int = Field(1000, ge=10)
    svg_margin: int = Field(20, ge=0)

    log_level: str = "INFO"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
