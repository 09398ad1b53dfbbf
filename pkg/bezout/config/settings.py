from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI configuration settings."""

    # CLI limits
    MAX_SIZE: int = Field(8, ge=1)  # caps matrix rows and cols

    # Exhaustive-check budgets
    STABLE_RANGE_MAX_MODULUS: int = Field(10_000, ge=2)
    PM_WITNESS_MAX_MODULUS: int = Field(1_000, ge=2)
    KAPLANSKY_SEARCH_LIMIT: int = Field(10_000, ge=1)
    PIVOT_LOOP_MAX_STEPS: int = Field(10_000, ge=1)

    # Selftest
    SELFTEST_SEED: int = 0

    # Observability
    ENVIRONMENT: Literal["development", "production"] = "development"
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: Literal["console", "json"] = "console"

    model_config = SettingsConfigDict(
        env_prefix="BEZOUT_REDUCE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False
    )

    @property
    def is_production(self) -> bool:
        """Check if running in production environment."""
        return self.ENVIRONMENT == "production"

    @property
    def json_logs(self) -> bool:
        """Whether log lines should be rendered as JSON."""
        return self.LOG_FORMAT == "json" or self.is_production


settings = Settings()
