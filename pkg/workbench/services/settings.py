"""
Workbench configuration from environment variables and an optional .env file.

Settings never change what an explicit parameter builds; they bound automatic
choices (tower height, embedding caps), worker counts and log verbosity.
"""
import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class WorkbenchSettings(BaseSettings):
    """Workbench configuration from environment variables."""
    workbench_log_level: str = "INFO"
    workbench_jobs: int = Field(default=1, ge=1)
    workbench_max_tower_levels: int = Field(default=64, ge=0)
    workbench_rigidity_members: int = Field(default=1, ge=0)
    workbench_embedding_limit: int = Field(default=1000, ge=1)

    # Allow a shared repo-level .env with many unrelated keys.
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    @field_validator("workbench_log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> WorkbenchSettings:
    return WorkbenchSettings()
