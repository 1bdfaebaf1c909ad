"""
Configuration for card-arena.

Values come from (highest priority first) explicit keyword arguments, the
environment (prefix ``CARD_ARENA_``), a ``.env`` file and the TOML config
file at the project root. The CLI layers its flags on top.
"""

from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from .errors import ConfigError
from .models.agents import HeuristicWeights, IllegalActionPolicy
from .models.match import MatchConfig

PROJECT_ROOT = Path(__file__).parent.parent.parent


class Settings(BaseSettings):
    """Application settings shared by the CLI, tournaments and agents."""

    app_name: str = Field(default="card-arena", description="Application name")
    app_version: str = Field(default="0.1.0", description="Application version")

    card_set_path: Optional[Path] = Field(
        default=None,
        description="Card-set JSON file; the bundled set is used when unset",
    )

    # Match rules
    turn_limit: int = Field(default=50, gt=0, description="Turns before a draw")
    time_budget_ms: int = Field(
        default=60000, gt=0, description="Per-turn computation budget per agent"
    )
    hand_limit: int = Field(default=10, gt=0, description="Maximum hand size")
    board_limit: int = Field(default=7, gt=0, description="Maximum minions per side")

    illegal_action_policy: IllegalActionPolicy = Field(
        default=IllegalActionPolicy.FORFEIT,
        description="What happens when an agent returns an action not in its options",
    )

    # Harness
    parallelism: int = Field(default=1, ge=1, description="Tournament worker count")
    log_level: str = Field(default="INFO", description="Root log level")
    log_file: Optional[str] = Field(
        default=None, description="Log file name inside logs_dir (console only if unset)"
    )
    reports_path: Optional[Path] = Field(
        default=None, description="Tournament report directory (project reports/ if unset)"
    )

    # Baseline agents
    heuristic_weights: HeuristicWeights = Field(
        default_factory=HeuristicWeights, description="Greedy / leaf evaluation weights"
    )
    flat_mc_rollouts: int = Field(default=16, ge=1, description="Rollouts per option")
    rollout_depth: int = Field(default=30, ge=1, description="Rollout action cap")
    agent_seed: int = Field(
        default=0, description="Seed for the random, greedy and flat MC agents"
    )

    model_config = SettingsConfigDict(
        env_prefix="CARD_ARENA_",
        env_nested_delimiter="__",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        toml_file=PROJECT_ROOT / "config.toml",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            TomlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )

    @property
    def project_root(self) -> Path:
        """Get the project root directory."""
        return PROJECT_ROOT

    @property
    def logs_dir(self) -> Path:
        """Get the logs directory."""
        return self.project_root / "logs"

    @property
    def reports_dir(self) -> Path:
        """Get the directory tournament reports go to by default."""
        return self.reports_path or self.project_root / "reports"

    def ensure_directories(self) -> None:
        """Ensure output directories exist."""
        for directory in (self.logs_dir, self.reports_dir):
            directory.mkdir(parents=True, exist_ok=True)

    def match_config(self) -> MatchConfig:
        """Build the match rules described by these settings."""
        return MatchConfig(
            turn_limit=self.turn_limit,
            time_budget_ms=self.time_budget_ms,
            hand_limit=self.hand_limit,
            board_limit=self.board_limit,
        )


def load_settings(config_file: Optional[Path] = None, **overrides) -> Settings:
    """Load settings, optionally from a TOML file other than the project default."""
    if config_file is None:
        return Settings(**overrides)
    if not config_file.is_file():
        raise ConfigError(f"config file {str(config_file)!r} not found")

    class FileSettings(Settings):
        model_config = SettingsConfigDict(toml_file=config_file)

    return FileSettings(**overrides)

