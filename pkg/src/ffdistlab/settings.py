"""Library settings using Pydantic settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict

from ffdistlab.errors import ResourceBudgetExceeded


class Settings(BaseSettings):
    """Runtime limits and tolerances.

    Every field can be overridden with an ``FFDISTLAB_`` prefixed environment
    variable, e.g. ``FFDISTLAB_BUDGET=20000000``.
    """

    model_config = SettingsConfigDict(
        env_prefix="FFDISTLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Limits
    budget: int = 10_000_000
    tuple_budget: int = 1_000_000
    table_limit: int = 1 << 10
    exhaustive_limit: int = 100_000

    # Tolerances
    integer_tolerance: float = 1e-6
    identity_tolerance: float = 1e-9

    # Logging
    log_level: str = "WARNING"


# Global settings instance
settings = Settings()


def ensure_budget(what: str, size: int, budget: int | None = None) -> None:
    """Raise `ResourceBudgetExceeded` when `size` is above the budget."""
    limit = settings.budget if budget is None else budget
    if size > limit:
        raise ResourceBudgetExceeded(what, size, limit)
