"""
Base models shared by every card-arena entity.
"""

from pydantic import BaseModel, ConfigDict


class ArenaModel(BaseModel):
    """Base model for mutable records (stats, reports)."""

    model_config = ConfigDict(
        # Enable validation on assignment
        validate_assignment=True,
        # Allow population by field name or alias
        populate_by_name=True,
        str_strip_whitespace=True,
        # Unknown keys are errors, never silently dropped
        extra="forbid",
    )


class FrozenArenaModel(ArenaModel):
    """Base model for immutable values shared across match workers."""

    model_config = ConfigDict(frozen=True)
