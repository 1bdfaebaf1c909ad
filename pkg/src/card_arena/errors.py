"""
Exception hierarchy for card-arena.

Every failure named by a public operation has its own subclass of
``ArenaError`` so callers (and the CLI exit-code mapping) can tell them apart.
"""

from typing import Optional


class ArenaError(Exception):
    """Base class for all card-arena errors."""


class ConfigError(ArenaError):
    """A settings file is missing or unusable."""


# Card data


class ParseError(ArenaError):
    """A card or deck document is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DuplicateId(ArenaError):
    """Two cards in one document share an id."""

    def __init__(self, card_id: str) -> None:
        super().__init__(f"duplicate card id {card_id!r}")
        self.card_id = card_id


class SchemaError(ArenaError):
    """A document parsed but does not match the card/deck schema."""


class UnknownCard(ArenaError):
    """A card id does not resolve in the card set."""

    def __init__(self, card_id: str) -> None:
        super().__init__(f"unknown card id {card_id!r}")
        self.card_id = card_id


class InvalidDeck(ArenaError):
    """A deck failed validation."""

    def __init__(self, deck_name: str, violations: list) -> None:
        details = "; ".join(str(v) for v in violations)
        super().__init__(f"deck {deck_name!r} is invalid: {details}")
        self.deck_name = deck_name
        self.violations = violations


# Engine


class IllegalAction(ArenaError):
    """The action is not among the legal actions of the state."""


class GameAlreadyOver(ArenaError):
    """An operation that needs a running game was given a finished one."""


class InconsistentObservation(ArenaError):
    """No full game state is consistent with the observation."""


class ReplayMismatch(ArenaError):
    """Re-executing a replay produced a different event log."""

    def __init__(self, message: str, ordinal: Optional[int] = None) -> None:
        super().__init__(message)
        self.ordinal = ordinal


# Agents and tournaments


class AgentFault(ArenaError):
    """An agent raised, or broke the protocol, while playing."""

    def __init__(self, agent_name: str, reason: str) -> None:
        super().__init__(f"agent {agent_name!r} faulted: {reason}")
        self.agent_name = agent_name
        self.reason = reason


class InvalidTrackConfig(ArenaError):
    """A competition track is configured inconsistently."""


class TooFewAgents(ArenaError):
    """A round robin needs at least two participants."""


class InvalidGroupSize(ArenaError):
    """Sub-tournament groups must hold at least two agents."""
