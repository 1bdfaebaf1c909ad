"""
Match-level models: seats, rules configuration and game results.
"""

from enum import IntEnum, StrEnum
from typing import Optional

from pydantic import Field, model_validator

from .base import FrozenArenaModel


class Seat(IntEnum):
    """Turn order position; FIRST moves on turn 1."""

    FIRST = 0
    SECOND = 1

    @property
    def other(self) -> "Seat":
        return Seat(1 - self)


class MatchConfig(FrozenArenaModel):
    """Rules of one match."""

    turn_limit: int = Field(default=50, gt=0, description="Turns before a draw")
    time_budget_ms: int = Field(
        default=60000, gt=0, description="Computation budget per agent turn"
    )
    hand_limit: int = Field(default=10, gt=0, description="Maximum hand size")
    board_limit: int = Field(default=7, gt=0, description="Maximum minions per side")
    starting_hand_sizes: tuple[int, int] = Field(
        default=(3, 4), description="Opening hand for the first and second seat"
    )

    @model_validator(mode="after")
    def check_hands(self) -> "MatchConfig":
        if any(size < 0 or size > self.hand_limit for size in self.starting_hand_sizes):
            raise ValueError("starting hands must fit within the hand limit")
        return self


class Outcome(StrEnum):
    WIN = "Win"
    DRAW = "Draw"


class ResultReason(StrEnum):
    HERO_DEAD = "HeroDead"
    TURN_LIMIT = "TurnLimit"
    FORFEIT = "Forfeit"


class SeatResult(StrEnum):
    """A result seen from one seat."""

    WIN = "win"
    DRAW = "draw"
    LOSS = "loss"


class GameResult(FrozenArenaModel):
    """How a game ended."""

    outcome: Outcome
    winner: Optional[Seat] = None
    reason: ResultReason
    final_turn: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_consistency(self) -> "GameResult":
        if self.reason is ResultReason.TURN_LIMIT and self.outcome is not Outcome.DRAW:
            raise ValueError("a turn-limit result is always a draw")
        if (self.outcome is Outcome.WIN) != (self.winner is not None):
            raise ValueError("exactly the Win outcome names a winner")
        return self

    @classmethod
    def win(cls, winner: Seat, reason: ResultReason, final_turn: int) -> "GameResult":
        return cls(outcome=Outcome.WIN, winner=winner, reason=reason, final_turn=final_turn)

    @classmethod
    def draw(cls, reason: ResultReason, final_turn: int) -> "GameResult":
        return cls(outcome=Outcome.DRAW, reason=reason, final_turn=final_turn)

    def for_seat(self, seat: Seat) -> SeatResult:
        if self.outcome is Outcome.DRAW:
            return SeatResult.DRAW
        return SeatResult.WIN if self.winner == seat else SeatResult.LOSS

    def __str__(self) -> str:
        if self.outcome is Outcome.DRAW:
            return f"Draw/{self.reason} on turn {self.final_turn}"
        return f"Win({self.winner.name})/{self.reason} on turn {self.final_turn}"
