"""
Models describing agents and the games they play.
"""

import math
from enum import StrEnum
from typing import Optional

from pydantic import Field, model_validator

from .actions import Action
from .base import ArenaModel, FrozenArenaModel
from .cards import CardSet, DeckSpec, HeroClass
from .match import GameResult, MatchConfig, Seat


class IllegalActionPolicy(StrEnum):
    """Consequence of returning an action that is not among the options."""

    FORFEIT = "forfeit"
    END_TURN = "end_turn"


class HeuristicWeights(FrozenArenaModel):
    """Linear weights over board features; defaults are own/opponent symmetric."""

    w_own_health: float = 1.0
    w_opp_health: float = -1.0
    w_own_board_attack: float = 1.0
    w_own_board_health: float = 1.0
    w_opp_board_attack: float = -1.0
    w_opp_board_health: float = -1.0
    w_hand_size: float = 0.5

    @model_validator(mode="after")
    def check_finite(self) -> "HeuristicWeights":
        if not all(math.isfinite(v) for v in self.as_vector()):
            raise ValueError("heuristic weights must be finite")
        return self

    def as_vector(self) -> tuple[float, ...]:
        return (
            self.w_own_health,
            self.w_opp_health,
            self.w_own_board_attack,
            self.w_own_board_health,
            self.w_opp_board_attack,
            self.w_opp_board_health,
            self.w_hand_size,
        )

    def scaled(self, factor: float) -> "HeuristicWeights":
        return HeuristicWeights(
            **{name: value * factor for name, value in self.model_dump().items()}
        )


class GameContext(FrozenArenaModel):
    """Everything an agent learns when a game begins."""

    seat: Seat
    deck: DeckSpec
    opponent_class: HeroClass
    card_set: CardSet
    config: MatchConfig
    seed: int


class AgentGameStats(ArenaModel):
    """Per-agent accounting for a single game."""

    moves_made: int = 0
    total_response_ms: float = 0.0
    max_response_ms: float = 0.0
    timeouts: int = 0
    faults: int = 0
    illegal_actions: int = 0

    @model_validator(mode="after")
    def check_times(self) -> "AgentGameStats":
        if not self.total_response_ms >= self.max_response_ms >= 0:
            raise ValueError("need total_response_ms >= max_response_ms >= 0")
        return self

    def add_response(self, elapsed_ms: float) -> None:
        self.moves_made += 1
        self.total_response_ms += elapsed_ms
        self.max_response_ms = max(self.max_response_ms, elapsed_ms)


class AppliedAction(FrozenArenaModel):
    """One action as applied by the driver; ``forced`` marks driver-issued EndTurns."""

    seat: Seat
    action: Action
    forced: bool = False


class GameRecord(ArenaModel):
    """Outcome and accounting of one played game."""

    result: GameResult
    seed: int
    seats: tuple[str, str] = Field(..., description="Agent names by seat")
    decks: tuple[str, str] = Field(..., description="Deck names by seat")
    agent_stats: tuple[AgentGameStats, AgentGameStats]
    actions: list[AppliedAction] = Field(default_factory=list)
    forfeit: Optional[Seat] = None
    fault_reason: Optional[str] = None
    event_log: list[str] = Field(default_factory=list, description="JSON-lines event log")

    def stats_for(self, agent_name: str) -> AgentGameStats:
        return self.agent_stats[self.seats.index(agent_name)]

    def seat_of(self, agent_name: str) -> Seat:
        return Seat(self.seats.index(agent_name))
