"""
Competition track configuration and tournament report models.
"""

from enum import StrEnum
from typing import Optional

from pydantic import Field, model_validator

from .agents import IllegalActionPolicy
from .base import ArenaModel, FrozenArenaModel
from .cards import DeckSpec
from .match import MatchConfig
from .stats import GameStats, RankingTable

PREMADE_DECK_COUNT = 6
PREMADE_KNOWN_COUNT = 3


class TrackKind(StrEnum):
    PREMADE_DECK = "premade"
    USER_CREATED_DECK = "user"


class PremadeDeck(FrozenArenaModel):
    """A premade deck; ``known`` decks are published before submission."""

    deck: DeckSpec
    known: bool = False


class TrackConfig(FrozenArenaModel):
    kind: TrackKind
    premade_decks: tuple[PremadeDeck, ...] = ()
    user_decks: dict[str, DeckSpec] = Field(
        default_factory=dict, description="Deck per agent name (user-created track)"
    )
    repeats: int = Field(default=1, gt=0)
    match: MatchConfig = Field(default_factory=MatchConfig)
    base_seed: int = 0
    illegal_action_policy: IllegalActionPolicy = IllegalActionPolicy.FORFEIT

    @model_validator(mode="after")
    def check_premade(self) -> "TrackConfig":
        if self.kind is TrackKind.PREMADE_DECK:
            if len(self.premade_decks) != PREMADE_DECK_COUNT:
                raise ValueError(f"the premade track needs exactly {PREMADE_DECK_COUNT} decks")
            known = sum(1 for d in self.premade_decks if d.known)
            if known != PREMADE_KNOWN_COUNT:
                raise ValueError(
                    f"exactly {PREMADE_KNOWN_COUNT} premade decks must be flagged known"
                )
        return self


class GameRow(FrozenArenaModel):
    """One line of the per-game CSV report. Timing columns come last."""

    game_index: int
    pairing_index: int
    deck_pair_index: int
    repeat_index: int
    first_agent: str
    second_agent: str
    first_deck: str
    second_deck: str
    seed: int
    outcome: str
    winner: str
    reason: str
    turns: int
    first_response_ms: float
    second_response_ms: float


TIMING_COLUMNS = ("first_response_ms", "second_response_ms")


class TournamentReport(ArenaModel):
    kind: TrackKind
    ranking: RankingTable
    stats: GameStats
    games: list[GameRow] = Field(default_factory=list)
    excluded: dict[str, str] = Field(
        default_factory=dict, description="Disqualified agent -> reason"
    )


class SubTournamentPlan(FrozenArenaModel):
    """Balanced groups plus how many of each group advance to the final."""

    groups: tuple[tuple[str, ...], ...]
    finalists_per_group: int
    needs_final: bool
    shuffle_seed: Optional[int] = None
