"""
card-arena data models.

Pydantic models shared by the card loader, engine, observation layer,
agents and tournaments.
"""

from .actions import Action, ActionKind, Target
from .agents import (
    AgentGameStats,
    AppliedAction,
    GameContext,
    GameRecord,
    HeuristicWeights,
    IllegalActionPolicy,
)
from .base import ArenaModel, FrozenArenaModel
from .cards import (
    DUMMY_CARD_ID,
    Archetype,
    CardDefinition,
    CardKind,
    CardSet,
    DeckSpec,
    EffectAction,
    EffectScript,
    HeroClass,
    SecretCondition,
    TargetKind,
    Tribe,
    Trigger,
)
from .match import GameResult, MatchConfig, Outcome, ResultReason, Seat, SeatResult
from .observation import (
    CardView,
    DummyCard,
    MinionView,
    Observation,
    OpponentView,
    OwnView,
    SecretView,
    WeaponView,
)
from .stats import AgentStats, GameStats, RankingRow, RankingTable
from .track import (
    GameRow,
    PremadeDeck,
    SubTournamentPlan,
    TournamentReport,
    TrackConfig,
    TrackKind,
)

__all__ = [
    # Base models
    "ArenaModel",
    "FrozenArenaModel",
    # Cards
    "CardDefinition",
    "CardSet",
    "DeckSpec",
    "EffectScript",
    "DUMMY_CARD_ID",
    # Match
    "MatchConfig",
    "GameResult",
    "Action",
    "Target",
    # Observation
    "Observation",
    "OwnView",
    "OpponentView",
    "MinionView",
    "CardView",
    "SecretView",
    "WeaponView",
    "DummyCard",
    # Agents
    "GameContext",
    "GameRecord",
    "AgentGameStats",
    "AppliedAction",
    "HeuristicWeights",
    # Tournament
    "AgentStats",
    "GameStats",
    "RankingRow",
    "RankingTable",
    "TrackConfig",
    "PremadeDeck",
    "GameRow",
    "TournamentReport",
    "SubTournamentPlan",
    # Enums
    "HeroClass",
    "CardKind",
    "Tribe",
    "Archetype",
    "Trigger",
    "SecretCondition",
    "EffectAction",
    "TargetKind",
    "Seat",
    "Outcome",
    "ResultReason",
    "SeatResult",
    "ActionKind",
    "IllegalActionPolicy",
    "TrackKind",
]
