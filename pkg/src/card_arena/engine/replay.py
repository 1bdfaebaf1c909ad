"""
Replay files: a game header plus its applied actions, re-executable to
reproduce the event log byte for byte.
"""

import json
import logging
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from ..errors import ReplayMismatch, SchemaError
from ..models.actions import Action
from ..models.agents import GameRecord
from ..models.base import FrozenArenaModel
from ..models.cards import CardSet, DeckSpec
from ..models.match import MatchConfig, Seat
from .events import serialize_events
from .rules import apply_action, concede, new_game
from .state import GameState

logger = logging.getLogger(__name__)


class ReplayFile(FrozenArenaModel):
    seed: int
    config: MatchConfig
    deck_a: DeckSpec
    deck_b: DeckSpec
    card_set_version: str
    actions: tuple[Action, ...] = ()
    forfeit: Optional[Seat] = None
    events: tuple[str, ...] = ()

    @classmethod
    def from_record(
        cls,
        record: GameRecord,
        deck_a: DeckSpec,
        deck_b: DeckSpec,
        card_set: CardSet,
        config: MatchConfig,
    ) -> "ReplayFile":
        return cls(
            seed=record.seed,
            config=config,
            deck_a=deck_a,
            deck_b=deck_b,
            card_set_version=card_set.version,
            actions=tuple(applied.action for applied in record.actions),
            forfeit=record.forfeit,
            events=tuple(record.event_log),
        )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


def read_replay(path: Path) -> ReplayFile:
    try:
        return ReplayFile.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, ValidationError) as exc:
        raise SchemaError(f"{path}: not a replay file: {exc}") from exc


def write_replay(replay: ReplayFile, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(replay.to_json(), encoding="utf-8")


def run_replay(replay: ReplayFile, card_set: CardSet) -> GameState:
    """Re-execute the recorded actions; raises IllegalAction on a bad log."""
    if card_set.version != replay.card_set_version:
        logger.warning(
            "Replay recorded with card set %r, replaying with %r",
            replay.card_set_version,
            card_set.version,
        )
    state = new_game(replay.deck_a, replay.deck_b, card_set, replay.config, replay.seed)
    for action in replay.actions:
        state = apply_action(state, action)
    if replay.forfeit is not None:
        state = concede(state, replay.forfeit)
    return state


def verify_replay(replay: ReplayFile, card_set: CardSet) -> GameState:
    """Re-execute and compare event logs, raising ReplayMismatch at the first difference."""
    state = run_replay(replay, card_set)
    produced = serialize_events(state.events)
    for ordinal, (expected, actual) in enumerate(zip(replay.events, produced)):
        if expected != actual:
            raise ReplayMismatch(f"event {ordinal} differs: {actual}", ordinal)
    if len(produced) != len(replay.events):
        ordinal = min(len(produced), len(replay.events))
        raise ReplayMismatch(
            f"replay produced {len(produced)} events, file has {len(replay.events)}", ordinal
        )
    return state
