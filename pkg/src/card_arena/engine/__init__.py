"""
The full-information game engine.
"""

from .events import EventKind, GameEvent, events_to_jsonl, serialize_events
from .replay import ReplayFile, read_replay, run_replay, verify_replay, write_replay
from .rng import GameRng
from .rules import (
    advance,
    apply_action,
    begin_turn,
    check_invariants,
    concede,
    draw_card,
    event_log,
    game_result,
    legal_actions,
    new_game,
    resolve_attack,
)
from .state import (
    HERO_MAX_HEALTH,
    CardInstance,
    GameState,
    MinionInstance,
    PlayerState,
    SecretInstance,
    WeaponState,
)

__all__ = [
    "new_game",
    "begin_turn",
    "draw_card",
    "legal_actions",
    "apply_action",
    "advance",
    "resolve_attack",
    "game_result",
    "event_log",
    "concede",
    "check_invariants",
    "GameState",
    "PlayerState",
    "MinionInstance",
    "CardInstance",
    "SecretInstance",
    "WeaponState",
    "HERO_MAX_HEALTH",
    "GameRng",
    "GameEvent",
    "EventKind",
    "serialize_events",
    "events_to_jsonl",
    "ReplayFile",
    "read_replay",
    "write_replay",
    "run_replay",
    "verify_replay",
]
