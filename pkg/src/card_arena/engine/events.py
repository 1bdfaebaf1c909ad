"""
The append-only game history and its JSON-lines serialization.
"""

import json
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, Iterable, Mapping


class EventKind(StrEnum):
    TURN_STARTED = "TurnStarted"
    CARD_DRAWN = "CardDrawn"
    CARD_BURNED = "CardBurned"
    FATIGUE_DAMAGE = "FatigueDamage"
    CARD_PLAYED = "CardPlayed"
    MINION_SUMMONED = "MinionSummoned"
    WEAPON_EQUIPPED = "WeaponEquipped"
    HERO_POWER_USED = "HeroPowerUsed"
    ATTACK_RESOLVED = "AttackResolved"
    DAMAGE_DEALT = "DamageDealt"
    HEALED = "Healed"
    MINION_BUFFED = "MinionBuffed"
    MANA_GAINED = "ManaGained"
    MINION_DIED = "MinionDied"
    SECRET_REVEALED = "SecretRevealed"
    WEAPON_BROKEN = "WeaponBroken"
    TURN_ENDED = "TurnEnded"
    GAME_ENDED = "GameEnded"


@dataclass(frozen=True, slots=True)
class GameEvent:
    ordinal: int
    kind: EventKind
    payload: Mapping[str, Any]

    def to_json(self) -> str:
        """One JSON line with field order (ordinal, kind, payload)."""
        return json.dumps(
            {"ordinal": self.ordinal, "kind": str(self.kind), "payload": dict(self.payload)},
            separators=(",", ":"),
        )


def serialize_events(events: Iterable[GameEvent]) -> list[str]:
    return [event.to_json() for event in events]


def events_to_jsonl(events: Iterable[GameEvent]) -> str:
    return "".join(line + "\n" for line in serialize_events(events))
