"""
The move alphabet.

Actions are small frozen dataclasses so legal-move enumeration stays cheap;
``ACTION_ADAPTER`` gives them the same JSON shape as the pydantic models.
"""

from dataclasses import dataclass
from enum import StrEnum
from typing import Any, Optional

from pydantic import TypeAdapter

from .match import Seat


class ActionKind(StrEnum):
    END_TURN = "EndTurn"
    PLAY_CARD = "PlayCard"
    ATTACK = "Attack"
    HERO_POWER = "HeroPower"
    HERO_ATTACK = "HeroAttack"


@dataclass(frozen=True, slots=True)
class Target:
    """A character: the hero of ``seat`` or, with ``minion_id``, one of its minions."""

    seat: Seat
    minion_id: Optional[int] = None

    @property
    def is_hero(self) -> bool:
        return self.minion_id is None

    def __str__(self) -> str:
        if self.minion_id is None:
            return f"hero[{self.seat.name}]"
        return f"minion#{self.minion_id}"


@dataclass(frozen=True, slots=True)
class Action:
    """
    One move. Which optional fields are set depends on ``kind``:

    - PlayCard: ``hand_index``, ``position`` and, when the card asks for one,
      ``target``
    - Attack: ``attacker`` (minion instance id) and ``target`` (the defender)
    - HeroPower: ``target`` when the power is targeted
    - HeroAttack: ``target`` (the defender)
    """

    kind: ActionKind
    hand_index: Optional[int] = None
    position: Optional[int] = None
    attacker: Optional[int] = None
    target: Optional[Target] = None

    @classmethod
    def end_turn(cls) -> "Action":
        return cls(ActionKind.END_TURN)

    @classmethod
    def play_card(
        cls, hand_index: int, position: Optional[int] = None, target: Optional[Target] = None
    ) -> "Action":
        return cls(ActionKind.PLAY_CARD, hand_index=hand_index, position=position, target=target)

    @classmethod
    def attack(cls, attacker: int, defender: Target) -> "Action":
        return cls(ActionKind.ATTACK, attacker=attacker, target=defender)

    @classmethod
    def hero_power(cls, target: Optional[Target] = None) -> "Action":
        return cls(ActionKind.HERO_POWER, target=target)

    @classmethod
    def hero_attack(cls, defender: Target) -> "Action":
        return cls(ActionKind.HERO_ATTACK, target=defender)

    def to_dict(self) -> dict[str, Any]:
        return ACTION_ADAPTER.dump_python(self, mode="json")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Action":
        return ACTION_ADAPTER.validate_python(data)

    def __str__(self) -> str:
        match self.kind:
            case ActionKind.END_TURN:
                return "EndTurn"
            case ActionKind.PLAY_CARD:
                suffix = f" -> {self.target}" if self.target else ""
                return f"PlayCard({self.hand_index}, pos {self.position}){suffix}"
            case ActionKind.ATTACK:
                return f"Attack(minion#{self.attacker} -> {self.target})"
            case ActionKind.HERO_POWER:
                return f"HeroPower({self.target or ''})"
            case _:
                return f"HeroAttack(-> {self.target})"


ACTION_ADAPTER = TypeAdapter(Action)
ACTION_LIST_ADAPTER = TypeAdapter(list[Action])
