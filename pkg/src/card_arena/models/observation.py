"""
Partial-observation models: what one seat is allowed to see.
"""

from typing import Literal, Optional

from pydantic import Field, field_validator

from .actions import Action
from .base import FrozenArenaModel
from .cards import DUMMY_CARD_ID, HeroClass, SecretCondition
from .match import GameResult, MatchConfig, Seat


class DummyCard(FrozenArenaModel):
    """Placeholder standing in for a card whose identity is hidden."""

    card_id: Literal["dummy"] = DUMMY_CARD_ID


DUMMY = DummyCard()


class CardView(FrozenArenaModel):
    instance_id: int
    card_id: str


class SecretView(FrozenArenaModel):
    instance_id: int
    card_id: str
    condition: SecretCondition


class WeaponView(FrozenArenaModel):
    card_id: str
    attack: int
    durability: int


class MinionView(FrozenArenaModel):
    """Full minion data; ``attack``/``health`` include active auras."""

    instance_id: int
    card_id: str
    base_attack: int
    base_health: int
    attack_bonus: int
    max_health: int
    damage: int
    exhausted: bool
    attacks_this_turn: int
    taunt: bool
    token: bool
    attack: int
    health: int


class OwnView(FrozenArenaModel):
    """The observer's own side. The deck is only given as a count here."""

    hero_class: HeroClass
    hero_health: int
    hero_power_used: bool
    hero_attacked: bool
    mana_current: int
    mana_max: int
    fatigue_counter: int
    weapon: Optional[WeaponView] = None
    hand: tuple[CardView, ...] = ()
    board: tuple[MinionView, ...] = ()
    graveyard: tuple[CardView, ...] = ()
    secrets: tuple[SecretView, ...] = ()
    deck_count: int


class OpponentView(FrozenArenaModel):
    """The opponent's public information; hidden zones appear as counts."""

    hero_class: HeroClass
    hero_health: int
    hero_power_used: bool
    hero_attacked: bool
    mana_current: int
    mana_max: int
    fatigue_counter: int
    weapon: Optional[WeaponView] = None
    board: tuple[MinionView, ...] = ()
    graveyard: tuple[CardView, ...] = ()
    secret_count: int = Field(..., ge=0)
    hand_count: int = Field(..., ge=0)
    deck_count: int = Field(..., ge=0)

    @property
    def hand(self) -> tuple[DummyCard, ...]:
        return (DUMMY,) * self.hand_count

    @property
    def deck(self) -> tuple[DummyCard, ...]:
        return (DUMMY,) * self.deck_count


class Observation(FrozenArenaModel):
    """A masked, per-seat snapshot of a game."""

    viewer: Seat
    active_seat: Seat
    turn_number: int
    config: MatchConfig
    own: OwnView
    opponent_visible: OpponentView
    own_deck_remaining: dict[str, int] = Field(
        default_factory=dict, description="Multiset of the viewer's deck; order hidden"
    )
    options: tuple[Action, ...] = ()
    result: Optional[GameResult] = None

    @field_validator("own_deck_remaining")
    @classmethod
    def canonical_order(cls, v: dict[str, int]) -> dict[str, int]:
        """Store the multiset sorted by card id so equal multisets serialize equally."""
        return {card_id: v[card_id] for card_id in sorted(v) if v[card_id] > 0}

    @property
    def is_my_turn(self) -> bool:
        return self.result is None and self.viewer == self.active_seat

    def to_canonical_json(self) -> str:
        return self.model_dump_json()
