"""
Mutable full-information game state.

The engine works on plain slotted dataclasses rather than pydantic models:
states are cloned and mutated thousands of times per search. Pydantic models
remain the boundary types (observations, records, replay files).
"""

import copy
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from ..models.actions import Target
from ..models.cards import CardSet, HeroClass, SecretCondition, Tribe
from ..models.match import GameResult, MatchConfig, Seat
from .events import EventKind, GameEvent
from .rng import GameRng

HERO_MAX_HEALTH = 30
MANA_CAP = 10


@dataclass(frozen=True, slots=True)
class CardInstance:
    """A physical card outside the board: in a deck, hand or graveyard."""

    instance_id: int
    card_id: str


@dataclass(slots=True)
class MinionInstance:
    instance_id: int
    card_id: str
    base_attack: int
    base_health: int
    max_health: int
    attack_bonus: int = 0
    damage: int = 0
    exhausted: bool = True
    attacks_this_turn: int = 0
    taunt: bool = False
    token: bool = False
    tribe: Optional[Tribe] = None
    destroyed: bool = False

    @property
    def current_health(self) -> int:
        """Health without auras."""
        return self.max_health - self.damage

    def as_card(self) -> CardInstance:
        return CardInstance(self.instance_id, self.card_id)


@dataclass(slots=True)
class WeaponState:
    instance_id: int
    card_id: str
    attack: int
    durability_remaining: int

    def as_card(self) -> CardInstance:
        return CardInstance(self.instance_id, self.card_id)


@dataclass(frozen=True, slots=True)
class SecretInstance:
    instance_id: int
    card_id: str
    condition: SecretCondition

    def as_card(self) -> CardInstance:
        return CardInstance(self.instance_id, self.card_id)


@dataclass(slots=True)
class PlayerState:
    hero_class: HeroClass
    deck_size: int = 0
    hero_health: int = HERO_MAX_HEALTH
    hero_power_used: bool = False
    hero_attacked: bool = False
    weapon: Optional[WeaponState] = None
    mana_current: int = 0
    mana_max: int = 0
    fatigue_counter: int = 0
    deck: list[CardInstance] = field(default_factory=list)
    hand: list[CardInstance] = field(default_factory=list)
    board: list[MinionInstance] = field(default_factory=list)
    graveyard: list[CardInstance] = field(default_factory=list)
    secrets: list[SecretInstance] = field(default_factory=list)

    def clone(self) -> "PlayerState":
        twin = copy.copy(self)
        # Card and secret instances are frozen; only the lists need copying.
        twin.deck = list(self.deck)
        twin.hand = list(self.hand)
        twin.graveyard = list(self.graveyard)
        twin.secrets = list(self.secrets)
        twin.board = [copy.copy(m) for m in self.board]
        twin.weapon = copy.copy(self.weapon)
        return twin

    def minion(self, instance_id: int) -> Optional[MinionInstance]:
        for minion in self.board:
            if minion.instance_id == instance_id:
                return minion
        return None


@dataclass(slots=True)
class GameState:
    card_set: CardSet
    config: MatchConfig
    players: tuple[PlayerState, PlayerState]
    rng: GameRng
    seed: int = 0
    turn_number: int = 0
    active_seat: Seat = Seat.FIRST
    events: list[GameEvent] = field(default_factory=list)
    result: Optional[GameResult] = None
    next_instance_id: int = 1
    record_events: bool = True

    def clone(self) -> "GameState":
        """Deep enough copy for value semantics; the card set is shared."""
        twin = copy.copy(self)
        twin.players = (self.players[0].clone(), self.players[1].clone())
        twin.rng = self.rng.clone()
        twin.events = list(self.events)
        return twin

    @property
    def active(self) -> PlayerState:
        return self.players[self.active_seat]

    @property
    def opponent(self) -> PlayerState:
        return self.players[self.active_seat.other]

    def player(self, seat: Seat) -> PlayerState:
        return self.players[seat]

    def allocate_id(self) -> int:
        instance_id = self.next_instance_id
        self.next_instance_id += 1
        return instance_id

    def minion_at(self, target: Target) -> Optional[MinionInstance]:
        if target.minion_id is None:
            return None
        return self.players[target.seat].minion(target.minion_id)

    def exists(self, target: Target) -> bool:
        """Whether the character is still in play and not marked for destruction."""
        if target.minion_id is None:
            return True
        minion = self.minion_at(target)
        return minion is not None and not minion.destroyed

    def minions(self) -> Iterator[tuple[Seat, MinionInstance]]:
        """All minions, active player first, each side in board order."""
        for seat in (self.active_seat, self.active_seat.other):
            for minion in self.players[seat].board:
                yield seat, minion

    def emit(self, kind: EventKind, **payload: Any) -> None:
        if self.record_events:
            self.events.append(GameEvent(len(self.events), kind, payload))
