"""
Card data model and the effect-scripting vocabulary.

The vocabulary is closed: every trigger, action and target is an enum member,
and ``EffectScript`` rejects combinations the engine does not implement.
"""

from enum import StrEnum
from typing import Optional

from pydantic import Field, model_validator

from ..errors import DuplicateId, UnknownCard
from .base import FrozenArenaModel

DUMMY_CARD_ID = "dummy"


class HeroClass(StrEnum):
    """The nine playable classes plus the class-free marker."""

    DRUID = "Druid"
    HUNTER = "Hunter"
    MAGE = "Mage"
    PALADIN = "Paladin"
    PRIEST = "Priest"
    ROGUE = "Rogue"
    SHAMAN = "Shaman"
    WARLOCK = "Warlock"
    WARRIOR = "Warrior"
    NEUTRAL = "Neutral"

    @property
    def playable(self) -> bool:
        return self is not HeroClass.NEUTRAL


PLAYABLE_CLASSES = tuple(c for c in HeroClass if c.playable)


class CardKind(StrEnum):
    MINION = "Minion"
    SPELL = "Spell"
    SECRET = "Secret"
    WEAPON = "Weapon"


class Tribe(StrEnum):
    MURLOC = "Murloc"
    BEAST = "Beast"
    ELEMENTAL = "Elemental"
    MECH = "Mech"


class Archetype(StrEnum):
    AGGRO = "Aggro"
    MID_RANGE = "MidRange"
    CONTROL = "Control"


class Trigger(StrEnum):
    BATTLECRY = "Battlecry"
    DEATHRATTLE = "Deathrattle"
    ON_CAST = "OnCast"
    AURA = "Aura"
    SECRET_TRIGGER = "SecretTrigger"
    PASSIVE = "Passive"


class SecretCondition(StrEnum):
    ENEMY_MINION_ATTACKS = "EnemyMinionAttacks"
    ENEMY_PLAYS_MINION = "EnemyPlaysMinion"
    ENEMY_SPELL_CAST = "EnemySpellCast"


class EffectAction(StrEnum):
    DAMAGE = "Damage"
    HEAL = "Heal"
    BUFF_ATTACK = "BuffAttack"
    BUFF_HEALTH = "BuffHealth"
    DRAW_CARDS = "DrawCards"
    SUMMON_TOKEN = "SummonToken"
    DESTROY_MINION = "DestroyMinion"
    DESTROY_WEAPON = "DestroyWeapon"
    GAIN_MANA = "GainMana"
    TAUNT = "Taunt"


class TargetKind(StrEnum):
    CHOSEN_TARGET = "ChosenTarget"
    SELF = "Self"
    OWN_HERO = "OwnHero"
    ENEMY_HERO = "EnemyHero"
    ALL_ENEMY_MINIONS = "AllEnemyMinions"
    ALL_FRIENDLY_MINIONS = "AllFriendlyMinions"
    RANDOM_ENEMY_MINION = "RandomEnemyMinion"
    FRIENDLY_MINIONS_OF_TRIBE = "FriendlyMinionsOfTribe"
    TRIGGERING_ENTITY = "TriggeringEntity"


AMOUNT_ACTIONS = frozenset(
    {
        EffectAction.DAMAGE,
        EffectAction.HEAL,
        EffectAction.BUFF_ATTACK,
        EffectAction.BUFF_HEALTH,
        EffectAction.DRAW_CARDS,
        EffectAction.GAIN_MANA,
    }
)

# Actions that hit characters (heroes or minions)
_CHARACTER_TARGETS = frozenset(
    {
        TargetKind.CHOSEN_TARGET,
        TargetKind.SELF,
        TargetKind.OWN_HERO,
        TargetKind.ENEMY_HERO,
        TargetKind.ALL_ENEMY_MINIONS,
        TargetKind.ALL_FRIENDLY_MINIONS,
        TargetKind.RANDOM_ENEMY_MINION,
        TargetKind.FRIENDLY_MINIONS_OF_TRIBE,
        TargetKind.TRIGGERING_ENTITY,
    }
)
_MINION_TARGETS = _CHARACTER_TARGETS - {TargetKind.OWN_HERO, TargetKind.ENEMY_HERO}
_PLAYER_TARGETS = frozenset({TargetKind.OWN_HERO, TargetKind.ENEMY_HERO})

ACTION_TARGETS: dict[EffectAction, frozenset[TargetKind]] = {
    EffectAction.DAMAGE: _CHARACTER_TARGETS,
    EffectAction.HEAL: _CHARACTER_TARGETS,
    EffectAction.BUFF_ATTACK: _MINION_TARGETS,
    EffectAction.BUFF_HEALTH: _MINION_TARGETS,
    EffectAction.DESTROY_MINION: _MINION_TARGETS,
    EffectAction.DRAW_CARDS: _PLAYER_TARGETS,
    EffectAction.GAIN_MANA: _PLAYER_TARGETS,
    EffectAction.DESTROY_WEAPON: _PLAYER_TARGETS,
    EffectAction.SUMMON_TOKEN: _PLAYER_TARGETS,
    EffectAction.TAUNT: frozenset({TargetKind.SELF}),
}

# Triggers that only make sense on a minion in play
MINION_TRIGGERS = frozenset(
    {Trigger.BATTLECRY, Trigger.DEATHRATTLE, Trigger.AURA, Trigger.PASSIVE}
)


class EffectScript(FrozenArenaModel):
    """One trigger -> action -> target rule attached to a card."""

    trigger: Trigger
    condition: Optional[SecretCondition] = None
    action: EffectAction
    amount: Optional[int] = Field(default=None, ge=1)
    token: Optional[str] = None
    target: TargetKind
    tribe_arg: Optional[Tribe] = Field(default=None, alias="tribeArg")

    @model_validator(mode="after")
    def check_structure(self) -> "EffectScript":
        if (self.trigger is Trigger.SECRET_TRIGGER) != (self.condition is not None):
            raise ValueError("condition is required exactly for SecretTrigger effects")
        if (self.action in AMOUNT_ACTIONS) != (self.amount is not None):
            raise ValueError(f"amount is required exactly for {sorted(AMOUNT_ACTIONS)}")
        if (self.action is EffectAction.SUMMON_TOKEN) != (self.token is not None):
            raise ValueError("token is required exactly for SummonToken")
        if (self.target is TargetKind.FRIENDLY_MINIONS_OF_TRIBE) != (
            self.tribe_arg is not None
        ):
            raise ValueError("tribeArg is required exactly for FriendlyMinionsOfTribe")
        if self.target not in ACTION_TARGETS[self.action]:
            raise ValueError(f"{self.action} cannot target {self.target}")
        if self.trigger is Trigger.AURA:
            if self.target not in (
                TargetKind.FRIENDLY_MINIONS_OF_TRIBE,
                TargetKind.ALL_FRIENDLY_MINIONS,
            ):
                raise ValueError("auras only target friendly minions")
            if self.action not in (EffectAction.BUFF_ATTACK, EffectAction.BUFF_HEALTH):
                raise ValueError("auras only buff attack or health")
        if (self.trigger is Trigger.PASSIVE) != (self.action is EffectAction.TAUNT):
            raise ValueError("Taunt is the only Passive effect")
        if (
            self.target is TargetKind.TRIGGERING_ENTITY
            and self.trigger is not Trigger.SECRET_TRIGGER
        ):
            raise ValueError("TriggeringEntity is only available to secrets")
        return self


class CardDefinition(FrozenArenaModel):
    """
    Static card data: cost, stats, type, tribe and scripted effects.

    ``health_or_durability`` is minion health or weapon durability; spells and
    secrets carry neither stat.
    """

    id: str = Field(..., min_length=1)
    name: str = Field(..., min_length=1)
    hero_class: HeroClass
    kind: CardKind
    mana_cost: int = Field(..., ge=0)
    attack: Optional[int] = Field(default=None, ge=0)
    health_or_durability: Optional[int] = Field(default=None, ge=1)
    tribe: Optional[Tribe] = None
    uncollectible: bool = False
    effects: tuple[EffectScript, ...] = ()

    @model_validator(mode="after")
    def check_kind(self) -> "CardDefinition":
        if self.id == DUMMY_CARD_ID:
            raise ValueError(f"{DUMMY_CARD_ID!r} is reserved for hidden cards")
        has_stats = self.kind in (CardKind.MINION, CardKind.WEAPON)
        if has_stats and (self.attack is None or self.health_or_durability is None):
            raise ValueError(f"{self.kind} needs attack and health/durability")
        if not has_stats and (
            self.attack is not None or self.health_or_durability is not None
        ):
            raise ValueError(f"{self.kind} cannot carry attack or health/durability")
        if self.kind is CardKind.WEAPON and not self.attack:
            raise ValueError("weapons need a positive attack")
        if self.tribe is not None and self.kind is not CardKind.MINION:
            raise ValueError("only minions belong to a tribe")

        secret_effects = [e for e in self.effects if e.trigger is Trigger.SECRET_TRIGGER]
        if self.kind is CardKind.SECRET:
            if len(self.effects) != 1 or len(secret_effects) != 1:
                raise ValueError("a secret has exactly one SecretTrigger effect")
        elif secret_effects:
            raise ValueError("only secrets may use SecretTrigger")

        for effect in self.effects:
            if effect.trigger in MINION_TRIGGERS and self.kind is not CardKind.MINION:
                raise ValueError(f"{effect.trigger} effects belong on minions")
            if effect.trigger is Trigger.ON_CAST and self.kind not in (
                CardKind.SPELL,
                CardKind.WEAPON,
            ):
                raise ValueError("OnCast effects belong on spells and weapons")
            if effect.target is TargetKind.SELF and self.kind is not CardKind.MINION:
                raise ValueError("only minions can target Self")
        return self

    @property
    def is_token(self) -> bool:
        return self.uncollectible

    @property
    def taunt(self) -> bool:
        return any(e.action is EffectAction.TAUNT for e in self.effects)

    @property
    def secret_condition(self) -> Optional[SecretCondition]:
        if self.kind is not CardKind.SECRET:
            return None
        return self.effects[0].condition

    def effects_with(self, trigger: Trigger) -> tuple[EffectScript, ...]:
        """Effects of this card that fire on ``trigger``."""
        return tuple(e for e in self.effects if e.trigger is trigger)


class CardSet(FrozenArenaModel):
    """An id-indexed, versioned collection of card definitions."""

    version: str
    cards: dict[str, CardDefinition] = Field(default_factory=dict)

    @classmethod
    def from_cards(cls, version: str, cards: list[CardDefinition]) -> "CardSet":
        """Index ``cards`` by id, rejecting duplicates."""
        indexed: dict[str, CardDefinition] = {}
        for card in cards:
            if card.id in indexed:
                raise DuplicateId(card.id)
            indexed[card.id] = card
        return cls(version=version, cards=indexed)

    def __contains__(self, card_id: object) -> bool:
        return card_id in self.cards

    def __len__(self) -> int:
        return len(self.cards)

    def get(self, card_id: str) -> CardDefinition:
        try:
            return self.cards[card_id]
        except KeyError:
            raise UnknownCard(card_id) from None

    def definitions(self) -> list[CardDefinition]:
        return list(self.cards.values())

    def collectible_pool(self, hero_class: HeroClass) -> list[CardDefinition]:
        """Collectible cards a deck of ``hero_class`` may contain, in set order."""
        return [
            card
            for card in self.cards.values()
            if not card.uncollectible
            and card.hero_class in (HeroClass.NEUTRAL, hero_class)
        ]

    def secrets_pool(self, hero_class: HeroClass) -> list[CardDefinition]:
        return [c for c in self.collectible_pool(hero_class) if c.kind is CardKind.SECRET]


class DeckSpec(FrozenArenaModel):
    """A named 30-card deck list for one hero class."""

    name: str = Field(..., min_length=1)
    hero_class: HeroClass = Field(..., alias="class")
    archetype: Optional[Archetype] = None
    card_ids: tuple[str, ...] = Field(..., alias="cards")
