"""
Reading and writing the JSON card-file and deck-file formats.

Card file::

    {"version": str, "cards": [{"id", "name", "class", "kind", "cost",
     "attack"?, "health"?, "durability"?, "tribe"?, "uncollectible"?,
     "effects": [{"trigger", "condition"?, "action", "amount"?, "token"?,
                  "target", "tribeArg"?}]}]}

Deck file::

    {"name": str, "class": str, "archetype"?: str, "cards": [30 ids]}

Unknown fields are rejected in both.
"""

import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import Field, ValidationError

from ..errors import DuplicateId, ParseError, SchemaError
from ..models.base import FrozenArenaModel
from ..models.cards import (
    CardDefinition,
    CardKind,
    CardSet,
    DeckSpec,
    EffectAction,
    EffectScript,
    HeroClass,
    Tribe,
)

logger = logging.getLogger(__name__)

Document = Union[bytes, str]


class CardRecord(FrozenArenaModel):
    """A card object exactly as it appears in the file."""

    id: str
    name: str
    hero_class: HeroClass = Field(..., alias="class")
    kind: CardKind
    cost: int
    attack: Optional[int] = None
    health: Optional[int] = None
    durability: Optional[int] = None
    tribe: Optional[Tribe] = None
    uncollectible: Optional[bool] = None
    effects: tuple[EffectScript, ...] = ()


class CardFile(FrozenArenaModel):
    version: str
    cards: tuple[CardRecord, ...]


def _parse_json(document: Document) -> Any:
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc.reason}", 1, exc.start + 1) from exc
    try:
        return json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def _describe(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(p) for p in error["loc"]) or "<document>"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def _to_definition(record: CardRecord) -> CardDefinition:
    if record.kind is CardKind.WEAPON and record.health is not None:
        raise SchemaError(f"card {record.id!r}: weapons use 'durability', not 'health'")
    if record.kind is not CardKind.WEAPON and record.durability is not None:
        raise SchemaError(f"card {record.id!r}: only weapons have 'durability'")
    stat = record.durability if record.kind is CardKind.WEAPON else record.health
    try:
        return CardDefinition(
            id=record.id,
            name=record.name,
            hero_class=record.hero_class,
            kind=record.kind,
            mana_cost=record.cost,
            attack=record.attack,
            health_or_durability=stat,
            tribe=record.tribe,
            uncollectible=bool(record.uncollectible),
            effects=record.effects,
        )
    except ValidationError as exc:
        raise SchemaError(f"card {record.id!r}: {_describe(exc)}") from exc


def load_card_set(document: Document) -> CardSet:
    """Parse a card-file document into a ``CardSet``."""
    raw = _parse_json(document)
    try:
        card_file = CardFile.model_validate(raw)
    except ValidationError as exc:
        raise SchemaError(_describe(exc)) from exc

    seen: set[str] = set()
    for record in card_file.cards:
        if record.id in seen:
            raise DuplicateId(record.id)
        seen.add(record.id)

    card_set = CardSet.from_cards(
        card_file.version, [_to_definition(record) for record in card_file.cards]
    )
    for card in card_set.definitions():
        for effect in card.effects:
            if effect.action is EffectAction.SUMMON_TOKEN:
                token = card_set.cards.get(effect.token)
                if token is None or token.kind is not CardKind.MINION:
                    raise SchemaError(
                        f"card {card.id!r}: token {effect.token!r} is not a minion in the set"
                    )
    logger.debug("Loaded card set %s with %d cards", card_set.version, len(card_set))
    return card_set


def read_card_set(path: Path) -> CardSet:
    return load_card_set(Path(path).read_bytes())


def card_to_record(card: CardDefinition) -> dict[str, Any]:
    """The file representation of one card (optional keys omitted when unset)."""
    record: dict[str, Any] = {
        "id": card.id,
        "name": card.name,
        "class": str(card.hero_class),
        "kind": str(card.kind),
        "cost": card.mana_cost,
    }
    if card.attack is not None:
        record["attack"] = card.attack
    if card.kind is CardKind.MINION:
        record["health"] = card.health_or_durability
    elif card.kind is CardKind.WEAPON:
        record["durability"] = card.health_or_durability
    if card.tribe is not None:
        record["tribe"] = str(card.tribe)
    if card.uncollectible:
        record["uncollectible"] = True
    record["effects"] = [
        e.model_dump(mode="json", by_alias=True, exclude_none=True) for e in card.effects
    ]
    return record


def serialize_card_set(card_set: CardSet) -> str:
    document = {
        "version": card_set.version,
        "cards": [card_to_record(card) for card in card_set.definitions()],
    }
    return json.dumps(document, indent=2) + "\n"


def load_deck(document: Document) -> DeckSpec:
    """Parse a deck-file document. Legality is checked by ``validate_deck``."""
    raw = _parse_json(document)
    try:
        return DeckSpec.model_validate(raw)
    except ValidationError as exc:
        raise SchemaError(_describe(exc)) from exc


def read_deck(path: Path) -> DeckSpec:
    return load_deck(Path(path).read_bytes())


def serialize_deck(deck: DeckSpec) -> str:
    return deck.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"
