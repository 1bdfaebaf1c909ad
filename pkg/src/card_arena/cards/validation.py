"""
Deck legality rules.

A deck is legal when it has exactly 30 cards, every id resolves to a
collectible card, every card is Neutral or of the deck's class, and no id
appears more than twice.
"""

from collections import Counter
from enum import StrEnum
from typing import Optional

from ..models.base import FrozenArenaModel
from ..models.cards import CardSet, DeckSpec, HeroClass

DECK_SIZE = 30
COPY_LIMIT = 2


class ViolationCode(StrEnum):
    DECK_SIZE_INVALID = "DeckSizeInvalid"
    UNKNOWN_CARD_ID = "UnknownCardId"
    UNCOLLECTIBLE_CARD = "UncollectibleCard"
    CLASS_MISMATCH = "ClassMismatch"
    COPY_LIMIT_EXCEEDED = "CopyLimitExceeded"
    NEUTRAL_HERO_CLASS = "NeutralHeroClass"


class DeckViolation(FrozenArenaModel):
    code: ViolationCode
    card_id: Optional[str] = None
    count: Optional[int] = None
    card_class: Optional[HeroClass] = None

    def __str__(self) -> str:
        match self.code:
            case ViolationCode.DECK_SIZE_INVALID:
                return f"{self.code}({self.count})"
            case ViolationCode.CLASS_MISMATCH:
                return f"{self.code}({self.card_id}: {self.card_class})"
            case ViolationCode.COPY_LIMIT_EXCEEDED:
                return f"{self.code}({self.card_id} x{self.count})"
            case ViolationCode.NEUTRAL_HERO_CLASS:
                return str(self.code)
            case _:
                return f"{self.code}({self.card_id})"


class ValidationReport(FrozenArenaModel):
    deck_name: str
    violations: tuple[DeckViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> list[ViolationCode]:
        return [v.code for v in self.violations]

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


def validate_deck(deck: DeckSpec, card_set: CardSet) -> ValidationReport:
    """List every rule the deck breaks; an empty report means the deck is legal."""
    violations: list[DeckViolation] = []
    if not deck.hero_class.playable:
        violations.append(DeckViolation(code=ViolationCode.NEUTRAL_HERO_CLASS))
    if len(deck.card_ids) != DECK_SIZE:
        violations.append(
            DeckViolation(code=ViolationCode.DECK_SIZE_INVALID, count=len(deck.card_ids))
        )

    # Counter preserves first-appearance order, which keeps the report stable
    for card_id, count in Counter(deck.card_ids).items():
        card = card_set.cards.get(card_id)
        if card is None:
            violations.append(DeckViolation(code=ViolationCode.UNKNOWN_CARD_ID, card_id=card_id))
            continue
        if card.uncollectible:
            violations.append(
                DeckViolation(code=ViolationCode.UNCOLLECTIBLE_CARD, card_id=card_id)
            )
        if card.hero_class not in (HeroClass.NEUTRAL, deck.hero_class):
            violations.append(
                DeckViolation(
                    code=ViolationCode.CLASS_MISMATCH,
                    card_id=card_id,
                    card_class=card.hero_class,
                )
            )
        if count > COPY_LIMIT:
            violations.append(
                DeckViolation(
                    code=ViolationCode.COPY_LIMIT_EXCEEDED, card_id=card_id, count=count
                )
            )
    return ValidationReport(deck_name=deck.name, violations=tuple(violations))
