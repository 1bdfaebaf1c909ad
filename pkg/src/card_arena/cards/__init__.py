"""
Card data: the JSON loaders, deck validation and the bundled card set.
"""

from .builtin import builtin_card_set, builtin_deck, mirror_deck, premade_decks
from .loader import (
    load_card_set,
    load_deck,
    read_card_set,
    read_deck,
    serialize_card_set,
    serialize_deck,
)
from .validation import (
    COPY_LIMIT,
    DECK_SIZE,
    DeckViolation,
    ValidationReport,
    ViolationCode,
    validate_deck,
)

__all__ = [
    "builtin_card_set",
    "builtin_deck",
    "mirror_deck",
    "premade_decks",
    "load_card_set",
    "load_deck",
    "read_card_set",
    "read_deck",
    "serialize_card_set",
    "serialize_deck",
    "validate_deck",
    "ValidationReport",
    "DeckViolation",
    "ViolationCode",
    "DECK_SIZE",
    "COPY_LIMIT",
]
