"""
The bundled desk-scale card set and the six premade decks.
"""

from functools import lru_cache
from importlib.resources import files

from ..models.cards import CardSet, DeckSpec
from ..models.track import PremadeDeck
from .loader import load_card_set, load_deck

DATA = files("card_arena.cards").joinpath("data")

# (file, known before submission)
PREMADE_DECK_FILES = (
    ("mage_tempo.json", True),
    ("mage_control.json", False),
    ("priest_control.json", True),
    ("paladin_murlocs.json", True),
    ("paladin_midrange.json", False),
    ("warrior_aggro.json", False),
)

MIRROR_DECK_FILE = "mage_tempo.json"


@lru_cache(maxsize=1)
def builtin_card_set() -> CardSet:
    return load_card_set(DATA.joinpath("builtin_cards.json").read_bytes())


def builtin_deck(file_name: str) -> DeckSpec:
    return load_deck(DATA.joinpath("decks", file_name).read_bytes())


def premade_decks() -> tuple[PremadeDeck, ...]:
    return tuple(
        PremadeDeck(deck=builtin_deck(file_name), known=known)
        for file_name, known in PREMADE_DECK_FILES
    )


def mirror_deck() -> DeckSpec:
    """The deck both sides use in mirror matches and agent ladders."""
    return builtin_deck(MIRROR_DECK_FILE)
