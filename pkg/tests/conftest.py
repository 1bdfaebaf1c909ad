"""
Shared fixtures for the card-arena test suite.
"""

import pytest

from card_arena.cards import builtin_card_set, builtin_deck, mirror_deck
from card_arena.engine import new_game
from card_arena.models import CardSet, DeckSpec, MatchConfig


@pytest.fixture(scope="session")
def card_set() -> CardSet:
    return builtin_card_set()


@pytest.fixture(scope="session")
def mage_deck() -> DeckSpec:
    return mirror_deck()


@pytest.fixture(scope="session")
def priest_deck() -> DeckSpec:
    return builtin_deck("priest_control.json")


@pytest.fixture(scope="session")
def warrior_deck() -> DeckSpec:
    return builtin_deck("warrior_aggro.json")


@pytest.fixture
def config() -> MatchConfig:
    return MatchConfig()


@pytest.fixture
def fast_config() -> MatchConfig:
    """Default rules with a short turn budget for driver tests."""
    return MatchConfig(time_budget_ms=2000)


@pytest.fixture
def fresh_game(mage_deck, card_set, config):
    return new_game(mage_deck, mage_deck, card_set, config, seed=7)
