"""
Observations never depend on what the viewer is not allowed to see.
"""

import numpy as np
import pytest

from card_arena.cards import premade_decks
from card_arena.engine import CardInstance, GameState, SecretInstance
from card_arena.models import CardKind, Seat
from card_arena.observation import observe
from tests.builders import deck_pair, random_playout


def _rewrite_hidden(state: GameState, viewer: Seat, rng: np.random.Generator) -> GameState:
    """Swap every hidden card identity of the viewer's opponent and reshuffle both decks."""
    cards = [c for c in state.card_set.cards.values() if not c.is_token]
    secrets = [c for c in cards if c.kind is CardKind.SECRET]
    twin = state.clone()
    enemy = twin.players[viewer.other]

    def other_card(instance: CardInstance) -> CardInstance:
        return CardInstance(instance.instance_id, cards[int(rng.integers(len(cards)))].id)

    enemy.hand = [other_card(c) for c in enemy.hand]
    enemy.deck = [other_card(c) for c in enemy.deck]
    enemy.secrets = [
        SecretInstance(s.instance_id, card.id, card.secret_condition)
        for s, card in ((s, secrets[int(rng.integers(len(secrets)))]) for s in enemy.secrets)
    ]
    own = twin.players[viewer]
    own.deck = [own.deck[i] for i in rng.permutation(len(own.deck))]
    return twin


def _sample_states(card_set, count: int, base_seed: int) -> list[GameState]:
    decks = [p.deck for p in premade_decks()]
    states: list[GameState] = []
    game = 0
    while len(states) < count:
        playout = list(random_playout(card_set, deck_pair(decks, game), base_seed + game))
        states.extend(playout[:: max(1, len(playout) // 10)])
        game += 1
    return states[:count]


def _check(card_set, count: int, base_seed: int) -> None:
    rng = np.random.default_rng(base_seed)
    for state in _sample_states(card_set, count, base_seed):
        for viewer in Seat:
            before = observe(state, viewer).to_canonical_json()
            after = observe(_rewrite_hidden(state, viewer, rng), viewer).to_canonical_json()
            assert before == after, f"turn {state.turn_number}, viewer {viewer.name}"


class TestInformationHiding:
    def test_hidden_zones_do_not_leak(self, card_set):
        _check(card_set, count=30, base_seed=40)

    def test_rewrite_changes_the_state(self, card_set, mage_deck):
        """The rewrite really touches hidden cards, so the check above is not vacuous."""
        state = next(random_playout(card_set, (mage_deck, mage_deck), 3))
        twin = _rewrite_hidden(state, Seat.FIRST, np.random.default_rng(0))
        original = [c.card_id for c in state.players[Seat.SECOND].deck]
        rewritten = [c.card_id for c in twin.players[Seat.SECOND].deck]
        assert original != rewritten

    @pytest.mark.slow
    def test_two_hundred_states(self, card_set):
        _check(card_set, count=200, base_seed=4000)
