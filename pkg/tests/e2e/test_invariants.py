"""
Randomized games: every reachable state must stay sound.
"""

import pytest

from card_arena.cards import premade_decks
from card_arena.engine import check_invariants
from tests.builders import deck_pair, random_playout


def _fuzz(card_set, games: int, base_seed: int) -> int:
    decks = [p.deck for p in premade_decks()]
    steps = 0
    for i in range(games):
        state = None
        for state in random_playout(card_set, deck_pair(decks, i), base_seed + i):
            problems = check_invariants(state)
            assert not problems, f"game {i}, turn {state.turn_number}: {problems}"
            steps += 1
        assert state is not None and state.result is not None
    return steps


class TestInvariantFuzz:
    def test_random_games_stay_sound(self, card_set):
        """A short run over several deck pairings."""
        assert _fuzz(card_set, games=12, base_seed=100) > 12

    @pytest.mark.slow
    def test_thousand_random_games(self, card_set):
        _fuzz(card_set, games=1000, base_seed=10_000)
