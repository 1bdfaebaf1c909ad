"""
Tests for per-seat observations and determinization.
"""

import pytest

from card_arena.agents.heuristic import heuristic_score
from card_arena.engine import apply_action, concede, legal_actions
from card_arena.errors import InconsistentObservation
from card_arena.models import Action, Seat
from card_arena.observation import determinize, observe
from tests.builders import add_minion, add_secret, add_to_deck, add_to_hand, blank_state

FIRST, SECOND = Seat.FIRST, Seat.SECOND


class TestObserve:
    """Test what each seat is shown."""

    def test_active_seat_sees_options(self, fresh_game):
        """Test that only the active seat gets the legal actions."""
        mine = observe(fresh_game, FIRST)
        theirs = observe(fresh_game, SECOND)
        assert list(mine.options) == legal_actions(fresh_game)
        assert theirs.options == ()
        assert mine.is_my_turn
        assert not theirs.is_my_turn

    def test_counts(self, fresh_game):
        """Test own zones and opponent counts at the start of a game."""
        obs = observe(fresh_game, FIRST)
        assert len(obs.own.hand) == 4
        assert obs.own.deck_count == 26
        assert sum(obs.own_deck_remaining.values()) == 26
        assert obs.opponent_visible.hand_count == 4
        assert obs.opponent_visible.deck_count == 26
        assert len(obs.opponent_visible.hand) == 4
        assert all(card.card_id == "dummy" for card in obs.opponent_visible.hand)

    def test_opponent_hand_is_hidden(self, card_set):
        """Test that the opponent's hand contents never reach the observation."""
        a = blank_state(card_set)
        b = blank_state(card_set)
        add_to_hand(a, SECOND, "cliff_titan")
        add_to_hand(b, SECOND, "spark_bolt")
        assert observe(a, FIRST).to_canonical_json() == observe(b, FIRST).to_canonical_json()

    def test_secrets_are_hidden(self, card_set):
        """Test that opponent secrets only appear as a count."""
        a = blank_state(card_set)
        b = blank_state(card_set)
        add_secret(a, SECOND, "mirror_trap")
        add_secret(b, SECOND, "counter_sigil")
        obs = observe(a, FIRST)
        assert obs.opponent_visible.secret_count == 1
        assert obs.to_canonical_json() == observe(b, FIRST).to_canonical_json()
        assert [s.card_id for s in observe(a, SECOND).own.secrets] == ["mirror_trap"]

    def test_deck_order_is_hidden(self, card_set):
        """Test that the viewer's deck is given as a sorted multiset."""
        a = blank_state(card_set)
        add_to_deck(a, FIRST, "river_scout", 2)
        add_to_deck(a, FIRST, "cliff_titan")
        b = a.clone()
        b.players[FIRST].deck.reverse()
        obs = observe(a, FIRST)
        assert obs.own_deck_remaining == {"cliff_titan": 1, "river_scout": 2}
        assert obs.to_canonical_json() == observe(b, FIRST).to_canonical_json()

    def test_minion_view_includes_auras(self, card_set):
        """Test that board views report aura-adjusted stats."""
        state = blank_state(card_set)
        add_minion(state, FIRST, "war_drummer")
        add_minion(state, FIRST, "bog_crawler")
        view = observe(state, SECOND).opponent_visible.board[1]
        assert (view.attack, view.health) == (4, 2)
        assert view.base_attack == 3

    def test_finished_game_has_no_options(self, fresh_game):
        """Test that a finished game offers nobody anything."""
        over = concede(fresh_game, SECOND)
        for seat in Seat:
            obs = observe(over, seat)
            assert obs.options == ()
            assert obs.result == over.result


class TestHeuristic:
    """Test the observation heuristic."""

    def test_own_minion_adds_stats(self, card_set):
        """Test that a 3/2 own minion adds five points with default weights."""
        state = blank_state(card_set)
        before = heuristic_score(observe(state, FIRST))
        add_minion(state, FIRST, "bog_crawler")
        assert heuristic_score(observe(state, FIRST)) == pytest.approx(before + 5)

    def test_symmetric_start(self, card_set):
        """Test that an empty mirrored position scores zero."""
        state = blank_state(card_set)
        assert heuristic_score(observe(state, FIRST)) == 0


class TestDeterminize:
    """Test sampling full states from observations."""

    def _midgame(self, fresh_game):
        state = fresh_game
        for _ in range(6):
            state = apply_action(state, legal_actions(state)[-1])
            state = apply_action(state, Action.end_turn())
        return state

    def test_consistent_with_observation(self, fresh_game):
        """Test that the sample looks exactly like the observation to the viewer."""
        state = self._midgame(fresh_game)
        for seat in Seat:
            obs = observe(state, seat)
            sample = determinize(obs, state.card_set, rng_seed=3)
            assert observe(sample, seat).to_canonical_json() == obs.to_canonical_json()

    def test_same_seed_same_sample(self, fresh_game):
        """Test that sampling is a function of the seed."""
        obs = observe(fresh_game, FIRST)
        a = determinize(obs, fresh_game.card_set, rng_seed=5)
        b = determinize(obs, fresh_game.card_set, rng_seed=5)
        assert a.players[SECOND].hand == b.players[SECOND].hand
        assert a.players[FIRST].deck == b.players[FIRST].deck

    def test_samples_vary_with_seed(self, fresh_game):
        """Test that hidden hands differ across seeds while the view stays fixed."""
        obs = observe(fresh_game, FIRST)
        expected = obs.to_canonical_json()
        hands = set()
        for seed in range(100):
            sample = determinize(obs, fresh_game.card_set, rng_seed=seed)
            assert observe(sample, FIRST).to_canonical_json() == expected
            hands.add(tuple(c.card_id for c in sample.players[SECOND].hand))
        assert len(hands) > 1

    def test_opponent_cards_from_class_pool(self, fresh_game):
        """Test that hidden opponent cards are collectible cards of their class."""
        obs = observe(fresh_game, FIRST)
        sample = determinize(obs, fresh_game.card_set, rng_seed=9)
        pool = {c.id for c in fresh_game.card_set.collectible_pool(obs.opponent_visible.hero_class)}
        hidden = sample.players[SECOND].hand + sample.players[SECOND].deck
        assert len(hidden) == 30
        assert {c.card_id for c in hidden} <= pool

    def test_sample_does_not_record_events(self, fresh_game):
        """Test that search states skip the event log."""
        sample = determinize(observe(fresh_game, FIRST), fresh_game.card_set, rng_seed=1)
        after = apply_action(sample, Action.end_turn())
        assert after.events == []

    def test_deck_count_mismatch(self, fresh_game):
        """Test that a corrupted multiset is rejected."""
        obs = observe(fresh_game, FIRST)
        broken = obs.model_copy(update={"own_deck_remaining": {"spark_bolt": 1}})
        with pytest.raises(InconsistentObservation):
            determinize(broken, fresh_game.card_set, rng_seed=0)

    def test_too_many_secrets(self, card_set):
        """Test that more hidden secrets than the class has is rejected."""
        state = blank_state(card_set)
        for card_id in ("mirror_trap", "counter_sigil", "mirror_trap"):
            add_secret(state, SECOND, card_id)
        with pytest.raises(InconsistentObservation):
            determinize(observe(state, FIRST), card_set, rng_seed=0)
