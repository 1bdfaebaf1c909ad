"""
Tests for the pydantic data models.
"""

import pytest
from pydantic import ValidationError

from card_arena.models import (
    Action,
    AgentGameStats,
    AgentStats,
    CardDefinition,
    CardKind,
    EffectAction,
    EffectScript,
    GameResult,
    GameStats,
    HeroClass,
    HeuristicWeights,
    MatchConfig,
    Outcome,
    RankingTable,
    ResultReason,
    Seat,
    SeatResult,
    Target,
    TargetKind,
    Trigger,
)


class TestEffectScript:
    """Test effect-script structural validation."""

    def test_damage_needs_amount(self):
        """Test that an amount-bearing action requires an amount."""
        with pytest.raises(ValidationError):
            EffectScript(trigger=Trigger.ON_CAST, action=EffectAction.DAMAGE, target="EnemyHero")

    def test_tribe_argument_alias(self):
        """Test that tribeArg is read for FriendlyMinionsOfTribe."""
        effect = EffectScript.model_validate(
            {
                "trigger": "Aura",
                "action": "BuffAttack",
                "amount": 1,
                "target": "FriendlyMinionsOfTribe",
                "tribeArg": "Murloc",
            }
        )
        assert effect.tribe_arg == "Murloc"

    def test_draw_cannot_target_minions(self):
        """Test the action/target compatibility table."""
        with pytest.raises(ValidationError):
            EffectScript(
                trigger=Trigger.ON_CAST,
                action=EffectAction.DRAW_CARDS,
                amount=1,
                target=TargetKind.ALL_ENEMY_MINIONS,
            )

    def test_triggering_entity_only_for_secrets(self):
        """Test that TriggeringEntity is rejected outside secrets."""
        with pytest.raises(ValidationError):
            EffectScript(
                trigger=Trigger.ON_CAST,
                action=EffectAction.DAMAGE,
                amount=1,
                target=TargetKind.TRIGGERING_ENTITY,
            )


class TestCardDefinition:
    """Test card definition validation."""

    def test_minion_needs_stats(self):
        """Test that minions carry attack and health."""
        with pytest.raises(ValidationError):
            CardDefinition(id="x", name="X", hero_class="Neutral", kind="Minion", mana_cost=1)

    def test_spell_rejects_stats(self):
        """Test that spells cannot carry attack."""
        with pytest.raises(ValidationError):
            CardDefinition(
                id="x", name="X", hero_class="Mage", kind="Spell", mana_cost=1, attack=2
            )

    def test_dummy_id_reserved(self):
        """Test that the hidden-card placeholder id cannot name a real card."""
        with pytest.raises(ValidationError):
            CardDefinition(
                id="dummy",
                name="Dummy",
                hero_class="Neutral",
                kind="Minion",
                mana_cost=1,
                attack=1,
                health_or_durability=1,
            )

    def test_taunt_flag(self):
        """Test that a Passive Taunt effect marks the card."""
        card = CardDefinition(
            id="wall",
            name="Wall",
            hero_class="Neutral",
            kind=CardKind.MINION,
            mana_cost=2,
            attack=0,
            health_or_durability=5,
            effects=(EffectScript(trigger="Passive", action="Taunt", target="Self"),),
        )
        assert card.taunt is True

    def test_secret_needs_single_trigger(self):
        """Test that a secret without a SecretTrigger effect is rejected."""
        with pytest.raises(ValidationError):
            CardDefinition(id="s", name="S", hero_class="Mage", kind="Secret", mana_cost=1)


class TestGameResult:
    """Test game results."""

    def test_turn_limit_implies_draw(self):
        """Test that a TurnLimit result cannot name a winner."""
        with pytest.raises(ValidationError):
            GameResult(
                outcome=Outcome.WIN,
                winner=Seat.FIRST,
                reason=ResultReason.TURN_LIMIT,
                final_turn=50,
            )

    def test_for_seat_is_zero_sum(self):
        """Test both perspectives of a win."""
        result = GameResult.win(Seat.SECOND, ResultReason.HERO_DEAD, 12)
        assert result.for_seat(Seat.SECOND) is SeatResult.WIN
        assert result.for_seat(Seat.FIRST) is SeatResult.LOSS
        draw = GameResult.draw(ResultReason.TURN_LIMIT, 50)
        assert {draw.for_seat(s) for s in Seat} == {SeatResult.DRAW}


class TestMatchConfig:
    """Test match configuration defaults."""

    def test_defaults(self):
        """Test the documented defaults."""
        config = MatchConfig()
        assert config.turn_limit == 50
        assert config.time_budget_ms == 60000
        assert config.hand_limit == 10
        assert config.board_limit == 7
        assert config.starting_hand_sizes == (3, 4)

    def test_limits_positive(self):
        """Test that non-positive limits are rejected."""
        with pytest.raises(ValidationError):
            MatchConfig(turn_limit=0)


class TestAction:
    """Test the action alphabet."""

    def test_dict_shape(self):
        """Test that actions dump to plain JSON data and back."""
        action = Action.attack(5, Target(Seat.SECOND))
        data = action.to_dict()
        assert data["kind"] == "Attack"
        assert data["target"] == {"seat": 1, "minion_id": None}
        assert Action.from_dict(data) == action

    def test_actions_are_hashable(self):
        """Test that equal actions collapse in a set."""
        assert len({Action.end_turn(), Action.end_turn()}) == 1


class TestHeuristicWeights:
    """Test heuristic weight handling."""

    def test_defaults_are_symmetric(self):
        """Test the documented default vector."""
        assert HeuristicWeights().as_vector() == (1.0, -1.0, 1.0, 1.0, -1.0, -1.0, 0.5)

    def test_rejects_non_finite(self):
        """Test that infinite weights are rejected."""
        with pytest.raises(ValidationError):
            HeuristicWeights(w_hand_size=float("inf"))


class TestStats:
    """Test per-agent accounting and ranking."""

    def test_agent_game_stats_response_times(self):
        """Test that total stays at or above the maximum."""
        stats = AgentGameStats()
        stats.add_response(5.0)
        stats.add_response(2.0)
        assert stats.moves_made == 2
        assert stats.total_response_ms == 7.0
        assert stats.max_response_ms == 5.0

    def test_win_rate_counts_draws_half(self):
        """Test the win-rate formula."""
        stats = AgentStats(wins=2, draws=2, losses=0, games=4)
        assert stats.win_rate == pytest.approx(0.75)
        assert stats.is_consistent()

    def test_ranking_tie_break(self):
        """Test ordering by win rate, then response time, then name."""
        stats = GameStats(
            agents={
                "b": AgentStats(wins=1, losses=1, games=2, moves=2, total_response_ms=2.0),
                "a": AgentStats(wins=1, losses=1, games=2, moves=2, total_response_ms=2.0),
                "c": AgentStats(wins=1, losses=1, games=2, moves=2, total_response_ms=1.0),
                "d": AgentStats(wins=2, games=2, moves=2, total_response_ms=9.0),
            }
        )
        table = RankingTable.from_stats(stats)
        assert table.agents() == ["d", "c", "a", "b"]
        assert [row.rank for row in table.rows] == [1, 2, 3, 4]

    def test_merge_is_order_independent(self):
        """Test that merging stat sets commutes."""
        x = GameStats(agents={"a": AgentStats(wins=1, games=1)})
        y = GameStats(agents={"a": AgentStats(losses=1, games=1), "b": AgentStats(wins=1, games=1)})
        assert x.merged(y) == y.merged(x)


class TestHeroClass:
    """Test hero class helpers."""

    def test_neutral_is_not_playable(self):
        """Test that Neutral is not a playable class."""
        assert not HeroClass.NEUTRAL.playable
        assert HeroClass.MAGE.playable
