"""
Tests for round-robin scheduling, game seeds and sub-tournament splits.
"""

import hashlib

import pytest

from card_arena.errors import InvalidGroupSize, TooFewAgents
from card_arena.models import AgentStats, GameStats, RankingTable
from card_arena.tournament import (
    derive_game_seed,
    promote_finalists,
    schedule_round_robin,
    split_sub_tournaments,
)


class TestRoundRobin:
    """Test pairing generation."""

    def test_pairs(self):
        """Test that every unordered pair appears once in input order."""
        assert schedule_round_robin(["a", "b", "c"]) == [("a", "b"), ("a", "c"), ("b", "c")]

    def test_pair_count(self):
        """Test n * (n - 1) / 2 pairings."""
        assert len(schedule_round_robin([str(i) for i in range(8)])) == 28

    def test_too_few(self):
        """Test that a single agent cannot play a round robin."""
        with pytest.raises(TooFewAgents):
            schedule_round_robin(["solo"])

    def test_duplicate_names(self):
        """Test that agent names must be distinct."""
        with pytest.raises(TooFewAgents):
            schedule_round_robin(["a", "a"])


class TestGameSeed:
    """Test per-game seed derivation."""

    def test_formula(self):
        """Test the documented SHA-256 construction."""
        digest = hashlib.sha256(b"42:1:2:3").digest()
        expected = int.from_bytes(digest[:8], "big") & (2**63 - 1)
        assert derive_game_seed(42, 1, 2, 3) == expected

    def test_coordinates_matter(self):
        """Test that each coordinate changes the seed."""
        seeds = {
            derive_game_seed(0, 0, 0, 0),
            derive_game_seed(1, 0, 0, 0),
            derive_game_seed(0, 1, 0, 0),
            derive_game_seed(0, 0, 1, 0),
            derive_game_seed(0, 0, 0, 1),
        }
        assert len(seeds) == 5


class TestSplit:
    """Test sub-tournament planning."""

    AGENTS = [f"agent{i:02d}" for i in range(20)]

    def test_balanced_groups(self):
        """Test 20 agents with at most 8 per group."""
        plan = split_sub_tournaments(self.AGENTS, 8, shuffle_seed=5)
        assert [len(g) for g in plan.groups] == [7, 7, 6]
        assert sorted(name for g in plan.groups for name in g) == self.AGENTS
        assert plan.needs_final
        assert plan.finalists_per_group == 1

    def test_reproducible(self):
        """Test that the shuffle seed fixes the assignment."""
        a = split_sub_tournaments(self.AGENTS, 8, shuffle_seed=5)
        b = split_sub_tournaments(self.AGENTS, 8, shuffle_seed=5)
        c = split_sub_tournaments(self.AGENTS, 8, shuffle_seed=6)
        assert a == b
        assert a.groups != c.groups

    def test_single_group(self):
        """Test that a small field needs no final."""
        plan = split_sub_tournaments(["a", "b", "c"], 8)
        assert len(plan.groups) == 1
        assert not plan.needs_final

    def test_finalist_count(self):
        """Test rounding finalists up per group."""
        plan = split_sub_tournaments(self.AGENTS, 8, finalist_count=4)
        assert plan.finalists_per_group == 2

    def test_invalid_group_size(self):
        """Test that groups must hold at least two agents."""
        with pytest.raises(InvalidGroupSize):
            split_sub_tournaments(self.AGENTS, 1)

    def test_promote(self):
        """Test that each group's leaders advance in rank order."""
        plan = split_sub_tournaments(["a", "b", "c", "d"], 2, finalist_count=2)
        tables = []
        for group in plan.groups:
            winner, loser = sorted(group)
            stats = GameStats(
                agents={
                    winner: AgentStats(wins=1, games=1),
                    loser: AgentStats(losses=1, games=1),
                }
            )
            tables.append(RankingTable.from_stats(stats))
        finalists = promote_finalists(plan, tables)
        assert finalists == [sorted(g)[0] for g in plan.groups]

    def test_promote_needs_every_table(self):
        """Test that a missing group table is rejected."""
        plan = split_sub_tournaments(self.AGENTS, 8)
        with pytest.raises(ValueError):
            promote_finalists(plan, [])
