"""
Round-robin scheduling, per-game seed derivation and sub-tournament splits.
"""

import hashlib
import math
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from ..errors import InvalidGroupSize, TooFewAgents
from ..models.stats import RankingTable
from ..models.track import SubTournamentPlan

SEED_MASK = 2**63 - 1


def schedule_round_robin(agents: Sequence[str]) -> list[tuple[str, str]]:
    """Every unordered pair once, in input order."""
    if len(agents) < 2:
        raise TooFewAgents(f"a round robin needs at least 2 agents, got {len(agents)}")
    if len(set(agents)) != len(agents):
        raise TooFewAgents("agent names must be distinct")
    return list(combinations(agents, 2))


def derive_game_seed(
    base_seed: int, pairing_index: int, deck_pair_index: int, repeat_index: int
) -> int:
    """
    SHA-256 of ``"base:pairing:deck_pair:repeat"`` (decimal, UTF-8); the first
    eight bytes big-endian, masked to 63 bits.
    """
    key = f"{base_seed}:{pairing_index}:{deck_pair_index}:{repeat_index}".encode("utf-8")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") & SEED_MASK


def split_sub_tournaments(
    agents: Sequence[str],
    max_group_size: int,
    finalist_count: Optional[int] = None,
    shuffle_seed: int = 0,
) -> SubTournamentPlan:
    """
    Shuffle the agents under ``shuffle_seed`` and deal them into
    ``ceil(n / max_group_size)`` groups whose sizes differ by at most one.
    Each group's top ``ceil(finalist_count / groups)`` advance; by default
    ``finalist_count`` equals the group count.
    """
    if max_group_size < 2:
        raise InvalidGroupSize(f"groups need room for 2 agents, got {max_group_size}")
    if len(agents) < 2:
        raise TooFewAgents(f"need at least 2 agents, got {len(agents)}")
    group_count = math.ceil(len(agents) / max_group_size)
    order = np.random.default_rng(shuffle_seed % 2**63).permutation(len(agents))
    shuffled = [agents[i] for i in order]

    base, extra = divmod(len(shuffled), group_count)
    groups: list[tuple[str, ...]] = []
    start = 0
    for g in range(group_count):
        size = base + (1 if g < extra else 0)
        groups.append(tuple(shuffled[start : start + size]))
        start += size

    finalists = finalist_count if finalist_count is not None else group_count
    if finalists < 1:
        raise InvalidGroupSize("at least one finalist must advance")
    return SubTournamentPlan(
        groups=tuple(groups),
        finalists_per_group=math.ceil(finalists / group_count),
        needs_final=group_count > 1,
        shuffle_seed=shuffle_seed,
    )


def promote_finalists(plan: SubTournamentPlan, group_tables: Sequence[RankingTable]) -> list[str]:
    """The top agents of every group, group by group in rank order."""
    if len(group_tables) != len(plan.groups):
        raise ValueError(f"expected {len(plan.groups)} group tables, got {len(group_tables)}")
    finalists: list[str] = []
    for table in group_tables:
        finalists.extend(table.agents()[: plan.finalists_per_group])
    return finalists
