"""
Agents: the lifecycle contract, the match driver, the external-process
bridge and the baseline agents.
"""

from .base import AbstractAgent
from .driver import TurnBudget, play_game, play_games, play_series
from .external import ExternalProcessAgent
from .flat_mc import FlatMonteCarloAgent, uniform_random_policy
from .greedy import GreedyAgent
from .heuristic import heuristic_score, squash, state_score
from .registry import AgentSpec, make_agent, parse_agent_spec
from .simple import PassAgent, RandomAgent

__all__ = [
    "AbstractAgent",
    "TurnBudget",
    "play_game",
    "play_games",
    "play_series",
    "ExternalProcessAgent",
    "PassAgent",
    "RandomAgent",
    "GreedyAgent",
    "FlatMonteCarloAgent",
    "uniform_random_policy",
    "heuristic_score",
    "state_score",
    "squash",
    "make_agent",
    "parse_agent_spec",
    "AgentSpec",
]
