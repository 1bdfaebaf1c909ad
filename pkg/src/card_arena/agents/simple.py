"""
Trivial agents: the pass-only reference and the uniform-random baseline.
"""

from typing import Optional

import numpy as np

from ..models.actions import Action
from ..models.agents import GameContext
from ..models.observation import Observation
from .base import AbstractAgent
from .seeding import seed_stream


class PassAgent(AbstractAgent):
    """Ends every turn immediately."""

    def get_move(self, observation: Observation) -> Action:
        return Action.end_turn()


class RandomAgent(AbstractAgent):
    """Picks uniformly among the options, seeded per game."""

    def __init__(self, seed: int = 0, name: Optional[str] = None) -> None:
        super().__init__(name)
        self.seed = seed
        self._rng = np.random.default_rng(seed_stream(seed))

    def initialize_game(self, context: GameContext) -> None:
        super().initialize_game(context)
        self._rng = np.random.default_rng(seed_stream(self.seed, context.seed, int(context.seat)))

    def get_move(self, observation: Observation) -> Action:
        options = observation.options
        return options[int(self._rng.integers(len(options)))]
