"""
The agent contract.

A session is bracketed by ``initialize_agent``/``finalize_agent``; every game
inside it by ``initialize_game``/``finalize_game``. ``get_move`` is only
called in between, while the agent's seat is active, and must return one of
``observation.options``.
"""

from abc import ABC, abstractmethod
from typing import Optional

from ..models.actions import Action
from ..models.agents import GameContext
from ..models.match import GameResult
from ..models.observation import Observation


class AbstractAgent(ABC):
    """Base class for every agent, builtin or external."""

    def __init__(self, name: Optional[str] = None) -> None:
        self.name = name or type(self).__name__
        self.context: Optional[GameContext] = None

    def initialize_agent(self) -> None:
        """Load whatever the agent keeps across games."""

    def initialize_game(self, context: GameContext) -> None:
        self.context = context

    @abstractmethod
    def get_move(self, observation: Observation) -> Action:
        """Choose the next action from ``observation.options``."""

    def finalize_game(self, result: GameResult) -> None:
        self.context = None

    def finalize_agent(self) -> None:
        """Store whatever the agent keeps across games."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
