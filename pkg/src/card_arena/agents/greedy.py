"""
One-ply greedy agent over the board heuristic.
"""

from typing import Optional

from ..cards.builtin import builtin_card_set
from ..engine.rules import advance
from ..engine.state import GameState
from ..models.actions import Action
from ..models.agents import HeuristicWeights
from ..models.match import Outcome, Seat
from ..models.observation import Observation
from ..observation.determinize import determinize
from .base import AbstractAgent
from .heuristic import DEFAULT_WEIGHTS, state_score
from .seeding import derive_seed


def outcome_score(
    state: GameState, seat: Seat, weights: HeuristicWeights
) -> float:
    """+inf for a won game, -inf for a lost one, otherwise the heuristic."""
    result = state.result
    if result is not None and result.outcome is Outcome.WIN:
        return float("inf") if result.winner == seat else float("-inf")
    return state_score(state, seat, weights)


class GreedyAgent(AbstractAgent):
    """
    Determinizes the observation once per turn, tries every option on that
    single sample and keeps the best-scoring one. Ties go to the lowest index.
    """

    def __init__(
        self,
        weights: HeuristicWeights = DEFAULT_WEIGHTS,
        seed: int = 0,
        name: Optional[str] = None,
    ) -> None:
        super().__init__(name)
        self.weights = weights
        self.seed = seed

    def get_move(self, observation: Observation) -> Action:
        options = observation.options
        if len(options) == 1:
            return options[0]
        card_set = self.context.card_set if self.context else builtin_card_set()
        turn_seed = derive_seed(self.seed, observation.turn_number, int(observation.viewer))
        base = determinize(observation, card_set, turn_seed)

        best, best_score = options[0], float("-inf")
        for option in options:
            candidate = base.clone()
            advance(candidate, option)
            score = outcome_score(candidate, observation.viewer, self.weights)
            if score > best_score:
                best, best_score = option, score
        return best
