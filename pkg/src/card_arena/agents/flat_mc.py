"""
Determinized flat Monte Carlo agent.

Every option is evaluated by rollouts from fresh determinizations: apply the
option, then let ``rollout_policy`` play both seats until the game ends or the
depth cap is reached. Terminal rollouts score 1 / 0.5 / 0; capped ones score
the squashed heuristic. Rollouts run in rounds (one per option per round) so
cutting rounds short under time pressure keeps the options balanced.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np

from ..cards.builtin import builtin_card_set
from ..engine.rules import advance, legal_actions
from ..engine.state import GameState
from ..models.actions import Action
from ..models.agents import HeuristicWeights
from ..models.cards import CardSet
from ..models.match import Outcome, Seat
from ..models.observation import Observation
from ..observation.determinize import determinize
from .base import AbstractAgent
from .heuristic import DEFAULT_WEIGHTS, squash, state_score
from .seeding import derive_seed, observation_digest, seed_stream

logger = logging.getLogger(__name__)

RolloutPolicy = Callable[[GameState, Sequence[Action], np.random.Generator], Action]

DEFAULT_ROLLOUTS = 16
DEFAULT_DEPTH = 30
# Fraction of the remaining turn budget one decision may use
BUDGET_SHARE = 0.5


def uniform_random_policy(
    state: GameState, actions: Sequence[Action], rng: np.random.Generator
) -> Action:
    return actions[int(rng.integers(len(actions)))]


def terminal_value(state: GameState, seat: Seat) -> Optional[float]:
    result = state.result
    if result is None:
        return None
    if result.outcome is Outcome.DRAW:
        return 0.5
    return 1.0 if result.winner == seat else 0.0


class FlatMonteCarloAgent(AbstractAgent):
    def __init__(
        self,
        rollouts: int = DEFAULT_ROLLOUTS,
        depth: int = DEFAULT_DEPTH,
        weights: HeuristicWeights = DEFAULT_WEIGHTS,
        seed: int = 0,
        rollout_policy: RolloutPolicy = uniform_random_policy,
        workers: int = 1,
        name: Optional[str] = None,
    ) -> None:
        if rollouts < 1:
            raise ValueError("flat Monte Carlo needs at least one rollout per option")
        super().__init__(name)
        self.rollouts = rollouts
        self.depth = depth
        self.weights = weights
        self.seed = seed
        self.rollout_policy = rollout_policy
        self.workers = workers
        self._turn: Optional[tuple[int, int]] = None
        self._turn_started = 0.0

    def _deadline(self, observation: Observation) -> float:
        """perf_counter value after which no new round starts."""
        now = time.perf_counter()
        turn = (observation.turn_number, int(observation.viewer))
        if turn != self._turn:
            self._turn, self._turn_started = turn, now
        budget_s = observation.config.time_budget_ms / 1000.0
        remaining = max(0.0, budget_s - (now - self._turn_started))
        return now + BUDGET_SHARE * remaining

    def evaluate(self, observation: Observation) -> list[float]:
        """Mean rollout value per option, in option order."""
        options = observation.options
        card_set = self.context.card_set if self.context else builtin_card_set()
        deadline = self._deadline(observation)
        move_seed = derive_seed(self.seed, observation_digest(observation.to_canonical_json()))

        totals = [0.0] * len(options)
        counts = [0] * len(options)

        def run(job: tuple[int, int]) -> tuple[int, float]:
            index, round_index = job
            value = self._rollout(
                observation, card_set, options[index], move_seed, index, round_index
            )
            return index, value

        executor = ThreadPoolExecutor(self.workers) if self.workers > 1 else None
        try:
            for round_index in range(self.rollouts):
                jobs = [(i, round_index) for i in range(len(options))]
                results = executor.map(run, jobs) if executor else map(run, jobs)
                for index, value in results:
                    totals[index] += value
                    counts[index] += 1
                if time.perf_counter() > deadline and round_index + 1 < self.rollouts:
                    logger.debug(
                        "Budget pressure: %d of %d rounds on turn %d",
                        round_index + 1,
                        self.rollouts,
                        observation.turn_number,
                    )
                    break
        finally:
            if executor:
                executor.shutdown()
        return [t / c for t, c in zip(totals, counts)]

    def get_move(self, observation: Observation) -> Action:
        options = observation.options
        if len(options) == 1:
            return options[0]
        means = self.evaluate(observation)
        best = max(range(len(options)), key=lambda i: (means[i], -i))
        return options[best]

    def _rollout(
        self,
        observation: Observation,
        card_set: CardSet,
        option: Action,
        move_seed: int,
        index: int,
        round_index: int,
    ) -> float:
        seat = observation.viewer
        rng = np.random.default_rng(seed_stream(move_seed, index, round_index))
        state = determinize(observation, card_set, int(rng.integers(2**63)))
        advance(state, option)
        steps = 0
        while state.result is None and steps < self.depth:
            advance(state, self.rollout_policy(state, legal_actions(state), rng))
            steps += 1
        value = terminal_value(state, seat)
        if value is None:
            value = squash(state_score(state, seat, self.weights))
        return value
