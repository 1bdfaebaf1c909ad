"""
The linear board heuristic shared by the greedy and flat Monte Carlo agents.

Features, from the viewer's side: own hero health, opponent hero health,
summed attack and health of each board (auras included) and own hand size.
"""

import math

from ..engine.effects import effective_attack, effective_health
from ..engine.state import GameState
from ..models.agents import HeuristicWeights
from ..models.match import Seat
from ..models.observation import Observation

DEFAULT_WEIGHTS = HeuristicWeights()

# Heuristic points per unit of the logistic squash used for leaf values
SQUASH_SCALE = 10.0


def _dot(weights: HeuristicWeights, features: tuple[float, ...]) -> float:
    return sum(w * f for w, f in zip(weights.as_vector(), features))


def observation_features(obs: Observation) -> tuple[float, ...]:
    own, opp = obs.own, obs.opponent_visible
    return (
        own.hero_health,
        opp.hero_health,
        sum(m.attack for m in own.board),
        sum(m.health for m in own.board),
        sum(m.attack for m in opp.board),
        sum(m.health for m in opp.board),
        len(own.hand),
    )


def state_features(state: GameState, seat: Seat) -> tuple[float, ...]:
    """Same features as ``observation_features(observe(state, seat))``, without masking."""
    own, opp = state.players[seat], state.players[seat.other]
    return (
        own.hero_health,
        opp.hero_health,
        sum(effective_attack(state, seat, m) for m in own.board),
        sum(effective_health(state, seat, m) for m in own.board),
        sum(effective_attack(state, seat.other, m) for m in opp.board),
        sum(effective_health(state, seat.other, m) for m in opp.board),
        len(own.hand),
    )


def heuristic_score(obs: Observation, weights: HeuristicWeights = DEFAULT_WEIGHTS) -> float:
    return _dot(weights, observation_features(obs))


def state_score(
    state: GameState, seat: Seat, weights: HeuristicWeights = DEFAULT_WEIGHTS
) -> float:
    return _dot(weights, state_features(state, seat))


def squash(score: float, scale: float = SQUASH_SCALE) -> float:
    """Map a heuristic score into (0, 1), 0.5 at an even position."""
    return 1.0 / (1.0 + math.exp(-max(-700.0, min(700.0, score / scale))))
