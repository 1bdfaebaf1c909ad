"""
The match driver: queries agents step-wise, enforces the per-turn time
budget, applies actions irreversibly and records results.

Timeouts are cooperative with a hard cap. Elapsed wall-clock time is summed
over all ``get_move`` calls of one turn; once the budget is spent the driver
ends the turn itself. A call still running when the budget runs out is
awaited for at most twice the budget that remained when it started (the
grace slice), after which the turn is ended, the overrun recorded as a
timeout, and the late answer discarded. Agent code is never preempted, so a
timed-out call keeps its worker thread until it returns.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FuturesTimeout
from dataclasses import dataclass
from typing import Optional, Sequence

from ..engine.events import serialize_events
from ..engine.rules import apply_action, concede, new_game
from ..models.actions import Action
from ..models.agents import (
    AgentGameStats,
    AppliedAction,
    GameContext,
    GameRecord,
    IllegalActionPolicy,
)
from ..models.cards import CardSet, DeckSpec
from ..models.match import MatchConfig, Seat
from ..models.stats import GameStats
from ..observation.observe import observe
from .base import AbstractAgent

logger = logging.getLogger(__name__)

HARD_CAP_FACTOR = 2.0


@dataclass
class TurnBudget:
    """Wall-clock budget shared by all ``get_move`` calls of one turn."""

    budget_ms: float
    elapsed_ms: float = 0.0

    @property
    def remaining_ms(self) -> float:
        return max(0.0, self.budget_ms - self.elapsed_ms)

    @property
    def exhausted(self) -> bool:
        return self.elapsed_ms >= self.budget_ms

    @property
    def hard_cap_s(self) -> float:
        return HARD_CAP_FACTOR * self.remaining_ms / 1000.0

    def spend(self, elapsed_ms: float) -> None:
        self.elapsed_ms += elapsed_ms


class _Fault(Exception):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


def _query(
    agent: AbstractAgent,
    executor: ThreadPoolExecutor,
    observation,
    budget: TurnBudget,
    stats: AgentGameStats,
) -> Optional[Action]:
    """One timed ``get_move``; None means the call overran its hard cap."""
    started = time.perf_counter()
    future = executor.submit(agent.get_move, observation)
    try:
        action = future.result(timeout=budget.hard_cap_s)
    except FuturesTimeout:
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        budget.spend(elapsed_ms)
        stats.add_response(elapsed_ms)
        return None
    except Exception as exc:
        raise _Fault(f"get_move raised {type(exc).__name__}: {exc}") from exc
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    budget.spend(elapsed_ms)
    stats.add_response(elapsed_ms)
    return action


def _agent_executor(seat: Seat) -> ThreadPoolExecutor:
    return ThreadPoolExecutor(max_workers=1, thread_name_prefix=f"agent-{seat.name.lower()}")


def play_game(
    agent_a: AbstractAgent,
    agent_b: AbstractAgent,
    deck_a: DeckSpec,
    deck_b: DeckSpec,
    card_set: CardSet,
    config: MatchConfig,
    seed: int,
    *,
    illegal_action_policy: IllegalActionPolicy = IllegalActionPolicy.FORFEIT,
) -> GameRecord:
    """
    Play one full game with ``agent_a`` in the FIRST seat. Agent exceptions
    and (under the forfeit policy) illegal actions end the game as a loss for
    that agent, recorded in ``GameRecord.forfeit`` and ``fault_reason``.
    """
    agents = (agent_a, agent_b)
    decks = (deck_a, deck_b)
    stats = (AgentGameStats(), AgentGameStats())
    applied: list[AppliedAction] = []
    fault_reason: Optional[str] = None
    forfeit: Optional[Seat] = None

    state = new_game(deck_a, deck_b, card_set, config, seed)
    for seat in Seat:
        context = GameContext(
            seat=seat,
            deck=decks[seat],
            opponent_class=decks[seat.other].hero_class,
            card_set=card_set,
            config=config,
            seed=seed,
        )
        try:
            agents[seat].initialize_game(context)
        except Exception as exc:
            if forfeit is None:
                forfeit = seat
                fault_reason = f"initialize_game raised {type(exc).__name__}: {exc}"
                stats[seat].faults += 1

    executors = [_agent_executor(seat) for seat in Seat]
    budget = TurnBudget(config.time_budget_ms)
    budget_turn = state.turn_number
    try:
        while state.result is None and forfeit is None:
            seat = state.active_seat
            agent = agents[seat]
            if state.turn_number != budget_turn:
                budget = TurnBudget(config.time_budget_ms)
                budget_turn = state.turn_number

            forced = False
            if budget.exhausted:
                logger.warning(
                    "%s used up its turn budget; ending turn %d", agent.name, state.turn_number
                )
                stats[seat].timeouts += 1
                action, forced = Action.end_turn(), True
            else:
                observation = observe(state, seat)
                try:
                    action = _query(agent, executors[seat], observation, budget, stats[seat])
                except _Fault as fault:
                    logger.warning("%s faulted: %s", agent.name, fault.reason)
                    stats[seat].faults += 1
                    forfeit, fault_reason = seat, fault.reason
                    break
                if action is None:
                    logger.warning(
                        "%s overran the hard cap on turn %d", agent.name, state.turn_number
                    )
                    stats[seat].timeouts += 1
                    # The late call still holds the worker.
                    executors[seat].shutdown(wait=False, cancel_futures=True)
                    executors[seat] = _agent_executor(seat)
                    action, forced = Action.end_turn(), True
                elif action not in observation.options:
                    stats[seat].illegal_actions += 1
                    logger.warning("%s returned an illegal action: %s", agent.name, action)
                    if illegal_action_policy is IllegalActionPolicy.FORFEIT:
                        stats[seat].faults += 1
                        forfeit, fault_reason = seat, f"illegal action {action}"
                        break
                    action, forced = Action.end_turn(), True

            state = apply_action(state, action)
            applied.append(AppliedAction(seat=seat, action=action, forced=forced))
    finally:
        for executor in executors:
            executor.shutdown(wait=False, cancel_futures=True)

    if forfeit is not None:
        state = concede(state, forfeit)
    result = state.result

    for seat in Seat:
        try:
            agents[seat].finalize_game(result)
        except Exception:
            logger.exception("%s raised in finalize_game", agents[seat].name)

    return GameRecord(
        result=result,
        seed=seed,
        seats=(agent_a.name, agent_b.name),
        decks=(deck_a.name, deck_b.name),
        agent_stats=stats,
        actions=applied,
        forfeit=forfeit,
        fault_reason=fault_reason,
        event_log=serialize_events(state.events),
    )


def play_series(
    n: int,
    agents: Sequence[AbstractAgent],
    decks: Sequence[DeckSpec],
    card_set: CardSet,
    config: MatchConfig,
    base_seed: int,
    *,
    illegal_action_policy: IllegalActionPolicy = IllegalActionPolicy.FORFEIT,
) -> list[GameRecord]:
    """
    One session of ``n`` games with seeds ``base_seed .. base_seed + n - 1``.
    Each agent keeps its own deck; the first seat alternates game by game.
    """
    if n < 1:
        raise ValueError("a series needs at least one game")
    first, second = agents
    deck_first, deck_second = decks
    if first.name == second.name:
        raise ValueError(f"both agents are named {first.name!r}")

    for agent in agents:
        agent.initialize_agent()
    records = []
    try:
        for i in range(n):
            if i % 2 == 0:
                pairing = (first, second, deck_first, deck_second)
            else:
                pairing = (second, first, deck_second, deck_first)
            records.append(
                play_game(
                    *pairing,
                    card_set,
                    config,
                    base_seed + i,
                    illegal_action_policy=illegal_action_policy,
                )
            )
            logger.debug("Game %d/%d: %s", i + 1, n, records[-1].result)
    finally:
        for agent in agents:
            agent.finalize_agent()
    return records


def play_games(
    n: int,
    agents: Sequence[AbstractAgent],
    decks: Sequence[DeckSpec],
    card_set: CardSet,
    config: MatchConfig,
    base_seed: int,
    *,
    illegal_action_policy: IllegalActionPolicy = IllegalActionPolicy.FORFEIT,
) -> GameStats:
    """Play ``n`` seat-alternating games and aggregate their statistics."""
    records = play_series(
        n,
        agents,
        decks,
        card_set,
        config,
        base_seed,
        illegal_action_policy=illegal_action_policy,
    )
    return GameStats.from_records(records)
