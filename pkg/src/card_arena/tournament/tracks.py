"""
The two competition tracks and the split (group stage + final) tournament.

Games are planned up front, each with a seed derived from its (pairing,
deck pair, repeat) coordinates, then executed sequentially or in a thread
pool. Results are ordered by game index before aggregation, so reports do
not depend on the degree of parallelism.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from ..agents.base import AbstractAgent
from ..agents.driver import play_game
from ..cards.validation import validate_deck
from ..errors import InvalidTrackConfig
from ..models.agents import GameRecord
from ..models.cards import CardSet, DeckSpec
from ..models.stats import AgentStats, GameStats, RankingTable
from ..models.track import (
    GameRow,
    SubTournamentPlan,
    TournamentReport,
    TrackConfig,
    TrackKind,
)
from .schedule import (
    derive_game_seed,
    promote_finalists,
    schedule_round_robin,
    split_sub_tournaments,
)

logger = logging.getLogger(__name__)

AgentFactory = Callable[[], AbstractAgent]


@dataclass(frozen=True)
class Entrant:
    """A named participant; ``deck`` is only used by the user-created-deck track."""

    name: str
    factory: AgentFactory
    deck: Optional[DeckSpec] = None

    def create(self) -> AbstractAgent:
        agent = self.factory()
        agent.name = self.name
        return agent


@dataclass(frozen=True)
class ScheduledGame:
    game_index: int
    pairing_index: int
    deck_pair_index: int
    repeat_index: int
    first: str
    second: str
    first_deck: DeckSpec
    second_deck: DeckSpec
    seed: int


def _pairing_games(
    start_index: int,
    pairing_index: int,
    pair: tuple[str, str],
    deck_pairs: Sequence[tuple[DeckSpec, DeckSpec]],
    track: TrackConfig,
) -> list[ScheduledGame]:
    """
    All games of one pairing. ``deck_pairs`` holds (x's deck, y's deck); the
    first seat alternates with the pairing's running game count.
    """
    x, y = pair
    games = []
    for deck_pair_index, (deck_x, deck_y) in enumerate(deck_pairs):
        for repeat_index in range(track.repeats):
            count = deck_pair_index * track.repeats + repeat_index
            if count % 2 == 0:
                seats = (x, y, deck_x, deck_y)
            else:
                seats = (y, x, deck_y, deck_x)
            games.append(
                ScheduledGame(
                    game_index=start_index + len(games),
                    pairing_index=pairing_index,
                    deck_pair_index=deck_pair_index,
                    repeat_index=repeat_index,
                    first=seats[0],
                    second=seats[1],
                    first_deck=seats[2],
                    second_deck=seats[3],
                    seed=derive_game_seed(
                        track.base_seed, pairing_index, deck_pair_index, repeat_index
                    ),
                )
            )
    return games


def plan_premade_games(names: Sequence[str], track: TrackConfig) -> list[ScheduledGame]:
    """Every pairing plays all 36 ordered deck assignments, mirrors included."""
    if track.kind is not TrackKind.PREMADE_DECK:
        raise InvalidTrackConfig(f"expected a premade track, got {track.kind}")
    decks = [premade.deck for premade in track.premade_decks]
    deck_pairs = [(a, b) for a in decks for b in decks]
    games: list[ScheduledGame] = []
    for pairing_index, pair in enumerate(schedule_round_robin(names)):
        games.extend(_pairing_games(len(games), pairing_index, pair, deck_pairs, track))
    return games


def plan_user_deck_games(
    decks: dict[str, DeckSpec], track: TrackConfig
) -> list[ScheduledGame]:
    """Every pairing plays ``repeats`` games, each agent with its own deck."""
    games: list[ScheduledGame] = []
    for pairing_index, (x, y) in enumerate(schedule_round_robin(list(decks))):
        games.extend(
            _pairing_games(len(games), pairing_index, (x, y), [(decks[x], decks[y])], track)
        )
    return games


def _play_scheduled(
    game: ScheduledGame,
    agents: dict[str, AbstractAgent],
    card_set: CardSet,
    track: TrackConfig,
) -> GameRecord:
    return play_game(
        agents[game.first],
        agents[game.second],
        game.first_deck,
        game.second_deck,
        card_set,
        track.match,
        game.seed,
        illegal_action_policy=track.illegal_action_policy,
    )


def _run_isolated(
    game: ScheduledGame,
    entrants: dict[str, Entrant],
    card_set: CardSet,
    track: TrackConfig,
) -> GameRecord:
    """One game with fresh agents, for the worker pool."""
    agents = {name: entrants[name].create() for name in (game.first, game.second)}
    for agent in agents.values():
        agent.initialize_agent()
    try:
        return _play_scheduled(game, agents, card_set, track)
    finally:
        for agent in agents.values():
            agent.finalize_agent()


def execute_games(
    games: Sequence[ScheduledGame],
    entrants: Sequence[Entrant],
    card_set: CardSet,
    track: TrackConfig,
    parallelism: int = 1,
) -> list[GameRecord]:
    """Play the schedule; records come back in game-index order."""
    by_name = {e.name: e for e in entrants}
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism, thread_name_prefix="game") as pool:
            records = list(
                pool.map(lambda g: _run_isolated(g, by_name, card_set, track), games)
            )
        logger.info("Played %d games on %d workers", len(records), parallelism)
        return records

    agents = {e.name: e.create() for e in entrants}
    for agent in agents.values():
        agent.initialize_agent()
    records = []
    try:
        for game in games:
            records.append(_play_scheduled(game, agents, card_set, track))
            if len(records) % 50 == 0:
                logger.info("Played %d/%d games", len(records), len(games))
    finally:
        for agent in agents.values():
            agent.finalize_agent()
    return records


def _rows(games: Sequence[ScheduledGame], records: Sequence[GameRecord]) -> list[GameRow]:
    rows = []
    for game, record in zip(games, records):
        result = record.result
        rows.append(
            GameRow(
                game_index=game.game_index,
                pairing_index=game.pairing_index,
                deck_pair_index=game.deck_pair_index,
                repeat_index=game.repeat_index,
                first_agent=game.first,
                second_agent=game.second,
                first_deck=game.first_deck.name,
                second_deck=game.second_deck.name,
                seed=game.seed,
                outcome=str(result.outcome),
                winner="" if result.winner is None else record.seats[result.winner],
                reason=str(result.reason),
                turns=result.final_turn,
                first_response_ms=round(record.agent_stats[0].total_response_ms, 3),
                second_response_ms=round(record.agent_stats[1].total_response_ms, 3),
            )
        )
    return rows


def _report(
    kind: TrackKind,
    games: Sequence[ScheduledGame],
    records: Sequence[GameRecord],
    excluded: Optional[dict[str, str]] = None,
) -> TournamentReport:
    stats = GameStats.from_records(list(records))
    stats = GameStats(agents=dict(sorted(stats.agents.items())))
    return TournamentReport(
        kind=kind,
        ranking=RankingTable.from_stats(stats),
        stats=stats,
        games=_rows(games, records),
        excluded=excluded or {},
    )


def run_premade_track(
    entrants: Sequence[Entrant],
    track: TrackConfig,
    card_set: CardSet,
    parallelism: int = 1,
) -> TournamentReport:
    if track.kind is not TrackKind.PREMADE_DECK:
        raise InvalidTrackConfig(f"expected a premade track, got {track.kind}")
    for premade in track.premade_decks:
        report = validate_deck(premade.deck, card_set)
        if not report.ok:
            raise InvalidTrackConfig(f"premade deck {report}")
    games = plan_premade_games([e.name for e in entrants], track)
    logger.info("Premade track: %d agents, %d games", len(entrants), len(games))
    records = execute_games(games, entrants, card_set, track, parallelism)
    return _report(TrackKind.PREMADE_DECK, games, records)


def run_user_deck_track(
    entrants: Sequence[Entrant],
    track: TrackConfig,
    card_set: CardSet,
    parallelism: int = 1,
) -> TournamentReport:
    """
    Entrants whose deck is missing or fails validation are excluded, with the
    reason recorded in the report; the rest play a round robin.
    """
    if track.kind is not TrackKind.USER_CREATED_DECK:
        raise InvalidTrackConfig(f"expected a user-created-deck track, got {track.kind}")
    decks: dict[str, DeckSpec] = {}
    excluded: dict[str, str] = {}
    for entrant in entrants:
        deck = entrant.deck or track.user_decks.get(entrant.name)
        if deck is None:
            excluded[entrant.name] = "no deck submitted"
            continue
        report = validate_deck(deck, card_set)
        if not report.ok:
            excluded[entrant.name] = "; ".join(str(v) for v in report.violations)
            logger.warning("Excluding %s: %s", entrant.name, report)
            continue
        decks[entrant.name] = deck
    games = plan_user_deck_games(decks, track)
    logger.info("User-deck track: %d agents, %d games", len(decks), len(games))
    records = execute_games(
        games, [e for e in entrants if e.name in decks], card_set, track, parallelism
    )
    return _report(TrackKind.USER_CREATED_DECK, games, records, excluded)


def run_track(
    entrants: Sequence[Entrant],
    track: TrackConfig,
    card_set: CardSet,
    parallelism: int = 1,
) -> TournamentReport:
    if track.kind is TrackKind.PREMADE_DECK:
        return run_premade_track(entrants, track, card_set, parallelism)
    return run_user_deck_track(entrants, track, card_set, parallelism)


def _bye(name: str, kind: TrackKind) -> TournamentReport:
    """A one-agent group: its member advances without playing."""
    stats = GameStats(agents={name: AgentStats()})
    return TournamentReport(kind=kind, ranking=RankingTable.from_stats(stats), stats=stats)


@dataclass(frozen=True)
class SplitTournamentResult:
    plan: SubTournamentPlan
    groups: tuple[TournamentReport, ...]
    final: Optional[TournamentReport]

    @property
    def ranking(self) -> RankingTable:
        return self.final.ranking if self.final else self.groups[0].ranking


def run_split_tournament(
    entrants: Sequence[Entrant],
    track: TrackConfig,
    card_set: CardSet,
    max_group_size: int,
    finalist_count: Optional[int] = None,
    shuffle_seed: int = 0,
    parallelism: int = 1,
) -> SplitTournamentResult:
    """Group round robins, then a final round robin among the promoted agents."""
    by_name = {e.name: e for e in entrants}
    plan = split_sub_tournaments(list(by_name), max_group_size, finalist_count, shuffle_seed)
    groups = tuple(
        run_track([by_name[name] for name in group], track, card_set, parallelism)
        if len(group) > 1
        else _bye(group[0], track.kind)
        for group in plan.groups
    )
    final = None
    if plan.needs_final:
        finalists = promote_finalists(plan, [g.ranking for g in groups])
        logger.info("Final round robin: %s", ", ".join(finalists))
        final = run_track([by_name[name] for name in finalists], track, card_set, parallelism)
    return SplitTournamentResult(plan=plan, groups=groups, final=final)
