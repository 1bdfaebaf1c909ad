"""
Command-line entry point: ``card-arena`` / ``python -m card_arena``.

Exit codes: 0 success, 1 invalid deck or replay mismatch, 2 configuration or
I/O error, 3 agent fault.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .agents.driver import play_game
from .agents.registry import AgentSpec, parse_agent_spec
from .cards.builtin import PREMADE_DECK_FILES, builtin_card_set, builtin_deck, premade_decks
from .cards.loader import read_card_set, read_deck
from .cards.validation import validate_deck
from .config import Settings, load_settings
from .engine.events import events_to_jsonl
from .engine.replay import ReplayFile, read_replay, verify_replay, write_replay
from .errors import AgentFault, ArenaError, GameAlreadyOver, IllegalAction, ReplayMismatch
from .logging_setup import setup_logging
from .models.agents import IllegalActionPolicy
from .models.cards import CardKind, CardSet, DeckSpec, HeroClass
from .models.track import TrackConfig, TrackKind
from .tournament.reports import format_ranking, write_games_csv, write_summary_json
from .tournament.tracks import Entrant, run_split_tournament, run_track

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CONFIG = 2
EXIT_AGENT_FAULT = 3

BUILTIN_PREFIX = "builtin:"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="card-arena",
        description="Collectible card game engine and AI competition harness.",
    )
    parser.add_argument("--config", type=Path, help="TOML settings file (default: config.toml)")
    parser.add_argument("--log-level", help="Log level (default from settings: INFO)")
    parser.add_argument(
        "--card-set",
        type=Path,
        help="Card-set JSON file (default: $CARD_ARENA_CARD_SET_PATH or the bundled set)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    play = commands.add_parser("play", help="Play one game between two agents")
    play.add_argument("--agent-a", required=True, help="First-seat agent spec, e.g. random")
    play.add_argument("--agent-b", required=True, help="Second-seat agent spec")
    play.add_argument(
        "--deck-a", required=True, help="Deck file, or builtin:<name> for a bundled deck"
    )
    play.add_argument("--deck-b", required=True, help="Deck file or builtin:<name>")
    play.add_argument("--seed", type=int, default=0, help="Game seed (default: 0)")
    _add_match_flags(play)
    play.add_argument("--log-out", type=Path, help="Write the JSON-lines event log here")
    play.add_argument("--replay-out", type=Path, help="Write a replay file here")

    tournament = commands.add_parser("tournament", help="Run a competition track")
    tournament.add_argument(
        "--track", choices=[k.value for k in TrackKind], default=TrackKind.PREMADE_DECK.value
    )
    tournament.add_argument(
        "--agent",
        action="append",
        required=True,
        help="Agent spec [name=]kind[:params]; repeat for each entrant",
    )
    tournament.add_argument(
        "--deck",
        action="append",
        default=[],
        help="name=PATH deck of an entrant (user track); repeat per entrant",
    )
    tournament.add_argument("--repeats", type=int, default=1, help="Games per deck pair")
    tournament.add_argument("--seed", type=int, default=0, help="Base seed (default: 0)")
    tournament.add_argument("--parallelism", type=int, help="Worker threads (default: 1)")
    tournament.add_argument(
        "--csv", type=Path, help="Per-game CSV report path (default: under reports/)"
    )
    tournament.add_argument("--json", type=Path, help="JSON summary path (default: under reports/)")
    tournament.add_argument(
        "--no-timing", action="store_true", help="Leave timing columns out of the CSV"
    )
    tournament.add_argument(
        "--max-group-size", type=int, help="Split into sub-tournaments of at most this size"
    )
    tournament.add_argument("--finalists", type=int, help="Finalists in a split tournament")
    tournament.add_argument("--shuffle-seed", type=int, default=0, help="Group shuffle seed")
    _add_match_flags(tournament)

    validate = commands.add_parser("validate-deck", help="Check a deck against the rules")
    validate.add_argument("deck", help="Deck file or builtin:<name>")

    list_cards = commands.add_parser("list-cards", help="Print the card set")
    list_cards.add_argument("--class", dest="hero_class", choices=[c.value for c in HeroClass])
    list_cards.add_argument("--kind", choices=[k.value for k in CardKind])

    replay = commands.add_parser("replay", help="Re-execute and verify a replay file")
    replay.add_argument("replay", type=Path)
    replay.add_argument("--quiet", action="store_true", help="Do not print the event log")
    return parser


def _add_match_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--turn-limit", type=int, help="Turns before a draw (default: 50)")
    parser.add_argument("--budget-ms", type=int, help="Per-turn budget (default: 60000)")
    parser.add_argument(
        "--policy",
        choices=[p.value for p in IllegalActionPolicy],
        help="Consequence of an illegal action (default: forfeit)",
    )


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {}
    if getattr(args, "turn_limit", None) is not None:
        overrides["turn_limit"] = args.turn_limit
    if getattr(args, "budget_ms", None) is not None:
        overrides["time_budget_ms"] = args.budget_ms
    if getattr(args, "policy", None) is not None:
        overrides["illegal_action_policy"] = args.policy
    if getattr(args, "parallelism", None) is not None:
        overrides["parallelism"] = args.parallelism
    if args.card_set is not None:
        overrides["card_set_path"] = args.card_set
    if args.log_level is not None:
        overrides["log_level"] = args.log_level
    return load_settings(args.config, **overrides)


def _card_set(settings: Settings) -> CardSet:
    if settings.card_set_path is None:
        return builtin_card_set()
    return read_card_set(settings.card_set_path)


def resolve_deck(text: str) -> DeckSpec:
    """A deck file path, or ``builtin:<name>`` for a bundled deck."""
    if text.startswith(BUILTIN_PREFIX):
        name = text[len(BUILTIN_PREFIX) :]
        file_name = name if name.endswith(".json") else f"{name}.json"
        if file_name not in {f for f, _ in PREMADE_DECK_FILES}:
            raise FileNotFoundError(f"no bundled deck named {name!r}")
        return builtin_deck(file_name)
    return read_deck(Path(text))


def _unique_specs(texts: Sequence[str]) -> list[AgentSpec]:
    specs: list[AgentSpec] = []
    seen: dict[str, int] = {}
    for text in texts:
        spec = parse_agent_spec(text)
        count = seen.get(spec.name, 0) + 1
        seen[spec.name] = count
        if count > 1:
            spec = AgentSpec(
                name=f"{spec.name}-{count}",
                kind=spec.kind,
                params=spec.params,
                command=spec.command,
            )
        specs.append(spec)
    return specs


def cmd_play(args: argparse.Namespace, settings: Settings) -> int:
    card_set = _card_set(settings)
    deck_a, deck_b = resolve_deck(args.deck_a), resolve_deck(args.deck_b)
    spec_a, spec_b = _unique_specs([args.agent_a, args.agent_b])
    agent_a, agent_b = spec_a.build(settings), spec_b.build(settings)
    config = settings.match_config()

    for agent in (agent_a, agent_b):
        agent.initialize_agent()
    try:
        record = play_game(
            agent_a,
            agent_b,
            deck_a,
            deck_b,
            card_set,
            config,
            args.seed,
            illegal_action_policy=settings.illegal_action_policy,
        )
    finally:
        for agent in (agent_a, agent_b):
            agent.finalize_agent()

    if args.log_out:
        args.log_out.parent.mkdir(parents=True, exist_ok=True)
        log_text = "".join(line + "\n" for line in record.event_log)
        args.log_out.write_text(log_text, encoding="utf-8")
    if args.replay_out:
        replay = ReplayFile.from_record(record, deck_a, deck_b, card_set, config)
        write_replay(replay, args.replay_out)

    print(f"Result: {record.result}")
    if record.result.winner is not None:
        print(f"Winner: {record.seats[record.result.winner]}")
    for seat, name in enumerate(record.seats):
        stats = record.agent_stats[seat]
        print(
            f"  {name} ({record.decks[seat]}): {stats.moves_made} moves, "
            f"{stats.total_response_ms:.1f} ms total, {stats.timeouts} timeouts"
        )
    if record.fault_reason is not None:
        print(f"Agent fault: {record.fault_reason}", file=sys.stderr)
        return EXIT_AGENT_FAULT
    return EXIT_OK


def cmd_tournament(args: argparse.Namespace, settings: Settings) -> int:
    card_set = _card_set(settings)
    specs = _unique_specs(args.agent)
    entrants = [
        Entrant(name=spec.name, factory=lambda spec=spec: spec.build(settings)) for spec in specs
    ]
    kind = TrackKind(args.track)
    user_decks = {}
    for item in args.deck:
        name, sep, path = item.partition("=")
        if not sep:
            raise ValueError(f"--deck expects name=PATH, got {item!r}")
        user_decks[name] = resolve_deck(path)
    track = TrackConfig(
        kind=kind,
        premade_decks=premade_decks() if kind is TrackKind.PREMADE_DECK else (),
        user_decks=user_decks,
        repeats=args.repeats,
        match=settings.match_config(),
        base_seed=args.seed,
        illegal_action_policy=settings.illegal_action_policy,
    )

    if args.max_group_size:
        split = run_split_tournament(
            entrants,
            track,
            card_set,
            args.max_group_size,
            finalist_count=args.finalists,
            shuffle_seed=args.shuffle_seed,
            parallelism=settings.parallelism,
        )
        for index, group in enumerate(split.groups):
            print(f"Group {index + 1}: {', '.join(split.plan.groups[index])}")
            print(format_ranking(group.ranking))
            print()
        report = split.final or split.groups[0]
        if split.final:
            print("Final")
    else:
        report = run_track(entrants, track, card_set, settings.parallelism)

    print(format_ranking(report.ranking))
    for name, reason in report.excluded.items():
        print(f"Excluded {name}: {reason}")
    csv_path, json_path = args.csv, args.json
    if csv_path is None or json_path is None:
        settings.reports_dir.mkdir(parents=True, exist_ok=True)
        stem = settings.reports_dir / f"tournament-{kind}-seed{args.seed}"
        csv_path = csv_path or stem.with_suffix(".csv")
        json_path = json_path or stem.with_suffix(".json")
    write_games_csv(report, csv_path, include_timing=not args.no_timing)
    write_summary_json(report, json_path)
    logger.info("Wrote %s and %s", csv_path, json_path)
    return EXIT_OK


def cmd_validate_deck(args: argparse.Namespace, settings: Settings) -> int:
    report = validate_deck(resolve_deck(args.deck), _card_set(settings))
    print(report)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_list_cards(args: argparse.Namespace, settings: Settings) -> int:
    card_set = _card_set(settings)
    for card in card_set.definitions():
        if args.hero_class and card.hero_class != args.hero_class:
            continue
        if args.kind and card.kind != args.kind:
            continue
        stats = ""
        if card.attack is not None:
            stats = f" {card.attack}/{card.health_or_durability}"
        tribe = f" [{card.tribe}]" if card.tribe else ""
        token = " (token)" if card.uncollectible else ""
        print(
            f"{card.id:<22} {card.mana_cost:>2}  {card.hero_class:<8} {card.kind:<7}"
            f"{stats}{tribe}{token}  {card.name}"
        )
    return EXIT_OK


def cmd_replay(args: argparse.Namespace, settings: Settings) -> int:
    replay = read_replay(args.replay)
    try:
        state = verify_replay(replay, _card_set(settings))
    except (ReplayMismatch, IllegalAction, GameAlreadyOver) as exc:
        print(f"Replay mismatch: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not args.quiet:
        sys.stdout.write(events_to_jsonl(state.events))
    print(f"verified: {state.result}")
    return EXIT_OK


COMMANDS = {
    "play": cmd_play,
    "tournament": cmd_tournament,
    "validate-deck": cmd_validate_deck,
    "list-cards": cmd_list_cards,
    "replay": cmd_replay,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings(args)
        log_file = settings.logs_dir / settings.log_file if settings.log_file else None
        setup_logging(settings.log_level, log_file)
        return COMMANDS[args.command](args, settings)
    except AgentFault as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AGENT_FAULT
    except (ArenaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
