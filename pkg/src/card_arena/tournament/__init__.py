"""
Round-robin tournaments for the premade-deck and user-created-deck tracks.
"""

from .reports import format_ranking, games_csv, summary_json, write_games_csv, write_summary_json
from .schedule import (
    derive_game_seed,
    promote_finalists,
    schedule_round_robin,
    split_sub_tournaments,
)
from .tracks import (
    Entrant,
    ScheduledGame,
    SplitTournamentResult,
    execute_games,
    plan_premade_games,
    plan_user_deck_games,
    run_premade_track,
    run_split_tournament,
    run_track,
    run_user_deck_track,
)

__all__ = [
    "schedule_round_robin",
    "derive_game_seed",
    "split_sub_tournaments",
    "promote_finalists",
    "Entrant",
    "ScheduledGame",
    "SplitTournamentResult",
    "plan_premade_games",
    "plan_user_deck_games",
    "execute_games",
    "run_premade_track",
    "run_user_deck_track",
    "run_track",
    "run_split_tournament",
    "games_csv",
    "write_games_csv",
    "summary_json",
    "write_summary_json",
    "format_ranking",
]
