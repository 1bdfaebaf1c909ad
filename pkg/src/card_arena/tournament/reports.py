"""
Tournament report formats.

CSV: one row per game in game-index order, columns as ``GameRow`` declares
them; the timing columns come last and can be left out for byte comparison.
JSON: the ranking table, per-agent stats and excluded entrants.
"""

import csv
import io
import json
from pathlib import Path

from ..models.stats import RankingTable
from ..models.track import TIMING_COLUMNS, GameRow, TournamentReport


def csv_columns(include_timing: bool = True) -> list[str]:
    columns = list(GameRow.model_fields)
    if not include_timing:
        columns = [c for c in columns if c not in TIMING_COLUMNS]
    return columns


def games_csv(report: TournamentReport, include_timing: bool = True) -> str:
    columns = csv_columns(include_timing)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in report.games:
        writer.writerow(row.model_dump(include=set(columns)))
    return buffer.getvalue()


def write_games_csv(report: TournamentReport, path: Path, include_timing: bool = True) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(games_csv(report, include_timing), encoding="utf-8")


def summary_json(report: TournamentReport) -> str:
    summary = report.model_dump(mode="json", exclude={"games"})
    summary["game_count"] = len(report.games)
    return json.dumps(summary, indent=2)


def write_summary_json(report: TournamentReport, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(summary_json(report) + "\n", encoding="utf-8")


def format_ranking(ranking: RankingTable) -> str:
    """Fixed-width ranking table for the console."""
    name_width = max([len("agent")] + [len(row.agent) for row in ranking.rows])
    header = (
        f"{'#':>3}  {'agent':<{name_width}}  {'win rate':>8}  {'W':>5} {'D':>5} {'L':>5}"
        f"  {'avg ms':>9}  {'timeouts':>8}  {'faults':>6}"
    )
    lines = [header, "-" * len(header)]
    for row in ranking.rows:
        s = row.stats
        lines.append(
            f"{row.rank:>3}  {row.agent:<{name_width}}  {row.win_rate:>8.3f}"
            f"  {s.wins:>5} {s.draws:>5} {s.losses:>5}"
            f"  {s.avg_response_ms:>9.2f}  {s.timeouts:>8}  {s.faults:>6}"
        )
    return "\n".join(lines)
