"""
Integration tests for the command-line interface.
"""

import csv
import json

import pytest

from card_arena.cards import serialize_deck
from card_arena.cli import EXIT_AGENT_FAULT, EXIT_CONFIG, EXIT_INVALID, EXIT_OK, main, resolve_deck
from card_arena.models import DeckSpec


@pytest.fixture(autouse=True)
def reports_dir(tmp_path, monkeypatch):
    path = tmp_path / "reports"
    monkeypatch.setenv("CARD_ARENA_REPORTS_PATH", str(path))
    return path


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestPlay:
    """Test the play command."""

    def test_pass_game(self, capsys):
        """Test a short game between builtin agents."""
        code, out, _ = _run(
            capsys,
            "play",
            "--agent-a", "pass",
            "--agent-b", "random:seed=1",
            "--deck-a", "builtin:mage_tempo",
            "--deck-b", "builtin:priest_control",
            "--turn-limit", "4",
        )
        assert code == EXIT_OK
        assert "Result:" in out
        assert "pass (Mage Tempo)" in out

    def test_logs_and_replay(self, capsys, tmp_path):
        """Test writing an event log and a replay, then verifying the replay."""
        log_path = tmp_path / "events.jsonl"
        replay_path = tmp_path / "replay.json"
        code, _, _ = _run(
            capsys,
            "play",
            "--agent-a", "greedy",
            "--agent-b", "random:seed=4",
            "--deck-a", "builtin:warrior_aggro",
            "--deck-b", "builtin:paladin_murlocs",
            "--seed", "3",
            "--turn-limit", "8",
            "--log-out", str(log_path),
            "--replay-out", str(replay_path),
        )
        assert code == EXIT_OK
        lines = log_path.read_text().splitlines()
        assert json.loads(lines[0])["ordinal"] == 0
        code, out, _ = _run(capsys, "replay", str(replay_path))
        assert code == EXIT_OK
        assert out.splitlines()[:-1] == lines
        assert out.splitlines()[-1].startswith("verified:")

    def test_tampered_replay(self, capsys, tmp_path):
        """Test that a replay with a changed seed fails verification."""
        replay_path = tmp_path / "replay.json"
        _run(
            capsys,
            "play",
            "--agent-a", "random:seed=1",
            "--agent-b", "random:seed=2",
            "--deck-a", "builtin:mage_tempo",
            "--deck-b", "builtin:mage_tempo",
            "--turn-limit", "6",
            "--replay-out", str(replay_path),
        )
        data = json.loads(replay_path.read_text())
        data["seed"] += 1
        replay_path.write_text(json.dumps(data))
        code, _, err = _run(capsys, "replay", "--quiet", str(replay_path))
        assert code == EXIT_INVALID
        assert "mismatch" in err

    def test_agent_fault_exit_code(self, capsys):
        """Test exit code 3 when an agent process dies."""
        code, _, err = _run(
            capsys,
            "play",
            "--agent-a", "external:false",
            "--agent-b", "pass",
            "--deck-a", "builtin:mage_tempo",
            "--deck-b", "builtin:mage_tempo",
            "--turn-limit", "2",
        )
        assert code == EXIT_AGENT_FAULT
        assert "fault" in err

    def test_unknown_agent(self, capsys):
        """Test that a bad agent spec is a configuration error."""
        code, _, err = _run(
            capsys,
            "play",
            "--agent-a", "wizard",
            "--agent-b", "pass",
            "--deck-a", "builtin:mage_tempo",
            "--deck-b", "builtin:mage_tempo",
        )
        assert code == EXIT_CONFIG
        assert "wizard" in err

    def test_missing_config_file(self, capsys, tmp_path):
        """Test that a --config path that does not exist is a configuration error."""
        code, _, err = _run(capsys, "--config", str(tmp_path / "missing.toml"), "list-cards")
        assert code == EXIT_CONFIG
        assert "missing.toml" in err

    def test_unknown_flag(self, capsys):
        """Test that unknown flags are rejected by the parser."""
        with pytest.raises(SystemExit) as exc_info:
            main(["play", "--frobnicate"])
        assert exc_info.value.code == 2


class TestTournament:
    """Test the tournament command."""

    def test_premade_reports(self, capsys, tmp_path):
        """Test a premade track writing both reports."""
        csv_path = tmp_path / "games.csv"
        json_path = tmp_path / "summary.json"
        code, out, _ = _run(
            capsys,
            "tournament",
            "--agent", "pass",
            "--agent", "pass",
            "--turn-limit", "2",
            "--csv", str(csv_path),
            "--json", str(json_path),
            "--no-timing",
        )
        assert code == EXIT_OK
        rows = list(csv.DictReader(csv_path.open()))
        assert len(rows) == 36
        assert "first_response_ms" not in rows[0]
        assert {rows[0]["first_agent"], rows[0]["second_agent"]} == {"pass", "pass-2"}
        assert json.loads(json_path.read_text())["game_count"] == 36
        assert "pass-2" in out

    def test_default_report_paths(self, capsys, reports_dir):
        """Test that both reports land in the reports directory without --csv or --json."""
        code, _, _ = _run(
            capsys,
            "tournament",
            "--agent", "pass",
            "--agent", "pass",
            "--turn-limit", "2",
            "--seed", "4",
        )
        assert code == EXIT_OK
        csv_path = reports_dir / "tournament-premade-seed4.csv"
        json_path = reports_dir / "tournament-premade-seed4.json"
        assert len(list(csv.DictReader(csv_path.open()))) == 36
        assert "first_response_ms" in csv_path.read_text().splitlines()[0]
        assert json.loads(json_path.read_text())["game_count"] == 36

    def test_user_track(self, capsys, tmp_path, mage_deck):
        """Test the user-created-deck track with deck files."""
        deck_path = tmp_path / "mine.json"
        deck_path.write_text(serialize_deck(mage_deck))
        code, out, _ = _run(
            capsys,
            "tournament",
            "--track", "user",
            "--agent", "a=pass",
            "--agent", "b=random:seed=5",
            "--deck", f"a={deck_path}",
            "--deck", "b=builtin:priest_control",
            "--repeats", "2",
            "--turn-limit", "4",
        )
        assert code == EXIT_OK
        assert out.splitlines()[0].split()[:2] == ["#", "agent"]

    def test_split(self, capsys):
        """Test sub-tournament output."""
        code, out, _ = _run(
            capsys,
            "tournament",
            "--track", "user",
            "--agent", "pass",
            "--agent", "pass",
            "--agent", "pass",
            "--agent", "pass",
            "--deck", "pass=builtin:mage_tempo",
            "--deck", "pass-2=builtin:mage_tempo",
            "--deck", "pass-3=builtin:mage_tempo",
            "--deck", "pass-4=builtin:mage_tempo",
            "--max-group-size", "2",
            "--turn-limit", "2",
        )
        assert code == EXIT_OK
        assert "Group 2:" in out
        assert "Final" in out


class TestDeckCommands:
    """Test deck validation and card listing."""

    def test_valid_builtin(self, capsys):
        """Test a bundled deck."""
        code, out, _ = _run(capsys, "validate-deck", "builtin:mage_control")
        assert code == EXIT_OK
        assert out.strip() == "OK"

    def test_invalid_file(self, capsys, tmp_path):
        """Test an illegal deck file."""
        deck = DeckSpec.model_validate(
            {"name": "Bad", "class": "Mage", "cards": ["iron_axe"] * 30}
        )
        path = tmp_path / "bad.json"
        path.write_text(serialize_deck(deck))
        code, out, _ = _run(capsys, "validate-deck", str(path))
        assert code == EXIT_INVALID
        assert "ClassMismatch(iron_axe: Warrior)" in out
        assert "CopyLimitExceeded(iron_axe x30)" in out

    def test_missing_file(self, capsys, tmp_path):
        """Test that a missing deck file is an I/O error."""
        code, _, _ = _run(capsys, "validate-deck", str(tmp_path / "nope.json"))
        assert code == EXIT_CONFIG

    def test_unknown_builtin(self):
        """Test that unknown bundled deck names are reported."""
        with pytest.raises(FileNotFoundError):
            resolve_deck("builtin:druid_ramp")

    def test_list_cards_filters(self, capsys):
        """Test class and kind filters."""
        code, out, _ = _run(capsys, "list-cards", "--class", "Mage", "--kind", "Secret")
        assert code == EXIT_OK
        ids = [line.split()[0] for line in out.splitlines()]
        assert ids == ["mirror_trap", "counter_sigil"]

    def test_list_tokens(self, capsys):
        """Test that tokens are marked."""
        _, out, _ = _run(capsys, "list-cards", "--class", "Neutral")
        assert "squire_token" in out
        assert "(token)" in out
