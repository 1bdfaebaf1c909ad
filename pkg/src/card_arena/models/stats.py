"""
Tournament accounting: per-agent statistics, aggregated game stats and the
win-rate ranking.
"""

from pydantic import Field, computed_field

from .agents import GameRecord
from .base import ArenaModel
from .match import SeatResult


class AgentStats(ArenaModel):
    """Accumulated results of one agent over many games."""

    wins: int = 0
    draws: int = 0
    losses: int = 0
    games: int = 0
    moves: int = 0
    total_response_ms: float = 0.0
    timeouts: int = 0
    faults: int = 0

    @computed_field
    @property
    def avg_response_ms(self) -> float:
        return self.total_response_ms / self.moves if self.moves else 0.0

    @computed_field
    @property
    def win_rate(self) -> float:
        """Draws count half a win."""
        return (self.wins + 0.5 * self.draws) / self.games if self.games else 0.0

    def record(
        self, result: SeatResult, moves: int, response_ms: float, timeouts: int, faults: int
    ) -> None:
        self.games += 1
        match result:
            case SeatResult.WIN:
                self.wins += 1
            case SeatResult.DRAW:
                self.draws += 1
            case SeatResult.LOSS:
                self.losses += 1
        self.moves += moves
        self.total_response_ms += response_ms
        self.timeouts += timeouts
        self.faults += faults

    def merged(self, other: "AgentStats") -> "AgentStats":
        return AgentStats(
            wins=self.wins + other.wins,
            draws=self.draws + other.draws,
            losses=self.losses + other.losses,
            games=self.games + other.games,
            moves=self.moves + other.moves,
            total_response_ms=self.total_response_ms + other.total_response_ms,
            timeouts=self.timeouts + other.timeouts,
            faults=self.faults + other.faults,
        )

    def is_consistent(self) -> bool:
        return self.wins + self.draws + self.losses == self.games


class GameStats(ArenaModel):
    """Wins, draws, losses and response times per agent name."""

    agents: dict[str, AgentStats] = Field(default_factory=dict)

    @classmethod
    def from_records(cls, records: list[GameRecord]) -> "GameStats":
        stats = cls()
        for record in records:
            stats.add_record(record)
        return stats

    def add_record(self, record: GameRecord) -> None:
        for seat, name in enumerate(record.seats):
            game_stats = record.agent_stats[seat]
            self.agents.setdefault(name, AgentStats()).record(
                record.result.for_seat(seat),
                moves=game_stats.moves_made,
                response_ms=game_stats.total_response_ms,
                timeouts=game_stats.timeouts,
                faults=game_stats.faults,
            )

    def merged(self, other: "GameStats") -> "GameStats":
        """Order-independent combination of two stat sets."""
        combined = {name: s.model_copy(deep=True) for name, s in self.agents.items()}
        for name, s in other.agents.items():
            combined[name] = combined[name].merged(s) if name in combined else s.model_copy()
        return GameStats(agents=dict(sorted(combined.items())))

    def total_wins(self) -> int:
        return sum(s.wins for s in self.agents.values())

    def total_losses(self) -> int:
        return sum(s.losses for s in self.agents.values())

    def __getitem__(self, name: str) -> AgentStats:
        return self.agents[name]


class RankingRow(ArenaModel):
    rank: int
    agent: str
    win_rate: float
    stats: AgentStats


class RankingTable(ArenaModel):
    """Agents ordered by win rate, then lower mean response time, then name."""

    rows: list[RankingRow] = Field(default_factory=list)

    @classmethod
    def from_stats(cls, stats: GameStats) -> "RankingTable":
        ordered = sorted(
            stats.agents.items(),
            key=lambda item: (-item[1].win_rate, item[1].avg_response_ms, item[0]),
        )
        return cls(
            rows=[
                RankingRow(rank=i + 1, agent=name, win_rate=s.win_rate, stats=s)
                for i, (name, s) in enumerate(ordered)
            ]
        )

    def agents(self) -> list[str]:
        return [row.agent for row in self.rows]
