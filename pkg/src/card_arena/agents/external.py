"""
Bridge to agents running in another process.

Newline-delimited JSON over the child's stdin/stdout. The driver sends one
message per line with a ``type`` of ``initialize_agent``, ``initialize_game``,
``observation``, ``finalize_game`` or ``finalize_agent``; the child answers
each ``observation`` with ``{"type": "action", "action": {...}}`` where the
action has the shape of ``Action.to_dict()``. Lifecycle messages get no reply.
"""

import json
import logging
import subprocess
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from ..errors import AgentFault
from ..models.actions import Action
from ..models.agents import GameContext
from ..models.match import GameResult
from ..models.observation import Observation
from .base import AbstractAgent

logger = logging.getLogger(__name__)

SHUTDOWN_TIMEOUT_S = 5.0


class ExternalProcessAgent(AbstractAgent):
    def __init__(self, command: Sequence[str], name: Optional[str] = None) -> None:
        super().__init__(name or "external")
        self.command = list(command)
        self._process: Optional[subprocess.Popen] = None

    def _start(self) -> subprocess.Popen:
        if self._process is None or self._process.poll() is not None:
            logger.info("Starting external agent %s: %s", self.name, " ".join(self.command))
            self._process = subprocess.Popen(
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                encoding="utf-8",
                bufsize=1,
            )
        return self._process

    def _send(self, message: dict[str, Any]) -> None:
        process = self._start()
        try:
            process.stdin.write(json.dumps(message, separators=(",", ":")) + "\n")
            process.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise AgentFault(self.name, f"cannot write to agent process: {exc}") from exc

    def _receive(self) -> dict[str, Any]:
        line = self._start().stdout.readline()
        if not line:
            raise AgentFault(self.name, "agent process closed its output")
        try:
            message = json.loads(line)
        except json.JSONDecodeError as exc:
            raise AgentFault(self.name, f"malformed reply: {line.strip()!r}") from exc
        if not isinstance(message, dict):
            raise AgentFault(self.name, f"reply is not an object: {line.strip()!r}")
        return message

    def initialize_agent(self) -> None:
        self._send({"type": "initialize_agent", "name": self.name})

    def initialize_game(self, context: GameContext) -> None:
        super().initialize_game(context)
        self._send(
            {
                "type": "initialize_game",
                "seat": int(context.seat),
                "deck": context.deck.model_dump(mode="json", by_alias=True),
                "opponent_class": str(context.opponent_class),
                "card_set_version": context.card_set.version,
                "config": context.config.model_dump(mode="json"),
                "seed": context.seed,
            }
        )

    def get_move(self, observation: Observation) -> Action:
        self._send({"type": "observation", "observation": observation.model_dump(mode="json")})
        message = self._receive()
        if message.get("type") != "action":
            raise AgentFault(self.name, f"expected an action, got {message.get('type')!r}")
        try:
            return Action.from_dict(message.get("action"))
        except ValidationError as exc:
            raise AgentFault(self.name, f"invalid action: {exc}") from exc

    def finalize_game(self, result: GameResult) -> None:
        super().finalize_game(result)
        self._send({"type": "finalize_game", "result": result.model_dump(mode="json")})

    def finalize_agent(self) -> None:
        if self._process is None:
            return
        process, self._process = self._process, None
        try:
            process.stdin.write(json.dumps({"type": "finalize_agent"}) + "\n")
            process.stdin.close()
        except (BrokenPipeError, OSError):
            pass
        try:
            process.wait(timeout=SHUTDOWN_TIMEOUT_S)
        except subprocess.TimeoutExpired:
            logger.warning("External agent %s did not exit; killing it", self.name)
            process.kill()
            process.wait()
