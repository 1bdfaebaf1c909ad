"""
Builtin agent registry and the agent spec strings used on the command line.

Spec syntax: ``[name=]kind[:param=value,...]`` for builtin agents, e.g.
``flatmc:rollouts=8,depth=20``, and ``[name=]external:<command line>`` for
an external-process agent.
"""

import shlex
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..config import Settings
from .base import AbstractAgent
from .external import ExternalProcessAgent
from .flat_mc import FlatMonteCarloAgent
from .greedy import GreedyAgent
from .simple import PassAgent, RandomAgent

EXTERNAL_KIND = "external"

_INT_PARAMS = frozenset({"seed", "rollouts", "depth", "workers"})


def _pass(settings: Settings, name: str, **params: Any) -> AbstractAgent:
    return PassAgent(name=name)


def _random(settings: Settings, name: str, **params: Any) -> AbstractAgent:
    return RandomAgent(seed=params.get("seed", settings.agent_seed), name=name)


def _greedy(settings: Settings, name: str, **params: Any) -> AbstractAgent:
    return GreedyAgent(
        weights=settings.heuristic_weights,
        seed=params.get("seed", settings.agent_seed),
        name=name,
    )


def _flatmc(settings: Settings, name: str, **params: Any) -> AbstractAgent:
    return FlatMonteCarloAgent(
        rollouts=params.get("rollouts", settings.flat_mc_rollouts),
        depth=params.get("depth", settings.rollout_depth),
        weights=settings.heuristic_weights,
        seed=params.get("seed", settings.agent_seed),
        workers=params.get("workers", 1),
        name=name,
    )


BUILTIN_AGENTS: dict[str, Callable[..., AbstractAgent]] = {
    "pass": _pass,
    "random": _random,
    "greedy": _greedy,
    "flatmc": _flatmc,
}


def make_agent(
    kind: str,
    name: Optional[str] = None,
    settings: Optional[Settings] = None,
    **params: Any,
) -> AbstractAgent:
    """Build a builtin agent; unset parameters come from ``settings``."""
    try:
        factory = BUILTIN_AGENTS[kind]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_AGENTS))
        raise ValueError(f"unknown agent {kind!r} (known: {known})") from None
    unknown = set(params) - _INT_PARAMS
    if unknown:
        raise ValueError(f"unknown agent parameters: {', '.join(sorted(unknown))}")
    return factory(settings or Settings(), name or kind, **params)


@dataclass(frozen=True)
class AgentSpec:
    name: str
    kind: str
    params: dict[str, int] = field(default_factory=dict)
    command: tuple[str, ...] = ()

    def build(self, settings: Optional[Settings] = None) -> AbstractAgent:
        if self.kind == EXTERNAL_KIND:
            return ExternalProcessAgent(self.command, name=self.name)
        return make_agent(self.kind, self.name, settings, **self.params)


def parse_agent_spec(text: str) -> AgentSpec:
    """Parse ``[name=]kind[:params]``; raises ValueError on malformed specs."""
    name: Optional[str] = None
    head, _, rest = text.partition(":")
    if "=" in head:
        name, head = head.split("=", 1)
    kind = head.strip()
    if kind == EXTERNAL_KIND:
        command = tuple(shlex.split(rest))
        if not command:
            raise ValueError("an external agent needs a command")
        return AgentSpec(name=name or EXTERNAL_KIND, kind=kind, command=command)
    if kind not in BUILTIN_AGENTS:
        raise ValueError(f"unknown agent {kind!r}")
    params: dict[str, int] = {}
    for item in filter(None, (part.strip() for part in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key not in _INT_PARAMS:
            raise ValueError(f"bad agent parameter {item!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise ValueError(f"agent parameter {key} must be an integer") from None
    return AgentSpec(name=name or kind, kind=kind, params=params)
