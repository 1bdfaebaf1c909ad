"""
``legal_actions`` against a brute-force legality check written from the rules.
"""

from typing import Iterator

import pytest

from card_arena.cards import premade_decks
from card_arena.engine import GameState, legal_actions
from card_arena.engine.effects import effective_attack, effective_health
from card_arena.models import (
    Action,
    ActionKind,
    CardKind,
    EffectAction,
    HeroClass,
    Target,
    TargetKind,
)
from tests.builders import deck_pair, random_playout

TARGETED_POWERS = {
    HeroClass.MAGE,
    HeroClass.HUNTER,
    HeroClass.ROGUE,
    HeroClass.WARLOCK,
    HeroClass.PRIEST,
    HeroClass.DRUID,
    HeroClass.SHAMAN,
}
MINION_ONLY = {EffectAction.BUFF_ATTACK, EffectAction.BUFF_HEALTH, EffectAction.DESTROY_MINION}


def _characters(state: GameState) -> list[Target]:
    out: list[Target] = []
    for seat in (state.active_seat, state.active_seat.other):
        out.append(Target(seat))
        out.extend(Target(seat, m.instance_id) for m in state.players[seat].board)
    return out


def _candidates(state: GameState) -> Iterator[Action]:
    player = state.active
    characters = _characters(state)
    target_options = [None, *characters]
    yield Action.end_turn()
    for index in range(len(player.hand) + 1):
        for position in (None, 0, len(player.board)):
            for target in target_options:
                yield Action.play_card(index, position, target)
    for target in target_options:
        yield Action.hero_power(target)
    for minion in player.board:
        for target in characters:
            yield Action.attack(minion.instance_id, target)
    for target in characters:
        yield Action.hero_attack(target)


def _alive(state: GameState, target: Target) -> bool:
    if target.minion_id is None:
        return True
    minion = state.minion_at(target)
    return minion is not None and effective_health(state, target.seat, minion) > 0


def _can_be_attacked(state: GameState, target: Target) -> bool:
    enemy = state.active_seat.other
    if target.seat != enemy or not _alive(state, target):
        return False
    taunts = {m.instance_id for m in state.players[enemy].board if m.taunt}
    return not taunts or target.minion_id in taunts


def _is_legal(state: GameState, action: Action) -> bool:
    player = state.active
    board_full = len(player.board) >= state.config.board_limit
    match action.kind:
        case ActionKind.END_TURN:
            return True
        case ActionKind.PLAY_CARD:
            if action.hand_index is None or action.hand_index >= len(player.hand):
                return False
            card = state.card_set.cards[player.hand[action.hand_index].card_id]
            if card.mana_cost > player.mana_current:
                return False
            if card.kind is CardKind.MINION:
                if board_full or action.position != len(player.board):
                    return False
            elif action.position is not None:
                return False
            if card.kind is CardKind.SECRET and card.id in {s.card_id for s in player.secrets}:
                return False
            chosen = [e for e in card.effects if e.target is TargetKind.CHOSEN_TARGET]
            if not chosen:
                return action.target is None
            minions_only = any(e.action in MINION_ONLY for e in chosen)
            allowed = [
                t
                for t in _characters(state)
                if _alive(state, t) and not (minions_only and t.minion_id is None)
            ]
            if not allowed:
                return card.kind is CardKind.MINION and action.target is None
            return action.target in allowed
        case ActionKind.HERO_POWER:
            if player.hero_power_used or player.mana_current < 2:
                return False
            if player.hero_class in TARGETED_POWERS:
                return action.target is not None and _alive(state, action.target)
            return action.target is None and not board_full and "squire_token" in state.card_set
        case ActionKind.ATTACK:
            minion = player.minion(action.attacker)
            if minion is None or minion.exhausted or minion.attacks_this_turn > 0:
                return False
            if effective_attack(state, state.active_seat, minion) < 1:
                return False
            return _can_be_attacked(state, action.target)
        case ActionKind.HERO_ATTACK:
            if player.weapon is None or player.hero_attacked:
                return False
            return _can_be_attacked(state, action.target)
    return False


def _check(card_set, games: int, base_seed: int) -> int:
    decks = [p.deck for p in premade_decks()]
    checked = 0
    for i in range(games):
        for state in random_playout(card_set, deck_pair(decks, i), base_seed + i):
            if state.result is not None:
                continue
            produced = legal_actions(state)
            assert len(produced) == len(set(produced)), "duplicate actions"
            expected = {a for a in _candidates(state) if _is_legal(state, a)}
            assert set(produced) == expected, f"game {i}, turn {state.turn_number}"
            checked += 1
    return checked


class TestLegalActionOracle:
    def test_matches_brute_force(self, card_set):
        assert _check(card_set, games=8, base_seed=70) > 0

    @pytest.mark.slow
    def test_many_games(self, card_set):
        _check(card_set, games=200, base_seed=7000)
