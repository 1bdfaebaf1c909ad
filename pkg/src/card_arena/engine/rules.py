"""
The game state machine: setup, turn structure, legal moves, combat and results.

``apply_action`` validates and returns a new state; ``advance`` is its
in-place, non-validating sibling for search code that already holds a private
copy.
"""

import logging
from typing import Optional

from ..cards.validation import validate_deck
from ..errors import GameAlreadyOver, IllegalAction, InvalidDeck
from ..models.actions import Action, ActionKind, Target
from ..models.cards import CardKind, CardSet, DeckSpec, SecretCondition
from ..models.match import GameResult, MatchConfig, ResultReason, Seat
from .effects import (
    HERO_POWER_COST,
    HERO_POWERS,
    SQUIRE_TOKEN_ID,
    break_weapon,
    cast_spell,
    chosen_target_actions,
    deal_damage,
    draw_card,
    effective_attack,
    effective_health,
    equip_weapon,
    fire_secrets,
    play_minion,
    sweep_deaths,
    use_hero_power,
    valid_targets,
)
from .events import EventKind, GameEvent
from .rng import GameRng
from .state import MANA_CAP, CardInstance, GameState, PlayerState

logger = logging.getLogger(__name__)

__all__ = [
    "new_game",
    "begin_turn",
    "draw_card",
    "legal_actions",
    "apply_action",
    "advance",
    "resolve_attack",
    "game_result",
    "event_log",
    "concede",
    "check_invariants",
]


def new_game(
    deck_a: DeckSpec,
    deck_b: DeckSpec,
    card_set: CardSet,
    config: MatchConfig,
    seed: int,
    *,
    record_events: bool = True,
) -> GameState:
    """
    Set up a game: ``deck_a`` belongs to the FIRST seat. Instance ids follow
    decklist order, then each deck is shuffled (FIRST seat first), opening
    hands are drawn and the first turn begins.
    """
    for deck in (deck_a, deck_b):
        report = validate_deck(deck, card_set)
        if not report.ok:
            raise InvalidDeck(deck.name, report.violations)

    state = GameState(
        card_set=card_set,
        config=config,
        players=(PlayerState(deck_a.hero_class), PlayerState(deck_b.hero_class)),
        rng=GameRng(seed),
        seed=seed,
        record_events=record_events,
    )
    for seat, deck in zip(Seat, (deck_a, deck_b)):
        instances = [
            CardInstance(state.allocate_id(), card_set.get(card_id).id)
            for card_id in deck.card_ids
        ]
        player = state.players[seat]
        player.deck = state.rng.shuffled(instances)
        player.deck_size = len(instances)
    for seat in Seat:
        for _ in range(config.starting_hand_sizes[seat]):
            draw_card(state, seat)
    begin_turn(state)
    logger.debug("New game %s vs %s (seed %d)", deck_a.name, deck_b.name, seed)
    return state


def begin_turn(state: GameState) -> None:
    state.turn_number += 1
    if state.turn_number > state.config.turn_limit:
        _finish(state, GameResult.draw(ResultReason.TURN_LIMIT, state.config.turn_limit))
        return
    player = state.active
    player.mana_max = min(player.mana_max + 1, MANA_CAP)
    player.mana_current = player.mana_max
    player.hero_power_used = False
    player.hero_attacked = False
    for minion in player.board:
        minion.exhausted = False
        minion.attacks_this_turn = 0
    state.emit(
        EventKind.TURN_STARTED,
        seat=int(state.active_seat),
        turn=state.turn_number,
        mana=player.mana_max,
    )
    draw_card(state, state.active_seat)


def legal_actions(state: GameState) -> list[Action]:
    """
    Every move of the active player, each exactly once: EndTurn, then card
    plays in hand order, hero power, minion attacks in board order, hero attacks.
    Minion plays always append at the end of the board.
    """
    if state.result is not None:
        raise GameAlreadyOver("the game has already ended")
    seat = state.active_seat
    player = state.active
    actions = [Action.end_turn()]

    board_full = len(player.board) >= state.config.board_limit
    targets_cache: dict[bool, list[Target]] = {}

    def targets_for(minions_only: bool) -> list[Target]:
        if minions_only not in targets_cache:
            targets_cache[minions_only] = valid_targets(state, minions_only)
        return targets_cache[minions_only]

    for index, instance in enumerate(player.hand):
        card = state.card_set.cards[instance.card_id]
        if card.mana_cost > player.mana_current:
            continue
        position = None
        if card.kind is CardKind.MINION:
            if board_full:
                continue
            position = len(player.board)
        elif card.kind is CardKind.SECRET:
            if any(s.card_id == card.id for s in player.secrets):
                continue
        target_kind = chosen_target_actions(card.effects)
        if target_kind is None:
            actions.append(Action.play_card(index, position))
            continue
        targets = targets_for(target_kind)
        if not targets:
            # A battlecry may fizzle; spells and weapons need their target.
            if card.kind is CardKind.MINION:
                actions.append(Action.play_card(index, position))
            continue
        actions.extend(Action.play_card(index, position, t) for t in targets)

    if not player.hero_power_used and player.mana_current >= HERO_POWER_COST:
        power = HERO_POWERS[player.hero_class]
        target_kind = chosen_target_actions((power,))
        if target_kind is None:
            # The summoning power needs its token in the card set.
            if not board_full and SQUIRE_TOKEN_ID in state.card_set:
                actions.append(Action.hero_power())
        else:
            actions.extend(Action.hero_power(t) for t in targets_for(target_kind))

    defenders = _attack_targets(state)
    for minion in player.board:
        if minion.exhausted or minion.attacks_this_turn >= 1:
            continue
        if effective_attack(state, seat, minion) < 1:
            continue
        actions.extend(Action.attack(minion.instance_id, d) for d in defenders)
    weapon = player.weapon
    if weapon is not None and weapon.durability_remaining >= 1 and not player.hero_attacked:
        actions.extend(Action.hero_attack(d) for d in defenders)
    return actions


def _attack_targets(state: GameState) -> list[Target]:
    enemy_seat = state.active_seat.other
    board = state.players[enemy_seat].board
    taunts = [Target(enemy_seat, m.instance_id) for m in board if m.taunt]
    if taunts:
        return taunts
    return [Target(enemy_seat)] + [Target(enemy_seat, m.instance_id) for m in board]


def apply_action(state: GameState, action: Action) -> GameState:
    """Validated, pure transition: ``state`` is left untouched."""
    if state.result is not None:
        raise GameAlreadyOver("the game has already ended")
    if action not in legal_actions(state):
        raise IllegalAction(f"{action} is not legal on turn {state.turn_number}")
    successor = state.clone()
    advance(successor, action)
    return successor


def advance(state: GameState, action: Action) -> None:
    """Apply a legal action in place."""
    seat = state.active_seat
    player = state.active
    match action.kind:
        case ActionKind.END_TURN:
            state.emit(EventKind.TURN_ENDED, seat=int(seat), turn=state.turn_number)
            state.active_seat = seat.other
            begin_turn(state)
        case ActionKind.PLAY_CARD:
            instance = player.hand.pop(action.hand_index)
            card = state.card_set.cards[instance.card_id]
            player.mana_current -= card.mana_cost
            state.emit(
                EventKind.CARD_PLAYED,
                seat=int(seat),
                card=card.id,
                instance=instance.instance_id,
                target=_target_payload(action.target),
            )
            match card.kind:
                case CardKind.MINION:
                    play_minion(state, seat, card, instance, action.position, action.target)
                case CardKind.WEAPON:
                    equip_weapon(state, seat, card, instance, action.target)
                case _:
                    cast_spell(state, seat, card, instance, action.target)
        case ActionKind.ATTACK:
            resolve_attack(state, Target(seat, action.attacker), action.target)
        case ActionKind.HERO_ATTACK:
            resolve_attack(state, Target(seat), action.target)
        case ActionKind.HERO_POWER:
            use_hero_power(state, seat, action.target)
    _settle(state)


def resolve_attack(state: GameState, attacker: Target, defender: Target) -> None:
    """
    Minion or hero combat. A minion attack first reveals the defender's
    EnemyMinionAttacks secrets; if either side is gone afterwards the attack
    is cancelled. Damage is simultaneous and only minions strike back.
    """
    seat = attacker.seat
    player = state.players[seat]
    if attacker.is_hero:
        weapon = player.weapon
        if weapon is None:
            raise IllegalAction("a hero without a weapon cannot attack")
        player.hero_attacked = True
        attack_value = weapon.attack
    else:
        minion = state.minion_at(attacker)
        if minion is None:
            raise IllegalAction(f"no attacking minion #{attacker.minion_id}")
        fire_secrets(state, seat.other, SecretCondition.ENEMY_MINION_ATTACKS, attacker)
        minion.attacks_this_turn += 1
        if not (state.exists(attacker) and state.exists(defender)) or _any_hero_dead(state):
            state.emit(
                EventKind.ATTACK_RESOLVED,
                attacker=_target_payload(attacker),
                defender=_target_payload(defender),
                cancelled=True,
            )
            return
        attack_value = effective_attack(state, seat, minion)

    defending_minion = state.minion_at(defender)
    counter = (
        effective_attack(state, defender.seat, defending_minion) if defending_minion else 0
    )
    state.emit(
        EventKind.ATTACK_RESOLVED,
        attacker=_target_payload(attacker),
        defender=_target_payload(defender),
        cancelled=False,
    )
    deal_damage(state, defender, attack_value)
    deal_damage(state, attacker, counter)
    if attacker.is_hero:
        player.weapon.durability_remaining -= 1
        if player.weapon.durability_remaining <= 0:
            break_weapon(state, seat)
    sweep_deaths(state)


def _any_hero_dead(state: GameState) -> bool:
    return any(p.hero_health <= 0 for p in state.players)


def game_result(state: GameState) -> Optional[GameResult]:
    """The result if the game has ended, computed from the state."""
    if state.result is not None:
        return state.result
    dead = [seat for seat in Seat if state.players[seat].hero_health <= 0]
    if len(dead) == 2:
        return GameResult.draw(ResultReason.HERO_DEAD, state.turn_number)
    if dead:
        return GameResult.win(dead[0].other, ResultReason.HERO_DEAD, state.turn_number)
    if state.turn_number > state.config.turn_limit:
        return GameResult.draw(ResultReason.TURN_LIMIT, state.config.turn_limit)
    return None


def event_log(state: GameState) -> list[GameEvent]:
    return list(state.events)


def concede(state: GameState, seat: Seat) -> GameState:
    """End the game with a forfeit loss for ``seat``."""
    if state.result is not None:
        raise GameAlreadyOver("the game has already ended")
    successor = state.clone()
    _finish(successor, GameResult.win(seat.other, ResultReason.FORFEIT, state.turn_number))
    return successor


def _settle(state: GameState) -> None:
    result = game_result(state)
    if result is not None and state.result is None:
        _finish(state, result)


def _finish(state: GameState, result: GameResult) -> None:
    state.result = result
    state.emit(
        EventKind.GAME_ENDED,
        outcome=str(result.outcome),
        winner=None if result.winner is None else int(result.winner),
        reason=str(result.reason),
        final_turn=result.final_turn,
    )
    logger.debug("Game ended: %s", result)


def _target_payload(target: Optional[Target]) -> Optional[list]:
    if target is None:
        return None
    return [int(target.seat), target.minion_id]


def check_invariants(state: GameState) -> list[str]:
    """Violated state invariants, as messages; empty when the state is sound."""
    problems: list[str] = []
    config = state.config
    seen: set[int] = set()
    for seat in Seat:
        p = state.players[seat]
        label = seat.name
        if not 0 <= p.mana_current <= p.mana_max <= MANA_CAP:
            problems.append(f"{label}: mana {p.mana_current}/{p.mana_max}")
        if len(p.hand) > config.hand_limit:
            problems.append(f"{label}: hand size {len(p.hand)}")
        if len(p.board) > config.board_limit:
            problems.append(f"{label}: board size {len(p.board)}")
        if p.weapon is not None and (p.weapon.durability_remaining < 1 or p.weapon.attack < 1):
            problems.append(f"{label}: broken weapon still equipped")
        if state.result is None and p.hero_health <= 0:
            problems.append(f"{label}: dead hero in a running game")
        for minion in p.board:
            if minion.destroyed or effective_health(state, seat, minion) <= 0:
                problems.append(f"{label}: dead minion #{minion.instance_id} on board")
            if minion.current_health > minion.max_health:
                problems.append(f"{label}: minion #{minion.instance_id} over max health")

        ids = [c.instance_id for c in (*p.deck, *p.hand, *p.graveyard)]
        ids += [s.instance_id for s in p.secrets]
        ids += [m.instance_id for m in p.board if not m.token]
        if p.weapon is not None:
            ids.append(p.weapon.instance_id)
        if len(ids) != p.deck_size:
            problems.append(f"{label}: {len(ids)} cards in zones, expected {p.deck_size}")
        duplicated = seen.intersection(ids) or len(set(ids)) != len(ids)
        if duplicated:
            problems.append(f"{label}: a card instance is in two zones")
        seen.update(ids)

    if state.result is None and state.turn_number > config.turn_limit:
        problems.append(f"turn {state.turn_number} beyond limit without a result")
    if any(event.ordinal != i for i, event in enumerate(state.events)):
        problems.append("event ordinals are not gapless")
    return problems
