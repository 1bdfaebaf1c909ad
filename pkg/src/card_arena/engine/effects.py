"""
Effect resolution: damage, healing, auras, summons, secrets and the death sweep.

Every function here mutates the state in place. Callers run ``sweep_deaths``
once an action's effects have all been applied; effects continue to resolve
even when a hero has already dropped to zero.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..models.actions import Target
from ..models.cards import (
    CardDefinition,
    CardKind,
    EffectAction,
    EffectScript,
    HeroClass,
    SecretCondition,
    TargetKind,
    Trigger,
)
from ..models.match import Seat
from .events import EventKind
from .state import (
    HERO_MAX_HEALTH,
    MANA_CAP,
    CardInstance,
    GameState,
    MinionInstance,
    SecretInstance,
    WeaponState,
)

logger = logging.getLogger(__name__)

HERO_POWER_COST = 2
SQUIRE_TOKEN_ID = "squire_token"

# Actions whose ChosenTarget must be a minion rather than any character
MINION_ONLY_ACTIONS = frozenset(
    {EffectAction.BUFF_ATTACK, EffectAction.BUFF_HEALTH, EffectAction.DESTROY_MINION}
)


@dataclass(frozen=True, slots=True)
class EffectContext:
    owner: Seat
    source: Optional[MinionInstance] = None
    chosen: Optional[Target] = None
    triggering: Optional[Target] = None


# Hero powers


_PING = EffectScript(
    trigger=Trigger.ON_CAST, action=EffectAction.DAMAGE, amount=1, target=TargetKind.CHOSEN_TARGET
)
_LESSER_HEAL = EffectScript(
    trigger=Trigger.ON_CAST, action=EffectAction.HEAL, amount=2, target=TargetKind.CHOSEN_TARGET
)
_REINFORCE = EffectScript(
    trigger=Trigger.ON_CAST,
    action=EffectAction.SUMMON_TOKEN,
    token=SQUIRE_TOKEN_ID,
    target=TargetKind.OWN_HERO,
)

HERO_POWERS: dict[HeroClass, EffectScript] = {
    HeroClass.MAGE: _PING,
    HeroClass.HUNTER: _PING,
    HeroClass.ROGUE: _PING,
    HeroClass.WARLOCK: _PING,
    HeroClass.PRIEST: _LESSER_HEAL,
    HeroClass.DRUID: _LESSER_HEAL,
    HeroClass.SHAMAN: _LESSER_HEAL,
    HeroClass.PALADIN: _REINFORCE,
    HeroClass.WARRIOR: _REINFORCE,
}


# Stats including auras


def aura_bonus(state: GameState, seat: Seat, minion: MinionInstance) -> tuple[int, int]:
    """(attack, health) granted to ``minion`` by the other friendly minions."""
    attack = health = 0
    for source in state.players[seat].board:
        if source is minion or source.destroyed:
            continue
        for effect in state.card_set.cards[source.card_id].effects:
            if effect.trigger is not Trigger.AURA:
                continue
            if (
                effect.target is TargetKind.FRIENDLY_MINIONS_OF_TRIBE
                and minion.tribe is not effect.tribe_arg
            ):
                continue
            if effect.action is EffectAction.BUFF_ATTACK:
                attack += effect.amount
            else:
                health += effect.amount
    return attack, health


def effective_attack(state: GameState, seat: Seat, minion: MinionInstance) -> int:
    return minion.base_attack + minion.attack_bonus + aura_bonus(state, seat, minion)[0]


def effective_health(state: GameState, seat: Seat, minion: MinionInstance) -> int:
    return minion.current_health + aura_bonus(state, seat, minion)[1]


def is_alive(state: GameState, seat: Seat, minion: MinionInstance) -> bool:
    return not minion.destroyed and effective_health(state, seat, minion) > 0


# Targeting


def chosen_target_actions(card_effects: tuple[EffectScript, ...]) -> Optional[bool]:
    """
    None when nothing asks for a chosen target, True when only minions may be
    chosen, False when any character may be.
    """
    chosen = [e for e in card_effects if e.target is TargetKind.CHOSEN_TARGET]
    if not chosen:
        return None
    return any(e.action in MINION_ONLY_ACTIONS for e in chosen)


def valid_targets(state: GameState, minions_only: bool) -> list[Target]:
    """Candidate chosen targets for the active player: own side first, board order."""
    targets: list[Target] = []
    for seat in (state.active_seat, state.active_seat.other):
        if not minions_only:
            targets.append(Target(seat))
        targets.extend(
            Target(seat, m.instance_id)
            for m in state.players[seat].board
            if is_alive(state, seat, m)
        )
    return targets


def _resolve_targets(
    state: GameState, effect: EffectScript, ctx: EffectContext
) -> list[Target]:
    owner, enemy = ctx.owner, ctx.owner.other
    source_id = ctx.source.instance_id if ctx.source else None
    match effect.target:
        case TargetKind.CHOSEN_TARGET:
            candidates = [ctx.chosen] if ctx.chosen is not None else []
        case TargetKind.TRIGGERING_ENTITY:
            candidates = [ctx.triggering] if ctx.triggering is not None else []
        case TargetKind.SELF:
            candidates = [Target(owner, source_id)] if source_id is not None else []
        case TargetKind.OWN_HERO:
            candidates = [Target(owner)]
        case TargetKind.ENEMY_HERO:
            candidates = [Target(enemy)]
        case TargetKind.ALL_ENEMY_MINIONS:
            candidates = [Target(enemy, m.instance_id) for m in state.players[enemy].board]
        case TargetKind.ALL_FRIENDLY_MINIONS:
            candidates = [
                Target(owner, m.instance_id)
                for m in state.players[owner].board
                if m.instance_id != source_id
            ]
        case TargetKind.FRIENDLY_MINIONS_OF_TRIBE:
            candidates = [
                Target(owner, m.instance_id)
                for m in state.players[owner].board
                if m.instance_id != source_id and m.tribe is effect.tribe_arg
            ]
        case TargetKind.RANDOM_ENEMY_MINION:
            alive = [
                Target(enemy, m.instance_id)
                for m in state.players[enemy].board
                if is_alive(state, enemy, m)
            ]
            candidates = [alive[state.rng.integer(len(alive))]] if alive else []
        case _:
            candidates = []
    return [t for t in candidates if state.exists(t)]


# Primitive changes


def deal_damage(state: GameState, target: Target, amount: int) -> None:
    if amount <= 0:
        return
    minion = state.minion_at(target)
    if minion is not None:
        minion.damage += amount
    else:
        state.players[target.seat].hero_health -= amount
    state.emit(
        EventKind.DAMAGE_DEALT, seat=int(target.seat), minion=target.minion_id, amount=amount
    )


def heal(state: GameState, target: Target, amount: int) -> None:
    minion = state.minion_at(target)
    if minion is not None:
        restored = min(amount, minion.damage)
        minion.damage -= restored
    else:
        player = state.players[target.seat]
        restored = min(amount, max(0, HERO_MAX_HEALTH - player.hero_health))
        player.hero_health += restored
    state.emit(
        EventKind.HEALED, seat=int(target.seat), minion=target.minion_id, amount=restored
    )


def summon_minion(
    state: GameState,
    seat: Seat,
    card: CardDefinition,
    instance_id: Optional[int] = None,
    position: Optional[int] = None,
) -> Optional[MinionInstance]:
    """Put a minion on ``seat``'s board; returns None when the board is full."""
    board = state.players[seat].board
    if len(board) >= state.config.board_limit:
        return None
    minion = MinionInstance(
        instance_id=instance_id if instance_id is not None else state.allocate_id(),
        card_id=card.id,
        base_attack=card.attack,
        base_health=card.health_or_durability,
        max_health=card.health_or_durability,
        taunt=card.taunt,
        token=card.is_token,
        tribe=card.tribe,
    )
    index = len(board) if position is None else max(0, min(position, len(board)))
    board.insert(index, minion)
    state.emit(
        EventKind.MINION_SUMMONED,
        seat=int(seat),
        minion=minion.instance_id,
        card=card.id,
        position=index,
    )
    return minion


def gain_mana(state: GameState, seat: Seat, amount: int) -> None:
    player = state.players[seat]
    player.mana_max = min(MANA_CAP, player.mana_max + amount)
    player.mana_current = min(player.mana_max, player.mana_current + amount)
    state.emit(EventKind.MANA_GAINED, seat=int(seat), mana_max=player.mana_max)


def break_weapon(state: GameState, seat: Seat) -> None:
    player = state.players[seat]
    if player.weapon is None:
        return
    weapon, player.weapon = player.weapon, None
    player.graveyard.append(weapon.as_card())
    state.emit(EventKind.WEAPON_BROKEN, seat=int(seat), card=weapon.card_id)


def draw_card(state: GameState, seat: Seat) -> None:
    """Top card to hand, burned at the hand limit; fatigue 1, 2, 3, ... once empty."""
    player = state.players[seat]
    if player.deck:
        card = player.deck.pop(0)
        if len(player.hand) >= state.config.hand_limit:
            player.graveyard.append(card)
            state.emit(EventKind.CARD_BURNED, seat=int(seat), card=card.card_id)
        else:
            player.hand.append(card)
            state.emit(EventKind.CARD_DRAWN, seat=int(seat), card=card.card_id)
        return
    player.fatigue_counter += 1
    player.hero_health -= player.fatigue_counter
    state.emit(EventKind.FATIGUE_DAMAGE, seat=int(seat), amount=player.fatigue_counter)


# Effect scripts


def resolve_effect(state: GameState, effect: EffectScript, ctx: EffectContext) -> None:
    targets = _resolve_targets(state, effect, ctx)
    if not targets:
        return
    amount = effect.amount or 0
    for target in targets:
        match effect.action:
            case EffectAction.DAMAGE:
                deal_damage(state, target, amount)
            case EffectAction.HEAL:
                heal(state, target, amount)
            case EffectAction.BUFF_ATTACK | EffectAction.BUFF_HEALTH:
                minion = state.minion_at(target)
                if minion is None:
                    continue
                if effect.action is EffectAction.BUFF_ATTACK:
                    minion.attack_bonus += amount
                else:
                    minion.max_health += amount
                state.emit(
                    EventKind.MINION_BUFFED,
                    seat=int(target.seat),
                    minion=target.minion_id,
                    stat=str(effect.action),
                    amount=amount,
                )
            case EffectAction.DESTROY_MINION:
                minion = state.minion_at(target)
                if minion is not None:
                    minion.destroyed = True
            case EffectAction.DRAW_CARDS:
                for _ in range(amount):
                    draw_card(state, target.seat)
            case EffectAction.SUMMON_TOKEN:
                summon_minion(state, target.seat, state.card_set.get(effect.token))
            case EffectAction.DESTROY_WEAPON:
                break_weapon(state, target.seat)
            case EffectAction.GAIN_MANA:
                gain_mana(state, target.seat, amount)
            case EffectAction.TAUNT:
                pass


def resolve_card_effects(
    state: GameState, card: CardDefinition, trigger: Trigger, ctx: EffectContext
) -> None:
    for effect in card.effects_with(trigger):
        resolve_effect(state, effect, ctx)


def sweep_deaths(state: GameState) -> None:
    """
    Remove every dead minion, then run their deathrattles; repeat until no
    minion is dead. Each pass collects deaths simultaneously, active side
    first, in board order. Tokens leave play without reaching the graveyard.
    """
    while True:
        dead = [(seat, m) for seat, m in state.minions() if not is_alive(state, seat, m)]
        if not dead:
            return
        for seat, minion in dead:
            player = state.players[seat]
            player.board.remove(minion)
            if not minion.token:
                player.graveyard.append(minion.as_card())
            state.emit(
                EventKind.MINION_DIED,
                seat=int(seat),
                minion=minion.instance_id,
                card=minion.card_id,
            )
        for seat, minion in dead:
            card = state.card_set.cards[minion.card_id]
            resolve_card_effects(
                state, card, Trigger.DEATHRATTLE, EffectContext(owner=seat, source=minion)
            )


def fire_secrets(
    state: GameState, owner: Seat, condition: SecretCondition, triggering: Optional[Target]
) -> None:
    """Reveal and resolve ``owner``'s secrets waiting on ``condition``, in play order."""
    player = state.players[owner]
    for secret in [s for s in player.secrets if s.condition is condition]:
        player.secrets.remove(secret)
        player.graveyard.append(secret.as_card())
        state.emit(
            EventKind.SECRET_REVEALED,
            seat=int(owner),
            secret=secret.instance_id,
            card=secret.card_id,
        )
        card = state.card_set.cards[secret.card_id]
        resolve_card_effects(
            state,
            card,
            Trigger.SECRET_TRIGGER,
            EffectContext(owner=owner, triggering=triggering),
        )
        sweep_deaths(state)


def place_secret(
    state: GameState, seat: Seat, card: CardDefinition, instance: CardInstance
) -> None:
    state.players[seat].secrets.append(
        SecretInstance(instance.instance_id, card.id, card.secret_condition)
    )


def play_minion(
    state: GameState,
    seat: Seat,
    card: CardDefinition,
    instance: CardInstance,
    position: Optional[int],
    chosen: Optional[Target],
) -> None:
    minion = summon_minion(state, seat, card, instance.instance_id, position)
    resolve_card_effects(
        state, card, Trigger.BATTLECRY, EffectContext(owner=seat, source=minion, chosen=chosen)
    )
    sweep_deaths(state)
    if state.players[seat].minion(minion.instance_id) is not None:
        fire_secrets(
            state,
            seat.other,
            SecretCondition.ENEMY_PLAYS_MINION,
            Target(seat, minion.instance_id),
        )


def cast_spell(
    state: GameState,
    seat: Seat,
    card: CardDefinition,
    instance: CardInstance,
    chosen: Optional[Target],
) -> None:
    if card.kind is CardKind.SECRET:
        place_secret(state, seat, card, instance)
    else:
        ctx = EffectContext(owner=seat, chosen=chosen)
        resolve_card_effects(state, card, Trigger.ON_CAST, ctx)
        state.players[seat].graveyard.append(instance)
        sweep_deaths(state)
    fire_secrets(state, seat.other, SecretCondition.ENEMY_SPELL_CAST, Target(seat))


def equip_weapon(
    state: GameState,
    seat: Seat,
    card: CardDefinition,
    instance: CardInstance,
    chosen: Optional[Target],
) -> None:
    break_weapon(state, seat)
    state.players[seat].weapon = WeaponState(
        instance.instance_id, card.id, card.attack, card.health_or_durability
    )
    state.emit(EventKind.WEAPON_EQUIPPED, seat=int(seat), card=card.id)
    resolve_card_effects(state, card, Trigger.ON_CAST, EffectContext(owner=seat, chosen=chosen))
    sweep_deaths(state)


def use_hero_power(state: GameState, seat: Seat, chosen: Optional[Target]) -> None:
    player = state.players[seat]
    player.mana_current -= HERO_POWER_COST
    player.hero_power_used = True
    state.emit(
        EventKind.HERO_POWER_USED,
        seat=int(seat),
        target=None if chosen is None else [int(chosen.seat), chosen.minion_id],
    )
    resolve_effect(state, HERO_POWERS[player.hero_class], EffectContext(owner=seat, chosen=chosen))
    sweep_deaths(state)
