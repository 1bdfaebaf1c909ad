"""
Per-seat masking of a full game state.
"""

from collections import Counter

from ..engine.effects import aura_bonus
from ..engine.rules import legal_actions
from ..engine.state import GameState, MinionInstance, PlayerState
from ..models.match import Seat
from ..models.observation import (
    CardView,
    MinionView,
    Observation,
    OpponentView,
    OwnView,
    SecretView,
    WeaponView,
)


def minion_view(state: GameState, seat: Seat, minion: MinionInstance) -> MinionView:
    attack_aura, health_aura = aura_bonus(state, seat, minion)
    return MinionView(
        instance_id=minion.instance_id,
        card_id=minion.card_id,
        base_attack=minion.base_attack,
        base_health=minion.base_health,
        attack_bonus=minion.attack_bonus,
        max_health=minion.max_health,
        damage=minion.damage,
        exhausted=minion.exhausted,
        attacks_this_turn=minion.attacks_this_turn,
        taunt=minion.taunt,
        token=minion.token,
        attack=minion.base_attack + minion.attack_bonus + attack_aura,
        health=minion.current_health + health_aura,
    )


def _public_fields(state: GameState, seat: Seat, player: PlayerState) -> dict:
    weapon = player.weapon
    return {
        "hero_class": player.hero_class,
        "hero_health": player.hero_health,
        "hero_power_used": player.hero_power_used,
        "hero_attacked": player.hero_attacked,
        "mana_current": player.mana_current,
        "mana_max": player.mana_max,
        "fatigue_counter": player.fatigue_counter,
        "weapon": None
        if weapon is None
        else WeaponView(
            card_id=weapon.card_id,
            attack=weapon.attack,
            durability=weapon.durability_remaining,
        ),
        "board": tuple(minion_view(state, seat, m) for m in player.board),
        "graveyard": tuple(
            CardView(instance_id=c.instance_id, card_id=c.card_id) for c in player.graveyard
        ),
        "deck_count": len(player.deck),
    }


def observe(state: GameState, seat: Seat) -> Observation:
    """
    What ``seat`` may see. The opponent's hand, deck and secrets only appear
    as counts; the viewer's own deck only as a multiset.
    """
    own = state.players[seat]
    opponent = state.players[seat.other]
    own_view = OwnView(
        **_public_fields(state, seat, own),
        hand=tuple(CardView(instance_id=c.instance_id, card_id=c.card_id) for c in own.hand),
        secrets=tuple(
            SecretView(instance_id=s.instance_id, card_id=s.card_id, condition=s.condition)
            for s in own.secrets
        ),
    )
    opponent_view = OpponentView(
        **_public_fields(state, seat.other, opponent),
        secret_count=len(opponent.secrets),
        hand_count=len(opponent.hand),
    )
    options = ()
    if state.result is None and state.active_seat == seat:
        options = tuple(legal_actions(state))
    return Observation(
        viewer=seat,
        active_seat=state.active_seat,
        turn_number=state.turn_number,
        config=state.config,
        own=own_view,
        opponent_visible=opponent_view,
        own_deck_remaining=dict(Counter(c.card_id for c in own.deck)),
        options=options,
        result=state.result,
    )
