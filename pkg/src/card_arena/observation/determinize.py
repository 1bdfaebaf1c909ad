"""
Sampling full game states consistent with an observation, for search agents.

The sampler is naive: hidden opponent cards are drawn uniformly,
with replacement, from the opponent's class pool plus Neutral cards, without
inferring anything from deck-building rules or previously seen cards.
"""

from typing import Iterable, Optional

from ..engine.rng import GameRng
from ..engine.state import (
    CardInstance,
    GameState,
    MinionInstance,
    PlayerState,
    SecretInstance,
    WeaponState,
)
from ..errors import InconsistentObservation
from ..models.cards import CardDefinition, CardSet
from ..models.observation import MinionView, Observation, OpponentView, OwnView, WeaponView


def _card(card_set: CardSet, card_id: str) -> CardDefinition:
    if card_id not in card_set:
        raise InconsistentObservation(f"card {card_id!r} is not in card set {card_set.version!r}")
    return card_set.cards[card_id]


def _minion(card_set: CardSet, view: MinionView) -> MinionInstance:
    return MinionInstance(
        instance_id=view.instance_id,
        card_id=view.card_id,
        base_attack=view.base_attack,
        base_health=view.base_health,
        max_health=view.max_health,
        attack_bonus=view.attack_bonus,
        damage=view.damage,
        exhausted=view.exhausted,
        attacks_this_turn=view.attacks_this_turn,
        taunt=view.taunt,
        token=view.token,
        tribe=_card(card_set, view.card_id).tribe,
    )


def _weapon(weapon: Optional[WeaponView], instance_id: int) -> Optional[WeaponState]:
    if weapon is None:
        return None
    return WeaponState(instance_id, weapon.card_id, weapon.attack, weapon.durability)


def _public_player(
    card_set: CardSet, view: OwnView | OpponentView, weapon_id: int
) -> PlayerState:
    return PlayerState(
        hero_class=view.hero_class,
        hero_health=view.hero_health,
        hero_power_used=view.hero_power_used,
        hero_attacked=view.hero_attacked,
        weapon=_weapon(view.weapon, weapon_id),
        mana_current=view.mana_current,
        mana_max=view.mana_max,
        fatigue_counter=view.fatigue_counter,
        board=[_minion(card_set, m) for m in view.board],
        graveyard=[
            CardInstance(c.instance_id, _card(card_set, c.card_id).id) for c in view.graveyard
        ],
    )


def _max_id(obs: Observation) -> int:
    ids: list[int] = [0]
    for view in (obs.own, obs.opponent_visible):
        ids.extend(m.instance_id for m in view.board)
        ids.extend(c.instance_id for c in view.graveyard)
    ids.extend(c.instance_id for c in obs.own.hand)
    ids.extend(s.instance_id for s in obs.own.secrets)
    return max(ids)


def _count_cards(player: PlayerState) -> int:
    total = len(player.deck) + len(player.hand) + len(player.graveyard) + len(player.secrets)
    total += sum(1 for m in player.board if not m.token)
    return total + (player.weapon is not None)


def determinize(obs: Observation, card_set: CardSet, rng_seed: int) -> GameState:
    """
    A full state consistent with ``obs``: the viewer's zones are rebuilt
    exactly (deck reshuffled from the multiset), the opponent's hidden zones
    are sampled. The returned state's generator continues from the sampling
    stream, and it does not record events.
    """
    rng = GameRng(rng_seed)
    own_view, opp_view = obs.own, obs.opponent_visible

    if sum(obs.own_deck_remaining.values()) != own_view.deck_count:
        raise InconsistentObservation("own deck multiset does not match the deck count")

    state = GameState(
        card_set=card_set,
        config=obs.config,
        players=(
            PlayerState(own_view.hero_class),
            PlayerState(opp_view.hero_class),
        ),
        rng=rng,
        seed=rng_seed,
        turn_number=obs.turn_number,
        active_seat=obs.active_seat,
        result=obs.result,
        next_instance_id=_max_id(obs) + 1,
        record_events=False,
    )

    weapon_ids = (
        state.allocate_id() if own_view.weapon else 0,
        state.allocate_id() if opp_view.weapon else 0,
    )
    own = _public_player(card_set, own_view, weapon_ids[0])
    own.hand = [CardInstance(c.instance_id, _card(card_set, c.card_id).id) for c in own_view.hand]
    own.secrets = [
        SecretInstance(s.instance_id, _card(card_set, s.card_id).id, s.condition)
        for s in own_view.secrets
    ]
    remaining = [
        CardInstance(state.allocate_id(), _card(card_set, card_id).id)
        for card_id, count in obs.own_deck_remaining.items()
        for _ in range(count)
    ]
    own.deck = rng.shuffled(remaining)

    opponent = _public_player(card_set, opp_view, weapon_ids[1])
    pool = card_set.collectible_pool(opp_view.hero_class)
    hidden = opp_view.hand_count + opp_view.deck_count
    if hidden and not pool:
        raise InconsistentObservation(f"no collectible cards for {opp_view.hero_class}")
    opponent.hand = list(_sample(state, pool, opp_view.hand_count))
    opponent.deck = list(_sample(state, pool, opp_view.deck_count))
    secrets = card_set.secrets_pool(opp_view.hero_class)
    if opp_view.secret_count > len(secrets):
        raise InconsistentObservation(
            f"{opp_view.secret_count} secrets but only {len(secrets)} distinct secret cards"
        )
    if opp_view.secret_count:
        picked = rng.permutation(len(secrets))[: opp_view.secret_count]
        opponent.secrets = [
            SecretInstance(state.allocate_id(), secrets[i].id, secrets[i].secret_condition)
            for i in picked
        ]

    seat = obs.viewer
    players = [None, None]
    players[seat], players[seat.other] = own, opponent
    for player in players:
        player.deck_size = _count_cards(player)
    state.players = (players[0], players[1])
    return state


def _sample(state: GameState, pool: list[CardDefinition], count: int) -> Iterable[CardInstance]:
    for _ in range(count):
        card = pool[state.rng.integer(len(pool))]
        yield CardInstance(state.allocate_id(), card.id)
