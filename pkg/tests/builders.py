"""
Hand-built game states for rules tests.
"""

from typing import Iterator, Optional, Sequence

import numpy as np

from card_arena.engine import (
    CardInstance,
    GameRng,
    GameState,
    MinionInstance,
    PlayerState,
    SecretInstance,
    WeaponState,
    apply_action,
    legal_actions,
    new_game,
)
from card_arena.models import CardSet, DeckSpec, HeroClass, MatchConfig, Seat


def blank_state(
    card_set: CardSet,
    classes: tuple[HeroClass, HeroClass] = (HeroClass.MAGE, HeroClass.MAGE),
    mana: int = 10,
    turn: int = 5,
    config: Optional[MatchConfig] = None,
    seed: int = 0,
) -> GameState:
    """FIRST seat to move with ``mana`` crystals; empty zones everywhere."""
    state = GameState(
        card_set=card_set,
        config=config or MatchConfig(),
        players=(PlayerState(classes[0]), PlayerState(classes[1])),
        rng=GameRng(seed),
        seed=seed,
        turn_number=turn,
        active_seat=Seat.FIRST,
    )
    for player in state.players:
        player.mana_max = player.mana_current = mana
    return state


def add_minion(
    state: GameState,
    seat: Seat,
    card_id: str,
    *,
    exhausted: bool = False,
    damage: int = 0,
) -> MinionInstance:
    card = state.card_set.get(card_id)
    minion = MinionInstance(
        instance_id=state.allocate_id(),
        card_id=card.id,
        base_attack=card.attack,
        base_health=card.health_or_durability,
        max_health=card.health_or_durability,
        damage=damage,
        exhausted=exhausted,
        taunt=card.taunt,
        token=card.is_token,
        tribe=card.tribe,
    )
    state.players[seat].board.append(minion)
    return _seal(state, minion)


def add_to_hand(state: GameState, seat: Seat, card_id: str) -> int:
    """Returns the new card's hand index."""
    hand = state.players[seat].hand
    hand.append(CardInstance(state.allocate_id(), state.card_set.get(card_id).id))
    _seal(state)
    return len(hand) - 1


def add_to_deck(state: GameState, seat: Seat, card_id: str, count: int = 1) -> None:
    for _ in range(count):
        state.players[seat].deck.append(CardInstance(state.allocate_id(), card_id))
    _seal(state)


def add_secret(state: GameState, seat: Seat, card_id: str) -> SecretInstance:
    card = state.card_set.get(card_id)
    secret = SecretInstance(state.allocate_id(), card.id, card.secret_condition)
    state.players[seat].secrets.append(secret)
    return _seal(state, secret)


def equip(state: GameState, seat: Seat, card_id: str, attack: int, durability: int) -> WeaponState:
    weapon = WeaponState(state.allocate_id(), card_id, attack, durability)
    state.players[seat].weapon = weapon
    return _seal(state, weapon)


def _seal(state: GameState, item=None):
    """Keep the card-conservation count in step with hand-placed cards."""
    for player in state.players:
        player.deck_size = (
            len(player.deck)
            + len(player.hand)
            + len(player.graveyard)
            + len(player.secrets)
            + sum(1 for m in player.board if not m.token)
            + (player.weapon is not None)
        )
    return item


def random_playout(
    card_set: CardSet,
    decks: tuple[DeckSpec, DeckSpec],
    seed: int,
    config: Optional[MatchConfig] = None,
) -> Iterator[GameState]:
    """Every state of one game where both seats pick uniformly among the legal actions."""
    rng = np.random.default_rng(seed)
    state = new_game(decks[0], decks[1], card_set, config or MatchConfig(), seed)
    yield state
    while state.result is None:
        actions = legal_actions(state)
        state = apply_action(state, actions[int(rng.integers(len(actions)))])
        yield state


def deck_pair(decks: Sequence[DeckSpec], index: int) -> tuple[DeckSpec, DeckSpec]:
    """Cycle through all ordered pairs of ``decks``."""
    n = len(decks)
    return decks[index % n], decks[(index // n) % n]
