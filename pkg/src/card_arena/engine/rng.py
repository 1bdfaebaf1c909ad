"""
Seedable, portable random source for game state.

Algorithm: numpy's PCG64 bit generator seeded through ``SeedSequence(seed)``.
The engine draws from it only via ``integer(n)`` (uniform in ``[0, n)``) and
``permutation(n)``, and in a fixed order: the FIRST seat's deck shuffle, the
SECOND seat's deck shuffle, then one ``integer`` per random target selection
in effect-resolution order.
"""

import copy
from typing import Optional, Sequence, TypeVar

import numpy as np

T = TypeVar("T")

SEED_MODULUS = 2**64


class GameRng:
    __slots__ = ("seed", "_generator")

    def __init__(self, seed: int, generator: Optional[np.random.Generator] = None) -> None:
        self.seed = seed
        self._generator = generator or np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(seed % SEED_MODULUS))
        )

    def integer(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        return int(self._generator.integers(n))

    def permutation(self, n: int) -> list[int]:
        return self._generator.permutation(n).tolist()

    def shuffled(self, items: Sequence[T]) -> list[T]:
        return [items[i] for i in self.permutation(len(items))]

    def state(self) -> dict:
        return self._generator.bit_generator.state

    def clone(self) -> "GameRng":
        return GameRng(self.seed, copy.deepcopy(self._generator))
