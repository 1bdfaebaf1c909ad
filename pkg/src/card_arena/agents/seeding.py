"""
Deterministic seed derivation for the search agents.
"""

import hashlib

import numpy as np

_WORD = 2**63


def seed_stream(*parts: int) -> np.random.SeedSequence:
    """An independent generator stream for a tuple of integers (any sign)."""
    return np.random.SeedSequence([part % _WORD for part in parts])


def derive_seed(*parts: int) -> int:
    """A 63-bit seed determined by ``parts``."""
    return int(seed_stream(*parts).generate_state(1, np.uint64)[0]) % _WORD


def observation_digest(canonical_json: str) -> int:
    """Stable 63-bit digest of a canonical observation."""
    digest = hashlib.sha256(canonical_json.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") % _WORD
