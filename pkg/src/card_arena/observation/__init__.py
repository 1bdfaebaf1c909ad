"""
Partial observations: per-seat masking and determinization.
"""

from .determinize import determinize
from .observe import minion_view, observe

__all__ = ["observe", "determinize", "minion_view"]
