"""
card-arena: a desk-scale collectible card game engine and AI competition harness.
"""

__version__ = "0.1.0"
