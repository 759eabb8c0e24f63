"""Invariants of relatively free left-nilpotent right-symmetric algebras."""

__version__ = "0.1.0"
