"""Golay code, Parker loop, Leech lattice mod 2, the group N_0, and the
reduction of 2A axes modulo 15."""

from __future__ import annotations

from .leech2 import LeechMod2
from .group_n0 import N0Element
from .axis_engine import AxisVector, OrbitClassifier
from .frame_reduce import ReductionTrace

__all__ = ["LeechMod2", "N0Element", "AxisVector", "OrbitClassifier", "ReductionTrace"]
__version__ = "0.1.0"
