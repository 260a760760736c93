"""Crystal combinatorics for symmetrizable Kac-Moody algebras.

Exact-arithmetic implementations of string-data crystals, starred operators,
Saito reflections, highest-weight crystals, and the reflection recursion
relating them, plus a batch verification harness.
"""

from .binf import BInfElement, enumerate_binf
from .cartan import PRESETS, CartanData, RootVector, Weight, Word
from .engine import TheoremTrace, lusztig_params, run_recursion, verify_identity, vertices
from .errors import (
    CrystalError,
    LusztigMismatchError,
    MembershipError,
    NotReducedError,
    PhiMismatchError,
    SaitoDomainError,
    StarShortfallError,
    StuckElementError,
    VertexMismatchError,
)
from .hw import Enumeration, LambdaElement, enumerate_crystal, in_hw_crystal
from .strings import ModelSequence, StringData
from .sweep import Finding, VerificationReport, run_sweep

__all__ = [
    "BInfElement",
    "CartanData",
    "CrystalError",
    "Enumeration",
    "Finding",
    "LambdaElement",
    "LusztigMismatchError",
    "MembershipError",
    "ModelSequence",
    "NotReducedError",
    "PRESETS",
    "PhiMismatchError",
    "RootVector",
    "SaitoDomainError",
    "StarShortfallError",
    "StringData",
    "StuckElementError",
    "TheoremTrace",
    "VerificationReport",
    "VertexMismatchError",
    "Weight",
    "Word",
    "enumerate_binf",
    "enumerate_crystal",
    "in_hw_crystal",
    "lusztig_params",
    "run_recursion",
    "run_sweep",
    "verify_identity",
    "vertices",
]

__version__ = "0.1.0"
