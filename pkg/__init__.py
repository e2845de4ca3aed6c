"""
Categorical Quantum Protocols Package

This package provides exact verification of quantum protocols in strongly
compact closed categories with biproducts, realized as matrices over the
Boolean semiring and over Q(i, √2): teleportation, logic-gate teleportation,
CNOT teleportation, entanglement swapping, the Born rule and the lemma suite
behind them.
"""

from .base_verifier import BaseVerifier
from .matrix_morphisms import Morphism
from .abstract_qm import Basis, BornRuleVerifier, DimensionVerifier, SpectralDecomposition
from .teleportation_base import BellBase, TeleportationBase
from .protocols import (
    CnotTeleportationVerifier,
    EntanglementSwapVerifier,
    GateTeleportationVerifier,
    RelSearchVerifier,
    TeleportationVerifier,
)
from .lemma_suite import LemmaSuiteVerifier

__all__ = [
    "BaseVerifier",
    "Morphism",
    "Basis",
    "BornRuleVerifier",
    "DimensionVerifier",
    "SpectralDecomposition",
    "BellBase",
    "TeleportationBase",
    "TeleportationVerifier",
    "GateTeleportationVerifier",
    "CnotTeleportationVerifier",
    "EntanglementSwapVerifier",
    "RelSearchVerifier",
    "LemmaSuiteVerifier",
]
