"""Distinguishability of generic random quantum states.

Samplers for induced-measure states, the limiting spectral laws they obey,
distance and coherence functionals, a coupled kicked-top simulator and a
seeded Monte Carlo harness.
"""

from .errors import ContractError, NumericalError
from .linalg import DensityMatrix, Spectrum
from .ensembles import EnsembleSpec, SeededStream
from .laws import MP, SMP, FussCatalan2, LimitLaw, Semicircle, ShiftedSemicircle
from .kicked_top import KickedTopConfig

__version__ = "0.1.0"

__all__ = [
    "ContractError", "NumericalError", "DensityMatrix", "Spectrum", "EnsembleSpec",
    "SeededStream", "MP", "SMP", "FussCatalan2", "LimitLaw", "Semicircle",
    "ShiftedSemicircle", "KickedTopConfig",
]
