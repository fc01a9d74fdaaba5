"""Majorization orders, spectral checks and exact dyadic counterexamples."""

from .config import DEFAULT, Tolerances
from .dyadic import DyadicStepSeq, Interval
from .ideals import PrincipalIdealModel
from .orders import OrderVerdict, Status
from .spectral import RingroseSplit, SpectralError

__version__ = "0.1.0"

__all__ = [
    "DEFAULT",
    "Tolerances",
    "DyadicStepSeq",
    "Interval",
    "PrincipalIdealModel",
    "OrderVerdict",
    "Status",
    "RingroseSplit",
    "SpectralError",
    "__version__",
]
