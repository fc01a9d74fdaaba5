"""Numerical tolerances and limits shared by the floating-point modules."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    tau_sum: float = 1e-12  # per prefix-term slack for sum comparisons
    tau_log: float = 1e-10  # absolute slack on log prefix sums
    tau_sv: float = 1e-9  # relative to the input norm
    tau_eig: float = 1e-8  # relative to the input norm
    tau_recon: float = 1e-10  # relative to the input norm
    eps_prod: float = 1e-300  # entries at or below are exact zeros in products
    desk_limit: int = 64  # largest matrix dimension accepted
    lambda_max: int = 64
    l_max: int = 8

    def with_overrides(self, **kwargs) -> "Tolerances":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs)


DEFAULT = Tolerances()
