"""Physical-units layer: <1/P>, reciprocity energy shifts, potential maximum.

The dimensionless <hbar*kappa/P> converts to <1/P> through the state's
inverse length kappa = 1/(n a):  <1/P> = (n a / hbar) <hbar kappa/P>.  A
reciprocity perturbation -alpha b / P (b a tiny momentum-per-length scale)
then shifts each level at first order by -alpha b <1/P>, which grows
logarithmically with n at fixed low l: the perturbation disrupts high-n,
low-l states the most.  The companion b^2 R^2 term is O(b^2) and ignored.
"""

from __future__ import annotations

import math

from .invp import inv_p_exact
from .wavefun import PhysicalScales, QuantumState

__all__ = ["inv_p_physical", "energy_shift", "effective_potential_max"]


def inv_p_physical(state: QuantumState, scales: PhysicalScales) -> float:
    """<1/P> for a state, in units of 1/momentum."""
    exact, _ = inv_p_exact(state.n, state.l)
    return state.n * scales.a / scales.hbar * exact.to_float()


def energy_shift(state: QuantumState, scales: PhysicalScales) -> float:
    """First-order level shift of the -alpha*b/P perturbation (units: energy)."""
    return -scales.alpha * scales.b * inv_p_physical(state, scales)


def effective_potential_max(angular_momentum: float, alpha: float, b: float) -> float:
    """Maximum of the reciprocity-corrected effective potential, below zero
    whenever b*L < 4 alpha^2:  E0 = b L - 2 alpha sqrt(b L)."""
    if angular_momentum <= 0 or alpha <= 0 or b <= 0:
        raise ValueError("angular momentum, alpha and b must all be positive")
    bl = b * angular_momentum
    return bl - 2.0 * alpha * math.sqrt(bl)
