"""Momentum-space hydrogenic wavefunctions and their consistency checks.

The radial momentum amplitude of a bound state (n, l) is an ultraspherical
polynomial in x = (k^2 - kappa^2)/(k^2 + kappa^2), weighted by an algebraic
envelope.  This script samples a few states, counts their radial nodes,
confirms unit normalization, and shows the closed form agreeing with the
direct Bessel transform of the position-space wavefunction.
"""

import math

import numpy as np

from hydromom import QuantumState, momentum_radial, position_radial
from hydromom.quadrature import power_moment
from hydromom.wavefun import momentum_norm_exact, momentum_radial_numeric

print("=" * 72)
print("momentum-space amplitudes")
print("=" * 72)

for n, l in [(1, 0), (2, 0), (3, 2)]:
    state = QuantumState(n, l)
    kappa = 1.0 / n
    k = np.linspace(0.0, 4.0 * kappa, 9)
    values = momentum_radial(state, kappa, k)
    print(f"\nstate (n={n}, l={l}), kappa = 1/{n}:")
    for kk, v in zip(k, values):
        bar = "#" * int(min(40, abs(v) / 6.0)) or "."
        print(f"  k = {kk:6.3f}   P = {v:12.4f}  {bar}")

print("\nradial node counts (sign changes in k):")
for n, l in [(2, 0), (4, 1), (6, 3)]:
    kappa = 1.0 / n
    k = np.geomspace(1e-3 * kappa, 50.0 * kappa, 3001)
    v = momentum_radial(QuantumState(n, l), kappa, k)
    flips = int(np.sum(np.sign(v[1:]) * np.sign(v[:-1]) < 0))
    print(f"  (n={n}, l={l}): {flips} nodes (expected n - l - 1 = {n - l - 1})")

print("\nnormalization integral |P|^2 k^2 dk / (8 pi^3):")
for n, l in [(1, 0), (5, 2), (12, 7)]:
    numeric = power_moment(QuantumState(n, l), 0.0).value
    exact = momentum_norm_exact(QuantumState(n, l))
    print(f"  (n={n}, l={l}): quadrature = {numeric:.14f}, exact identity = {exact}")

print("\nclosed form vs direct Bessel transform of the position wavefunction:")
for n, l in [(1, 0), (3, 1), (6, 5)]:
    state = QuantumState(n, l)
    kappa = 1.0 / n
    for k in (0.5 * kappa, 3.0 * kappa):
        a = momentum_radial(state, kappa, k)
        b = momentum_radial_numeric(state, kappa, k)
        print(f"  (n={n}, l={l}) at k={k:0.4f}: closed {a:+.10e}, transform {b:+.10e}")

print("\nposition-space amplitude for the ground state (decays like e^-r):")
r = np.linspace(0.0, 6.0, 7)
for rr, v in zip(r, position_radial(QuantumState(1, 0), 1.0, r)):
    print(f"  r = {rr:4.1f}   R = {v:8.5f}")
