"""First-order energy shifts of the inverse-momentum perturbation.

A Born-reciprocity correction adds -alpha b / P to the Coulomb Hamiltonian
(b a tiny momentum-per-length scale).  At first order each level moves by
-alpha b <1/P>_nl = -alpha b (n a/hbar) <hbar kappa/P>_nl, so the shift grows
with n and is largest at the lowest l: exactly the states a log-growing
<1/P> disrupts most.  The classical effective potential develops a maximum
at E0 = b L - 2 alpha sqrt(b L), below zero while b L < 4 alpha^2.
"""

from hydromom import PhysicalScales, QuantumState
from hydromom.physics import effective_potential_max, energy_shift, inv_p_physical

scales = PhysicalScales(a=1.0, hbar=1.0, alpha=1.0, b=1e-6)

print("=" * 72)
print(f"first-order shifts at alpha = 1, b = {scales.b:g} (atomic-style units)")
print("=" * 72)
print(f"{'n':>3} {'l':>3} {'<1/P>':>12} {'shift':>14}")
for n in (1, 2, 3, 6, 10):
    for l in sorted({0, n // 2, n - 1}):
        st = QuantumState(n, l)
        print(
            f"{n:>3} {l:>3} {inv_p_physical(st, scales):>12.5f} {energy_shift(st, scales):>14.4e}"
        )

print("\nat fixed n the shift magnitude decreases with l (low-l most disrupted):")
for l in range(6):
    print(f"  (n=6, l={l}): {energy_shift(QuantumState(6, l), scales):.6e}")

print("\nclassical effective-potential maximum E0 = bL - 2 alpha sqrt(bL):")
alpha = 1.0
for bl in (0.01, 0.25, 1.0, 4.41, 9.0):
    e0 = effective_potential_max(bl / 1e-6, alpha, 1e-6)
    sign = "below zero" if e0 < 0 else "above zero"
    print(f"  bL = {bl:5.2f}: E0 = {e0:+.4f}  ({sign}; threshold bL = 4 alpha^2 = {4*alpha**2})")
