"""Orthogonal polynomials and gamma-family special functions.

All polynomial families are evaluated by their forward three-term
recurrences, never by expanded coefficients.  That keeps them stable for
degrees in the hundreds and, just as important here, makes them exact when
called with ``fractions.Fraction`` arguments: the ultraspherical recurrence
only ever divides by the degree, so rational in, rational out.

Polynomials of negative degree are identically zero by convention; callers
rely on this (the degree bookkeeping in the expectation-value series produces
degree -1 terms that must silently vanish).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

EULER_GAMMA = 0.5772156649015328606

__all__ = [
    "EULER_GAMMA",
    "PolynomialSpec",
    "gegenbauer",
    "chebyshev_u",
    "legendre_p",
    "laguerre_assoc",
    "spherical_bessel",
    "digamma",
    "digamma_quarter_diff",
    "gamma_ratio_large",
]

_FAMILIES = ("gegenbauer", "chebyshev_u", "legendre_p", "laguerre_assoc")


@dataclass(frozen=True)
class PolynomialSpec:
    """A polynomial family member: family name, degree, and parameter.

    The parameter is the ultraspherical weight exponent or the Laguerre
    order and is ignored by the parameter-free families.  Negative degrees
    evaluate to zero by convention rather than erroring, matching how the
    recurrences below treat them.
    """

    family: str
    degree: int
    parameter: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "gegenbauer" and (self.parameter is None or self.parameter == 0):
            raise ValueError("gegenbauer weight parameter must be nonzero")
        if self.family == "laguerre_assoc" and self.parameter is None:
            raise ValueError("laguerre_assoc needs its order parameter")

    def evaluate(self, x):
        if self.family == "gegenbauer":
            return gegenbauer(self.degree, self.parameter, x)
        if self.family == "chebyshev_u":
            return chebyshev_u(self.degree, x)
        if self.family == "legendre_p":
            return 0.0 if self.degree < 0 else legendre_p(self.degree, x)
        return 0.0 if self.degree < 0 else laguerre_assoc(self.degree, self.parameter, x)


def _is_exact(x) -> bool:
    return isinstance(x, (Fraction, int))


def gegenbauer(n: int, lam, x):
    """Ultraspherical polynomial C_n^lam(x) by forward recurrence.

    Accepts float, Fraction or numpy array ``x``; the result is exact for
    Fraction ``x`` and rational ``lam``.  ``lam`` must be nonzero (the family
    degenerates there); negative ``n`` returns 0.

    Recurrence: k C_k = 2(k+lam-1) x C_{k-1} - (k+2lam-2) C_{k-2}.
    """
    if lam == 0:
        raise ValueError("gegenbauer parameter must be nonzero")
    exact = _is_exact(x) and isinstance(lam, (Fraction, int))
    if not exact:
        lam = float(lam)
        if _is_exact(x):
            x = float(x)
    if n < 0:
        return Fraction(0) if exact else (np.zeros_like(x, dtype=float) if isinstance(x, np.ndarray) else 0.0)
    one = Fraction(1) if exact else (np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0)
    if n == 0:
        return one
    c_prev = one
    c_curr = 2 * lam * x * one if isinstance(x, np.ndarray) else 2 * lam * x
    for k in range(2, n + 1):
        c_prev, c_curr = c_curr, (2 * (k + lam - 1) * x * c_curr - (k + 2 * lam - 2) * c_prev) / k
    return c_curr


def chebyshev_u(n: int, x):
    """Chebyshev polynomial of the second kind, U_n(x); U_{-1} = 0."""
    if n < 0:
        return 0 * x if isinstance(x, np.ndarray) else 0.0
    if n == 0:
        return np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    u_prev = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    u_curr = 2 * x
    for _ in range(2, n + 1):
        u_prev, u_curr = u_curr, 2 * x * u_curr - u_prev
    return u_curr


def legendre_p(ell: int, y):
    """Legendre polynomial P_ell(y), ell >= 0."""
    if ell < 0:
        raise ValueError(f"legendre_p requires ell >= 0, got {ell}")
    if ell == 0:
        return np.ones_like(y, dtype=float) if isinstance(y, np.ndarray) else 1.0
    p_prev = np.ones_like(y, dtype=float) if isinstance(y, np.ndarray) else 1.0
    p_curr = y
    for k in range(2, ell + 1):
        p_prev, p_curr = p_curr, ((2 * k - 1) * y * p_curr - (k - 1) * p_prev) / k
    return p_curr


def laguerre_assoc(n: int, alpha, x):
    """Generalized Laguerre polynomial L_n^alpha(x), n >= 0."""
    if n < 0:
        raise ValueError(f"laguerre_assoc requires n >= 0, got {n}")
    if n == 0:
        return np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    l_prev = np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0
    l_curr = 1 + alpha - x
    for k in range(2, n + 1):
        l_prev, l_curr = l_curr, ((2 * k - 1 + alpha - x) * l_curr - (k - 1 + alpha) * l_prev) / k
    return l_curr


def _double_factorial_odd(ell: int) -> float:
    # (2*ell + 1)!!
    out = 1.0
    for m in range(1, ell + 1):
        out *= 2 * m + 1
    return out


def _sph_bessel_series(ell: int, z: np.ndarray) -> np.ndarray:
    # j_ell(z) = z^ell / (2ell+1)!! * sum_j (-z^2/2)^j / (j! (2ell+3)(2ell+5)...(2ell+2j+1))
    # Converges for all z; used for z <= 8 where cancellation stays mild.
    t = -0.5 * z * z
    term = np.ones_like(z)
    acc = np.ones_like(z)
    for j in range(1, 40):
        term = term * t / (j * (2 * ell + 2 * j + 1))
        acc += term
        if np.all(np.abs(term) <= 1e-18 * np.abs(acc)):
            break
    with np.errstate(invalid="ignore"):
        lead = np.where(z > 0, z, 1.0) ** ell / _double_factorial_odd(ell)
    if ell > 0:
        lead = np.where(z > 0, lead, 0.0)
    return lead * acc


def _sph_bessel_upward(ell: int, z: np.ndarray) -> np.ndarray:
    j0 = np.sin(z) / z
    if ell == 0:
        return j0
    j1 = np.sin(z) / z**2 - np.cos(z) / z
    for m in range(1, ell):
        j0, j1 = j1, (2 * m + 1) / z * j1 - j0
    return j1


def _sph_bessel_downward(ell: int, z: np.ndarray) -> np.ndarray:
    # Miller's algorithm: recurse down from a padded start order with an
    # arbitrary seed, then normalize against j_0 = sin(z)/z.
    start = ell + 24 + int(np.ceil(np.max(z)))
    jp = np.zeros_like(z)  # j at order m+1
    jc = np.full_like(z, 1e-30)  # j at order m
    target = np.zeros_like(z)
    for m in range(start, 0, -1):
        jp, jc = jc, (2 * m + 1) / z * jc - jp
        if m - 1 == ell:
            target = jc.copy()
        big = np.abs(jc) > 1e250
        if np.any(big):
            jc = np.where(big, jc * 1e-250, jc)
            jp = np.where(big, jp * 1e-250, jp)
            target = np.where(big, target * 1e-250, target)
    return target * (np.sin(z) / z) / jc


def spherical_bessel(ell: int, z):
    """Spherical Bessel function j_ell(z) for z >= 0, stable to ell ~ 30.

    Three regimes: a power series for z <= 8 (all orders), upward recurrence
    from sin/cos when z dominates the order, and downward (Miller) recurrence
    when the order dominates z.  j_ell(0) is 1 for ell = 0, else 0.
    """
    if ell < 0:
        raise ValueError(f"spherical_bessel requires ell >= 0, got {ell}")
    scalar = np.isscalar(z)
    zs = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(zs < 0):
        raise ValueError("spherical_bessel requires z >= 0")
    out = np.empty_like(zs)
    small = zs <= 8.0
    if np.any(small):
        out[small] = _sph_bessel_series(ell, zs[small])
    large = ~small
    if np.any(large):
        zl = zs[large]
        up = zl >= ell + 1
        res = np.empty_like(zl)
        if np.any(up):
            res[up] = _sph_bessel_upward(ell, zl[up])
        if np.any(~up):
            res[~up] = _sph_bessel_downward(ell, zl[~up])
        out[large] = res
    return float(out[0]) if scalar else out


# Asymptotic tail of psi(x): log x - 1/2x - sum B_{2k}/(2k x^{2k}).
_DIGAMMA_TAIL = (
    Fraction(1, 12),
    Fraction(-1, 120),
    Fraction(1, 252),
    Fraction(-1, 240),
    Fraction(1, 132),
    Fraction(-691, 32760),
    Fraction(1, 12),
)


def digamma(x: float) -> float:
    """Digamma function psi(x) for x > 0, good to ~14 significant digits.

    Shift-up recurrence psi(x) = psi(x+1) - 1/x until x >= 12, then the
    Stirling-type asymptotic series through x^{-14}.
    """
    x = float(x)
    if x <= 0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for coeff in _DIGAMMA_TAIL:
        tail -= float(coeff) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x + tail


def digamma_quarter_diff(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Exact psi(a) - psi(b) for positive quarter-integer a, b.

    Returns ``(q, c)`` meaning the difference equals ``q + c*pi``.  Works
    whenever the transcendental constants cancel: both fractional parts equal,
    or one from {1/4} and the other from {3/4} (where the reflection
    psi(3/4) - psi(1/4) = pi enters).  Mixing e.g. a half-integer with a
    quarter-integer leaves log-2 terms behind and is rejected.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("arguments must be positive")
    if a.denominator not in (1, 2, 4) or b.denominator not in (1, 2, 4):
        raise ValueError("arguments must be quarter-integers")

    def split(v: Fraction) -> tuple[Fraction, int]:
        frac = v - math.floor(v)
        if frac == 0:  # reduce psi(m) to the psi(1) base via m-1 recurrence steps
            frac = Fraction(1)
            return frac, int(v) - 1
        return frac, int(math.floor(v))

    fa, ma = split(a)
    fb, mb = split(b)
    rational = sum((Fraction(1) / (fa + i) for i in range(ma)), Fraction(0)) - sum(
        (Fraction(1) / (fb + i) for i in range(mb)), Fraction(0)
    )
    if fa == fb:
        return rational, Fraction(0)
    pair = {fa, fb}
    if pair == {Fraction(1, 4), Fraction(3, 4)}:
        pi_coeff = Fraction(1) if fa == Fraction(3, 4) else Fraction(-1)
        return rational, pi_coeff
    raise ValueError(f"difference psi({a}) - psi({b}) is not rational-plus-pi")


def gamma_ratio_large(z: float, a: float, b: float) -> float:
    """Two-term large-z estimate of Gamma(z+a)/Gamma(z+b).

    z^(a-b) * [1 + (a-b)(a+b-1)/(2z)].  The first correction coefficient is
    (a-b)(a+b-1)/2; the (a+b+1) variant that sometimes circulates fails the
    exact check Gamma(z+2)/Gamma(z) = z(z+1) and is off at O(1/z) generally.
    """
    return z ** (a - b) * (1.0 + (a - b) * (a + b - 1) / (2.0 * z))
