"""Numerical expectation values <f(P)> and the integral cross-checks.

Every exact result in this package is shadowed by at least one quadrature
here.  The general expectation value over a bound state (n, l) reduces to a
one-dimensional integral in either of two variables:

* the compact variable x = (k^2-kappa^2)/(k^2+kappa^2) on (-1, 1), where the
  integrand is (1-x^2)^(l+1/2) (1-x) [C_{n-l-1}^{l+1}(x)]^2 f(...), handled
  by Gauss-Jacobi rules;
* the angle theta with k = kappa tan(theta) on (0, pi/2), handled by
  panel-adaptive Gauss-Legendre.

For a power law f(p) = p^s the full endpoint behavior folds into the Jacobi
weight exponents (l + 3/2 - s/2 at x -> 1 and l + 1/2 + s/2 at x -> -1),
leaving a polynomial integrand that the rule integrates to machine accuracy.
The same exponents give the validity window: the moment exists iff both
exceed -1, i.e. -2l - 3 < s < 2l + 5, and requests outside it are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import roots_jacobi

from .exact import PiGradedRational
from .specfun import chebyshev_u, gegenbauer, legendre_p
from .wavefun import QuantumState, momentum_radial

__all__ = [
    "QuadratureSpec",
    "ExpectationResult",
    "DivergentMomentError",
    "ConvergenceError",
    "CrossCheckError",
    "expectation_f",
    "power_moment",
    "inv_p_numeric",
    "inv_p_numeric_x",
    "inv_p_numeric_theta",
    "swave_kernel_integral",
    "double_integral_rep",
    "METHODS",
]

METHODS = frozenset(
    {"closed_form", "series-connection", "series-compact", "quadrature", "double_integral"}
)


class DivergentMomentError(ValueError):
    """A requested momentum power falls outside the convergent window."""


class ConvergenceError(RuntimeError):
    """Adaptive refinement failed to meet the requested tolerance."""

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved estimate {achieved:.3e})")
        self.achieved = achieved


class CrossCheckError(RuntimeError):
    """Two independent integration routes disagree beyond tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Rule family, node budget, tolerance and variable substitution."""

    rule: str = "gauss_jacobi"
    nodes: int = 96
    rel_tol: float = 1e-12
    substitution: str = "x_variable"
    jacobi_alpha: Optional[float] = None
    jacobi_beta: Optional[float] = None

    def __post_init__(self) -> None:
        if self.rule not in {"gauss_legendre", "gauss_jacobi", "gauss_laguerre", "adaptive_panels"}:
            raise ValueError(f"unknown rule {self.rule!r}")
        if self.substitution not in {"x_variable", "theta_variable", "k_variable"}:
            raise ValueError(f"unknown substitution {self.substitution!r}")
        if self.nodes < 2:
            raise ValueError("need at least 2 nodes")
        if self.rel_tol < 1e-14:
            raise ValueError("rel_tol below 1e-14 is not resolvable in double precision")
        for exponent in (self.jacobi_alpha, self.jacobi_beta):
            if exponent is not None and exponent <= -1:
                raise ValueError("Jacobi exponents must exceed -1")


@dataclass(frozen=True)
class ExpectationResult:
    """A computed expectation value with its provenance and error estimate.

    When the exact value is attached, the float must sit within the error
    estimate of it (checked at construction).
    """

    value: float
    method: str
    err_estimate: float
    exact: Optional[PiGradedRational] = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.err_estimate < 0:
            raise ValueError("error estimate must be nonnegative")
        if self.exact is not None and abs(self.value - self.exact.to_float()) > self.err_estimate:
            raise ValueError("float value inconsistent with attached exact value")


def default_spec(state: QuantumState, substitution: str = "x_variable") -> QuadratureSpec:
    """Node budget 64 + 8n keeps the folded-weight rules exact with margin."""
    return QuadratureSpec(nodes=64 + 8 * state.n, substitution=substitution)


def _prefactor(state: QuantumState) -> float:
    n, l = state.n, state.l
    return (
        2.0
        * n
        * math.factorial(n - l - 1)
        * (2**l * math.factorial(l)) ** 2
        / (math.pi * math.factorial(n + l))
    )


def _gegenbauer_sq(state: QuantumState, x: np.ndarray) -> np.ndarray:
    c = gegenbauer(state.n - state.l - 1, state.l + 1, x)
    return c * c


def moment_window(l: int) -> tuple[float, float]:
    """Open interval of momentum powers s with a convergent <p^s>."""
    return (-2.0 * l - 3.0, 2.0 * l + 5.0)


def _check_moment(l: int, s: float) -> None:
    # Endpoint exponents of the x-integrand; divergent exactly when <= -1.
    at_plus = l + 1.5 - 0.5 * s
    at_minus = l + 0.5 + 0.5 * s
    if at_plus <= -1 or at_minus <= -1:
        lo, hi = moment_window(l)
        raise DivergentMomentError(
            f"<p^{s}> diverges for l={l}: endpoint exponents ({at_plus}, {at_minus}) "
            f"reach -1; the convergent window is {lo} < s < {hi}"
        )


def _power_moment_x(state: QuantumState, s: float, nodes: int, scale: float) -> float:
    l = state.l
    alpha = l + 1.5 - 0.5 * s
    beta = l + 0.5 + 0.5 * s
    # The residual integrand is the squared polynomial of degree n-l-1, so
    # the rule is exact at n-l nodes; past that, extra nodes only feed in
    # node-generation roundoff (visible at the 1e-11 level by ~200 nodes).
    nodes = min(nodes, state.n - l + 8)
    x, w = roots_jacobi(nodes, alpha, beta)
    return _prefactor(state) * scale**s * float(np.dot(w, _gegenbauer_sq(state, x)))


def _generic_x(state: QuantumState, f: Callable, nodes: int, scale: float) -> float:
    l = state.l
    x, w = roots_jacobi(nodes, l + 0.5, l + 0.5)
    p = scale * np.sqrt((1.0 + x) / (1.0 - x))
    vals = (1.0 - x) * f(p) * _gegenbauer_sq(state, x)
    return _prefactor(state) * float(np.dot(w, vals))


def _adaptive_panels(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    rel_tol: float,
    initial_panels: int = 8,
    nodes_per_panel: int = 24,
    max_doublings: int = 10,
    abs_tol: float = 0.0,
) -> tuple[float, float]:
    """Composite Gauss-Legendre with panel doubling; returns (value, err).

    ``abs_tol`` matters when the integral itself vanishes (orthogonality
    integrals): relative accuracy of zero is unreachable.
    """
    nodes, weights = np.polynomial.legendre.leggauss(nodes_per_panel)
    panels = initial_panels

    def once(num: int) -> float:
        edges = np.linspace(a, b, num + 1)
        mid = 0.5 * (edges[1:] + edges[:-1])
        half = 0.5 * (edges[1:] - edges[:-1])
        t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        w = (half[:, None] * weights[None, :]).ravel()
        return float(np.dot(w, f(t)))

    prev = once(panels)
    for _ in range(max_doublings):
        panels *= 2
        curr = once(panels)
        err = abs(curr - prev)
        if err <= max(rel_tol * abs(curr), abs_tol):
            return curr, err
        prev = curr
    raise ConvergenceError("panel refinement stalled", abs(curr - prev))


def _theta_form(state: QuantumState, f: Callable, rel_tol: float, scale: float) -> tuple[float, float]:
    n, l = state.n, state.l

    def integrand(theta: np.ndarray) -> np.ndarray:
        s2 = np.sin(2.0 * theta)
        c2 = np.cos(2.0 * theta)
        poly = gegenbauer(n - l - 1, l + 1, c2)
        return s2 ** (2 * l + 2) * (1.0 + c2) * poly * poly * f(scale * np.tan(theta))

    value, err = _adaptive_panels(integrand, 0.0, 0.5 * math.pi, rel_tol, initial_panels=max(8, n))
    return 2.0 * _prefactor(state) * value, 2.0 * _prefactor(state) * err


def _k_form(state: QuantumState, f: Callable, rel_tol: float, scale: float) -> tuple[float, float]:
    # Direct route through the wavefunction itself: |P(k)|^2 f k^2/(8 pi^3)
    # on k in (0, inf), compactified by k = kappa tan(theta).  Distinct from
    # the weight forms above, which never evaluate the amplitude.
    kappa = 1.0

    def integrand(theta: np.ndarray) -> np.ndarray:
        k = kappa * np.tan(theta)
        amp = momentum_radial(state, kappa, k)
        jac = kappa / np.cos(theta) ** 2
        return amp * amp * f(scale * k / kappa) * k * k * jac / (8.0 * math.pi**3)

    value, err = _adaptive_panels(
        integrand, 0.0, 0.5 * math.pi * (1.0 - 1e-13), rel_tol, initial_panels=max(8, state.n)
    )
    return value, err


def expectation_f(
    state: QuantumState,
    f: Callable[[np.ndarray], np.ndarray],
    spec: Optional[QuadratureSpec] = None,
    *,
    power: Optional[float] = None,
    scale: float = 1.0,
) -> ExpectationResult:
    """Numeric <f(P)>_{nl} with momenta supplied to ``f`` in units of
    ``scale`` (so the default scale=1.0 means p is measured in hbar*kappa).

    ``f`` must accept numpy arrays.  If ``f`` is a pure power law, pass
    ``power=s`` instead of relying on the callable: the power is folded into
    the Jacobi weight, which makes the rule exact for polynomial-weight
    integrands and enables the divergence guard.  The error estimate is the
    difference against a rerun with 1.5x the nodes (or the last panel
    refinement step for the theta form).
    """
    spec = spec or default_spec(state)
    if power is not None:
        _check_moment(state.l, power)
    if spec.substitution in ("theta_variable", "k_variable"):
        func = (lambda p: p**power) if power is not None and f is None else f
        if func is None:
            raise ValueError("need a callable or a power")
        form = _theta_form if spec.substitution == "theta_variable" else _k_form
        value, err = form(state, func, spec.rel_tol, scale)
        return ExpectationResult(value, "quadrature", err)
    if power is not None:
        value = _power_moment_x(state, power, spec.nodes, scale)
        refined = _power_moment_x(state, power, math.ceil(1.5 * spec.nodes), scale)
    else:
        value = _generic_x(state, f, spec.nodes, scale)
        refined = _generic_x(state, f, math.ceil(1.5 * spec.nodes), scale)
    return ExpectationResult(refined, "quadrature", abs(refined - value))


def power_moment(
    state: QuantumState, s: float, spec: Optional[QuadratureSpec] = None, scale: float = 1.0
) -> ExpectationResult:
    """<p^s> in units of scale^s; rejects s outside (-2l-3, 2l+5)."""
    return expectation_f(state, None, spec, power=s, scale=scale)


def inv_p_numeric_x(state: QuantumState, spec: Optional[QuadratureSpec] = None) -> ExpectationResult:
    """<hbar kappa / P> by the folded Gauss-Jacobi rule in x.

    With s = -1 the weight exponents are (l + 2, l), the residual integrand
    is the squared ultraspherical polynomial, and the rule is exact once the
    node count clears the polynomial degree.
    """
    return power_moment(state, -1.0, spec)


def inv_p_numeric_theta(state: QuantumState, spec: Optional[QuadratureSpec] = None) -> ExpectationResult:
    """<hbar kappa / P> by the adaptive theta-variable form."""
    spec = spec or default_spec(state, substitution="theta_variable")
    if spec.substitution != "theta_variable":
        spec = QuadratureSpec(
            rule=spec.rule, nodes=spec.nodes, rel_tol=spec.rel_tol, substitution="theta_variable"
        )
    return expectation_f(state, lambda p: 1.0 / p, spec)


def inv_p_numeric(state: QuantumState, spec: Optional[QuadratureSpec] = None) -> ExpectationResult:
    """<hbar kappa / P> with both variable forms evaluated and cross-checked.

    The x-form value is returned (it is exact up to roundoff); the error
    estimate includes the disagreement with the theta form, and a
    disagreement beyond 10x the requested tolerance raises CrossCheckError,
    since it can only mean an internal fault.
    """
    spec = spec or default_spec(state)
    res_x = inv_p_numeric_x(state, spec)
    res_t = inv_p_numeric_theta(state, spec)
    gap = abs(res_x.value - res_t.value)
    if gap > 10.0 * spec.rel_tol * max(abs(res_x.value), 1.0):
        raise CrossCheckError(
            f"x-form and theta-form disagree by {gap:.3e} for {state}; "
            f"tolerance budget {10.0 * spec.rel_tol:.1e}"
        )
    return ExpectationResult(res_x.value, "quadrature", max(res_x.err_estimate, gap))


def swave_kernel_integral(nu: int, n: int, spec: Optional[QuadratureSpec] = None) -> float:
    """The S-wave helper integral over (0, pi/2) of
    sin^2(2 n theta) cos^(2 nu + 1)(theta) / sin(theta).

    The integrand is bounded (it vanishes linearly at theta -> 0), but
    oscillates n times, so panels scale with n.  nu in {0, 1} is all the
    recursion ever needs.
    """
    if nu not in (0, 1):
        raise ValueError(f"kernel integral defined for nu in {{0, 1}}, got {nu}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rel_tol = spec.rel_tol if spec else 1e-12

    def integrand(theta: np.ndarray) -> np.ndarray:
        s = np.sin(2.0 * n * theta)
        return s * s * np.cos(theta) ** (2 * nu + 1) / np.sin(theta)

    value, _ = _adaptive_panels(integrand, 0.0, 0.5 * math.pi, rel_tol, initial_panels=max(8, 4 * n))
    return value


def double_integral_rep(state: QuantumState, spec: Optional[QuadratureSpec] = None) -> ExpectationResult:
    """<hbar kappa / P> as the double integral
    (n/pi) * int dx (1+x^2) int dy P_l(y) U_{n-1}(x^2 + (1-x^2) y).

    The integrand is polynomial in both variables, so a tensor
    Gauss-Legendre grid of modest size integrates it exactly.
    """
    n, l = state.n, state.l
    num = max((spec.nodes if spec else 0), n + 4)

    def tensor(npts_x, npts_y) -> float:
        x, wxx = np.polynomial.legendre.leggauss(npts_x)
        y, wyy = np.polynomial.legendre.leggauss(npts_y)
        arg = x[:, None] ** 2 + (1.0 - x[:, None] ** 2) * y[None, :]
        vals = (1.0 + x[:, None] ** 2) * legendre_p(l, y)[None, :] * chebyshev_u(n - 1, arg)
        return n / math.pi * float(wxx @ vals @ wyy)

    value = tensor(num, num)
    refined = tensor(num + 3, num + 3)
    return ExpectationResult(refined, "double_integral", abs(refined - value))
