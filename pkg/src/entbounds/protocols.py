"""Finite-copy conversion protocols and their rate records.

Concentration of pure states into singlets by measuring the type class
of the Schmidt spectrum, hashing yields after depolarization toward a
target Bell state, rate records for mixed-state conversion, and the
rate gain from a catalytic side resource.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import UndefinedRateError
from .linalg import DensityMatrix, mix
from .measures import (
    KIND_LOWER,
    MeasureValue,
    binary_entropy,
    ec_upper,
    ed_lower,
    hashing_yield,
    twirl_to_bell_diagonal,
)
from .states import phi_plus

LOG2 = float(np.log(2.0))


@dataclass(frozen=True)
class YieldCurve:
    protocol: str
    asymptote: float
    points: list[tuple[int, float]]

    def __post_init__(self) -> None:
        ns = [n for n, _ in self.points]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("copy counts must be strictly increasing")
        if any(val < 0 for _, val in self.points):
            raise ValueError("yields must be non-negative")


@dataclass(frozen=True)
class ConversionRate:
    rate: float
    numerator: MeasureValue
    denominator: MeasureValue
    kind: str


@dataclass(frozen=True)
class EtaScanRow:
    epsilon: float
    value: float


@dataclass(frozen=True)
class CatalyticRate:
    delta: float
    ec_sigma: float
    ed_rho_p: float
    p: float
    k: float
    factor: float


def _check_distribution(weights: np.ndarray) -> np.ndarray:
    weights = np.asarray(weights, dtype=float).ravel()
    if weights.size == 0:
        raise ValueError("distribution must have at least one entry")
    if np.any(weights < -1e-12):
        raise ValueError("distribution entries must be non-negative")
    total = float(np.sum(weights))
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"distribution must sum to 1, got {total}")
    return np.clip(weights, 0.0, None) / total


def concentration_yield(schmidt_squares, n: int) -> float:
    """Expected singlets per copy from an n-copy type-class measurement.

    The expected log of the multinomial coefficient splits over the
    marginals: E[log2 C(n; k)] = log2 n! - sum_i E[log2 k_i!] with
    k_i ~ Binomial(n, lambda_i), which is exact and linear in the
    number of Schmidt terms.
    """
    lam = _check_distribution(schmidt_squares)
    if n < 1:
        raise ValueError("n must be a positive integer")
    ks = np.arange(n + 1)
    log2_fact = gammaln(ks + 1.0) / LOG2
    expected = gammaln(n + 1.0) / LOG2
    for li in lam:
        if li == 0.0:
            continue
        if li == 1.0:
            expected -= log2_fact[n]
            continue
        logs = (
            gammaln(n + 1.0)
            - gammaln(ks + 1.0)
            - gammaln(n - ks + 1.0)
            + ks * np.log(li)
            + (n - ks) * np.log1p(-li)
        )
        expected -= float(np.exp(logs) @ log2_fact)
    return float(max(expected / n, 0.0))


def concentration_curve(schmidt_squares, n_list) -> YieldCurve:
    lam = _check_distribution(schmidt_squares)
    asymptote = float(-np.sum(lam[lam > 0] * np.log2(lam[lam > 0])))
    points = [(int(n), concentration_yield(lam, int(n))) for n in n_list]
    return YieldCurve(
        protocol="type_class_measurement", asymptote=asymptote, points=points
    )


def conversion_rate(
    rho: DensityMatrix, sigma: DensityMatrix, budget: int = 2000, seed: int = 0
) -> ConversionRate:
    """Lower bound on copies of sigma reachable per copy of rho.

    Distill rho, then dilute into sigma: the ratio ed_lower(rho) over
    ec_upper(sigma) survives as a rate lower bound.  Vacuous bounds on
    either side leave the ratio undefined.
    """
    num = ed_lower(rho)
    den = ec_upper(sigma, budget=budget, seed=seed)
    if num.value <= 0.0:
        raise UndefinedRateError("distillable lower bound on rho is vacuous (0)")
    if den.value <= 0.0:
        raise UndefinedRateError("cost upper bound on sigma is 0; rate diverges")
    return ConversionRate(
        rate=num.value / den.value, numerator=num, denominator=den, kind=KIND_LOWER
    )


def eta_continuity_scan(xi: DensityMatrix, eps_grid) -> list[EtaScanRow]:
    """Hashing yield of (1-eps) phi_plus + eps xi over a grid of eps.

    The yield of the twirled state is 1 - H(probs) clamped at 0, so the
    curve decays continuously from 1 as the contamination grows.
    """
    if (xi.dim_a, xi.dim_b) != (2, 2):
        raise ValueError("contamination state must be two-qubit")
    target = phi_plus().to_density_matrix()
    rows = []
    for eps in eps_grid:
        eps = float(eps)
        if not 0.0 < eps <= 1.0:
            raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
        probs = twirl_to_bell_diagonal(mix(target, xi, eps))
        rows.append(EtaScanRow(epsilon=eps, value=hashing_yield(probs).value))
    return rows


def catalytic_rate(delta: float, ec_sigma: float, ed_rho_p: float) -> CatalyticRate:
    """Rate gain from mixing weight delta of a side resource sigma.

    Choosing p so that the sigma content pays for itself gives
    p = (delta/ec) / (1 + delta/ec) and a net factor 1 + delta * k
    with k = 1/ec - 1/ed, an improvement whenever sigma is cheaper to
    create than the mixture is to distill.
    """
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    if ec_sigma <= 0.0:
        raise ValueError("ec_sigma must be positive")
    if ed_rho_p <= 0.0:
        raise ValueError("ed_rho_p must be positive")
    ratio = delta / ec_sigma
    p = ratio / (1.0 + ratio)
    k = 1.0 / ec_sigma - 1.0 / ed_rho_p
    factor = 1.0 + delta * k
    return CatalyticRate(
        delta=delta, ec_sigma=ec_sigma, ed_rho_p=ed_rho_p, p=p, k=k, factor=factor
    )
