"""Trace-distance balls, mixing corridors and border scans.

The central object is a ball of states around a distillable center.
Sampled extrema of the distillation lower bound and the creation-cost
upper bound over the ball give a gap ratio r, a corridor coefficient
kappa(p) and a Lipschitz ceiling delta that bounds how fast any measure
wedged between the two surrogates can move inside the ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BallNotCertifiedError, EntboundsError, StateValidityError
from .linalg import DensityMatrix, mix, trace_distance
from .measures import DEFAULT_EOF_BUDGET, ec_upper, ed_lower, eof_2x2, eof_upper_general, is_ppt, log_negativity
from .sampling import ensure_rng, random_density_matrix
from .states import isotropic_2x3, werner

MAX_DIRECTION_RETRIES = 200


@dataclass(frozen=True)
class BallSpec:
    """Seeded sampling plan for a trace-distance ball around a center."""

    center: DensityMatrix
    epsilon: float
    sample_count: int
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in (0, 1], got {self.epsilon}")
        if self.sample_count < 1:
            raise ValueError("sample_count must be a positive integer")


@dataclass(frozen=True)
class BallConstants:
    ed_min_lower: float
    ec_max_upper: float
    r: float
    delta: float
    epsilon: float
    provenance: str
    reversible: bool


@dataclass(frozen=True)
class CorridorRow:
    p: float
    kappa: float
    scaled_ed_center: float
    ec_mixture: float
    margin_center_side: float
    scaled_ed_mixture: float
    ec_center: float
    margin_mixture_side: float
    passed: bool
    reverse_mix_available: bool


@dataclass(frozen=True)
class CorridorReport:
    rows: list[CorridorRow]
    all_passed: bool
    tolerance: float


@dataclass(frozen=True)
class BorderRow2x2:
    param: float
    eof: float
    log_neg: float
    ppt_margin: float


@dataclass(frozen=True)
class BorderRow2xN:
    param: float
    log_neg: float
    ppt_margin: float
    eof_upper: float | None = None


def surface_count(sample_count: int) -> int:
    """How many leading samples sit exactly on the ball surface."""
    return max(1, sample_count // 10)


def sample_ball(spec: BallSpec) -> list[DensityMatrix]:
    """Draw spec.sample_count states with T(center, state) <= epsilon.

    Random full-rank directions are rescaled along the segment toward
    the center so the trace distance lands exactly at u * epsilon.  The
    leading surface_count() samples use u = 1 (they sit on the surface
    and double as directions for mixture families); the rest draw u
    uniformly from (0, 1].  The draw sequence does not depend on
    epsilon, so shrinking the radius under a fixed seed rescales the
    same sample set along the same rays.
    """
    rng = ensure_rng(spec.seed)
    center = spec.center
    n_surface = surface_count(spec.sample_count)
    samples: list[DensityMatrix] = []
    for index in range(spec.sample_count):
        for _ in range(MAX_DIRECTION_RETRIES):
            direction = random_density_matrix(center.dim_a, center.dim_b, seed=rng)
            u = 1.0 if index < n_surface else 1.0 - rng.random()
            t0 = trace_distance(center, direction)
            if t0 < 1e-12:
                continue
            s = u * spec.epsilon / t0
            if s > 1.0:
                continue
            samples.append(mix(center, direction, s))
            break
        else:
            raise EntboundsError(
                f"could not place ball sample {index} after "
                f"{MAX_DIRECTION_RETRIES} direction draws"
            )
    return samples


def _default_ed(state: DensityMatrix) -> float:
    return ed_lower(state).value


def _make_ec(budget: int, seed: int) -> Callable[[DensityMatrix], float]:
    def ec(state: DensityMatrix) -> float:
        return ec_upper(state, budget=budget, seed=seed).value

    return ec


def ball_constants(
    spec: BallSpec,
    samples: Sequence[DensityMatrix] | None = None,
    ed_fn: Callable[[DensityMatrix], float] | None = None,
    ec_fn: Callable[[DensityMatrix], float] | None = None,
    budget: int = DEFAULT_EOF_BUDGET,
    conservative: bool = False,
) -> BallConstants:
    """Sampled surrogate extrema over the ball and the derived constants.

    The minimum of the distillation lower bound and the maximum of the
    cost upper bound run over the center plus the samples.  They are
    estimates of the true extrema, hence provenance "sampled"; the
    conservative mode widens both by an empirical Lipschitz estimate
    times the radius, which may lose certification on wide balls.
    """
    ed_fn = ed_fn or _default_ed
    ec_fn = ec_fn or _make_ec(budget, spec.seed)
    if samples is None:
        samples = sample_ball(spec)
    ed_center = ed_fn(spec.center)
    if ed_center <= 0.0:
        raise BallNotCertifiedError(
            "center has vacuous distillation lower bound; shrink epsilon "
            "or pick a certified-distillable center"
        )
    ec_center = ec_fn(spec.center)
    ed_values = [ed_center]
    ec_values = [ec_center]
    for index, state in enumerate(samples):
        ed_value = ed_fn(state)
        if ed_value <= 0.0:
            raise BallNotCertifiedError(
                f"sample {index} has vacuous distillation lower bound; "
                "the ball leaves the certified-distillable region",
                sample_index=index,
            )
        ed_values.append(ed_value)
        ec_values.append(ec_fn(state))
    ed_min = min(ed_values)
    ec_max = max(ec_values)
    provenance = "sampled"
    if conservative:
        slopes_ed = []
        slopes_ec = []
        for state, ed_value, ec_value in zip(samples, ed_values[1:], ec_values[1:]):
            t = trace_distance(spec.center, state)
            if t < 1e-13:
                continue
            slopes_ed.append(abs(ed_value - ed_center) / t)
            slopes_ec.append(abs(ec_value - ec_center) / t)
        widen_ed = max(slopes_ed, default=0.0) * spec.epsilon
        widen_ec = max(slopes_ec, default=0.0) * spec.epsilon
        ed_min = ed_min - widen_ed
        ec_max = ec_max + widen_ec
        provenance = "sampled_conservative"
        if ed_min <= 0.0:
            raise BallNotCertifiedError(
                "conservative widening drops the distillation floor to 0; "
                "shrink epsilon or add samples"
            )
    ed_min = float(ed_min)
    ec_max = float(ec_max)
    r = min(ed_min / ec_max, 1.0)
    reversible = r == 1.0
    delta = 0.0 if reversible else ec_max * (1.0 - r) / r
    return BallConstants(
        ed_min_lower=ed_min,
        ec_max_upper=ec_max,
        r=r,
        delta=delta,
        epsilon=spec.epsilon,
        provenance=provenance,
        reversible=reversible,
    )


def kappa(p: float, r: float) -> float:
    """p / (p + r/(1-r)), the corridor coefficient; 0 by convention at r = 1.

    The algebraically equal form p(1-r) / (p(1-r) + r) avoids the
    intermediate r/(1-r) blowup for r near 1, and the endpoint branches
    keep kappa(0, r) = 0 and kappa(1, r) = 1 - r exact.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r}")
    if r == 1.0 or p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0 - r
    scaled = p * (1.0 - r)
    return scaled / (scaled + r)


def lipschitz_bound(
    center: DensityMatrix,
    other: DensityMatrix,
    constants: BallConstants,
    epsilon: float | None = None,
) -> float:
    """delta / epsilon times T(center, other) for states inside the ball."""
    epsilon = constants.epsilon if epsilon is None else float(epsilon)
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    t = trace_distance(center, other)
    if t > epsilon + 1e-9:
        raise ValueError(
            f"state lies outside the ball: T = {t} exceeds epsilon = {epsilon}"
        )
    return constants.delta / epsilon * t


def corridor_consistency_check(
    center: DensityMatrix,
    sigma_surface: DensityMatrix,
    constants: BallConstants,
    p_grid,
    ed_fn: Callable[[DensityMatrix], float] | None = None,
    ec_fn: Callable[[DensityMatrix], float] | None = None,
    budget: int = DEFAULT_EOF_BUDGET,
    seed: int = 0,
    tolerance: float = 1e-9,
) -> CorridorReport:
    """Check the two-sided surrogate corridor along the mixture family.

    For each p the mixture rho_p = (1-p) center + p sigma_surface must
    satisfy (1 - kappa(p)) * ed_lower(center) <= ec_upper(rho_p) and
    the same with center and rho_p swapped, both up to the tolerance.
    Any true asymptotic measure is wedged between the two surrogates,
    so a violation indicts the implementation rather than the bound.
    The reverse_mix_available flag records whether the affine extension
    past the center (weight p - 1) still lands on a valid state.
    """
    ed_fn = ed_fn or _default_ed
    ec_fn = ec_fn or _make_ec(budget, seed)
    ed_center = ed_fn(center)
    ec_center = ec_fn(center)
    rows = []
    for p in p_grid:
        p = float(p)
        rho_p = mix(center, sigma_surface, p)
        kap = kappa(p, constants.r)
        scale = 1.0 - kap
        ec_mixture = ec_fn(rho_p)
        ed_mixture = ed_fn(rho_p)
        margin_center = float(ec_mixture - scale * ed_center)
        margin_mixture = float(ec_center - scale * ed_mixture)
        try:
            mix(center, sigma_surface, p - 1.0)
            reverse_available = True
        except StateValidityError:
            reverse_available = False
        rows.append(
            CorridorRow(
                p=p,
                kappa=kap,
                scaled_ed_center=float(scale * ed_center),
                ec_mixture=float(ec_mixture),
                margin_center_side=margin_center,
                scaled_ed_mixture=float(scale * ed_mixture),
                ec_center=float(ec_center),
                margin_mixture_side=margin_mixture,
                passed=bool(margin_center >= -tolerance and margin_mixture >= -tolerance),
                reverse_mix_available=reverse_available,
            )
        )
    return CorridorReport(
        rows=rows, all_passed=all(row.passed for row in rows), tolerance=tolerance
    )


def border_scan_2x2(
    family: Callable[[float], DensityMatrix] | None = None,
    param_grid=None,
) -> list[BorderRow2x2]:
    """Closed-form measures along a parameterized 2x2 path.

    The default family is the Werner path, whose partial transpose
    changes sign at singlet weight 1/3.
    """
    family = family or werner
    grid = np.linspace(0.0, 1.0, 41) if param_grid is None else param_grid
    rows = []
    for param in grid:
        param = float(param)
        state = family(param)
        if not isinstance(state, DensityMatrix):
            raise TypeError("family must produce DensityMatrix values")
        if (state.dim_a, state.dim_b) != (2, 2):
            raise ValueError("family must produce two-qubit states")
        rows.append(
            BorderRow2x2(
                param=param,
                eof=eof_2x2(state).value,
                log_neg=log_negativity(state).value,
                ppt_margin=is_ppt(state).margin,
            )
        )
    return rows


def border_scan_2xn(
    family: Callable[[float], DensityMatrix] | None = None,
    param_grid=None,
    include_eof_search: bool = False,
    budget: int = DEFAULT_EOF_BUDGET,
    seed: int = 0,
) -> list[BorderRow2xN]:
    """Negativity border scan for 2 x N paths; no closed-form cost here.

    The default family mixes a maximally entangled two-qubit block into
    the 2x3 maximally mixed state; its partial transpose changes sign
    at weight 1/4.  The search-based cost bound is off by default since
    it costs seconds per grid point.
    """
    family = family or isotropic_2x3
    grid = np.linspace(0.0, 1.0, 41) if param_grid is None else param_grid
    rows = []
    for param in grid:
        param = float(param)
        state = family(param)
        if not isinstance(state, DensityMatrix):
            raise TypeError("family must produce DensityMatrix values")
        if state.dim_a != 2:
            raise ValueError("family must keep the first party a qubit")
        eof_value = None
        if include_eof_search:
            eof_value = eof_upper_general(state, budget=budget, seed=seed).value
        rows.append(
            BorderRow2xN(
                param=param,
                log_neg=log_negativity(state).value,
                ppt_margin=is_ppt(state).margin,
                eof_upper=eof_value,
            )
        )
    return rows
