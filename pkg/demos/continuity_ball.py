"""
Certifying a trace-distance ball around an entangled center
===========================================================

Sample the ball, bound the measures over it, and read off the resulting
Lipschitz-style radius for anything sandwiched between the two bounds.
"""

from entbounds import (
    BallSpec,
    ball_constants,
    corridor_consistency_check,
    lipschitz_bound,
    sample_ball,
    werner,
)

import numpy as np

center = werner(0.95)
spec = BallSpec(center=center, epsilon=1e-3, sample_count=100, seed=42)
samples = sample_ball(spec)

constants = ball_constants(spec, samples=samples)
print("ball around werner(0.95), radius 1e-3, 100 samples")
print("  ed over the ball  >=", constants.ed_min_lower)
print("  ec over the ball  <=", constants.ec_max_upper)
print("  bound ratio r      =", constants.r)
print("  deviation cap      =", constants.delta)
print("  reversible regime:", constants.reversible)
print()

report = corridor_consistency_check(
    center, samples[0], constants, np.linspace(0.0, 1.0, 11)
)
print("corridor along a surface ray, all rows passed:", report.all_passed)
print(f"{'p':>5} {'kappa':>10} {'center margin':>15} {'mixture margin':>15}")
for row in report.rows:
    print(
        f"{row.p:5.2f} {row.kappa:10.6f}"
        f" {row.margin_center_side:15.6f} {row.margin_mixture_side:15.6f}"
    )
print()

for sample in samples[:3]:
    cap = lipschitz_bound(center, sample, constants)
    print("measure deviation cap at a surface sample:", cap)
