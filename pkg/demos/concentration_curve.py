"""
Finite-copy concentration yield approaching the entropy
=======================================================
"""

import numpy as np

from entbounds import concentration_curve, concentration_yield

lam = [0.5, 0.5]
curve = concentration_curve(lam, [2 ** k for k in range(1, 17, 3)])
print("flat Schmidt weights, asymptote", curve.asymptote)
for n, value in curve.points:
    print(f"  n = {n:>6}  yield/copy = {value:.10f}")
print()

# a skewed example: entropy well below one ebit
lam = np.array([0.85, 0.12, 0.03])
h = float(-(lam * np.log2(lam)).sum())
print("skewed weights, entropy", h)
for n in (16, 256, 4096, 65536):
    y = concentration_yield(lam, n)
    print(f"  n = {n:>6}  yield/copy = {y:.10f}  gap = {h - y:.2e}")
