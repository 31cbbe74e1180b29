"""
Yield of a contaminated entangled pair, and catalytic rate gains
================================================================
"""

import numpy as np

from entbounds import catalytic_rate, eta_continuity_scan, maximally_mixed

# contaminate the perfect pair with a maximally mixed component
rows = eta_continuity_scan(maximally_mixed(2, 2), np.logspace(-4, -1, 10))
print("certified distillation yield of the contaminated pair")
for row in rows:
    print(f"  eps = {row.epsilon:.2e}  yield = {row.value:.8f}")
print()

# borrowing entanglement and returning it intact boosts the conversion rate
record = catalytic_rate(delta=0.1, ec_sigma=0.5, ed_rho_p=0.25)
print("catalyst weight p:", record.p)
print("rate exponent k:", record.k)
print("rate multiplier:", record.factor)

balanced = catalytic_rate(delta=0.3, ec_sigma=0.4, ed_rho_p=0.4)
print("balanced resource, multiplier:", balanced.factor)
