"""
What a negative conditional entropy buys you
============================================
"""

# %%
import numpy as np

from cvenn import isotropic, max_entangled, werner
from cvenn.decompose import pauli_matrices
from cvenn.tasks import (
    UncertaintySetting,
    hashing_bound,
    memory_region,
    merging_report,
    randomness_rates,
    sdc_capacity,
)

states = {
    "bell": max_entangled(2),
    "werner 0.9": werner(0.9),
    "werner 0.7": werner(0.7),
}

# %%
# Dense coding, merging, distillation and randomness all flip at S(A|B) = 0.
for name, rho in states.items():
    print(f"--- {name}")
    print("  dense coding capacity :", round(sdc_capacity(rho).values["capacity"], 4))
    print("  merging cost (qubits) :", round(merging_report(rho).values["cost"], 4))
    print("  hashing bound (ebits) :", round(hashing_bound(rho).values["lower_bound"], 4))
    print("  R_A bound (bits)      :", round(randomness_rates(rho).values["R_A"], 4))

# %%
# Uncertainty with quantum memory, for Z and X measured on A.
pauli = pauli_matrices()
setting = UncertaintySetting(pauli["Z"], pauli["X"])
print("c =", setting.c)
for name, rho in states.items():
    print(name, memory_region(setting, rho).value)

# %%
# Qutrits: entangled isotropic states beat the classical dense-coding limit log2(3).
for alpha in np.linspace(0.6, 1.0, 5):
    print(f"{alpha:.1f}", round(sdc_capacity(isotropic(alpha, 3)).values["capacity"], 4))
