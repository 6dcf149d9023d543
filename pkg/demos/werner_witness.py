"""
Witnessing negative conditional entropy on the Werner line
==========================================================

Build the logarithmic witness from a nearly pure Werner state, read off
its three distinct entries, and scan it along the whole family.
"""

# %%
import numpy as np

from cvenn import NATS, conditional_entropy, eval_witness, log_witness, werner
from cvenn.decompose import pauli_decompose, polarization_decompose
from cvenn.io import scan_family

rho = werner(0.99)
w = log_witness(rho, NATS)
np.set_printoptions(precision=4, suppress=True)
print(w.matrix.real)

# %%
# The witness value on its own state is exactly S(A|B) in nats.
print("Tr(W rho)      =", round(eval_witness(w, rho), 4))
print("S(A|B) (nats)  =", round(conditional_entropy(rho, base=NATS), 4))

# %%
# Local measurement settings: Pauli correlators, or eight polarisation projectors.
print(pauli_decompose(w).to_text())
print(polarization_decompose(w).params)

# %%
# Where does the witness switch sign? Entropy turns negative near p = 0.7476,
# the witness only somewhat later, so this one witness is not universal.
rows = scan_family("werner", w, points=201, base=NATS)
for r in rows[140:181:5]:
    print(f"p={r.param:.3f}  W={r.witness_value:+.4f}  S(A|B)={r.cond_entropy:+.4f}")
