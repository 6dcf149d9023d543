"""
A qutrit witness in Gell-Mann form
==================================
"""

# %%
from cvenn import BITS, eval_witness, isotropic, log_witness
from cvenn.decompose import gellmann_decompose

w = log_witness(isotropic(0.8, 3), BITS)

# Detects the state it was built from, and stays positive on a weaker one.
for alpha in (0.8, 0.715):
    print(f"alpha={alpha}:  Tr(W rho) = {eval_witness(w, isotropic(alpha, 3)):+.4f}")

# %%
# Nine terms: identity plus lambda_i (x) lambda_i with alternating signs.
dec = gellmann_decompose(w)
print(dec.to_text())

# Summing local expectations gives back the same number as the trace.
print(round(dec.expectation(isotropic(0.8, 3).matrix), 4))
