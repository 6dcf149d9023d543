"""
Closest CVENN state and the hyperplane witness
==============================================

Project the Bell state onto the set of states with non-negative
conditional entropy, then turn the separating hyperplane into a witness.
"""

# %%
import numpy as np

from cvenn import (
    conditional_entropy,
    eval_witness,
    geometric_witness,
    max_entangled,
    project_to_cvenn,
    random_cvenn,
    werner,
)

bell = max_entangled(2)
result = project_to_cvenn(bell)
np.set_printoptions(precision=4, suppress=True)
print(result.sigma_c.matrix.real)
print("distance", round(result.distance, 4), "outer iterations", result.outer_iterations)

# %%
# The projection sits on the Werner line, right where S(A|B) hits zero.
p = 2 * result.sigma_c.matrix[0, 3].real
print("p =", round(p, 4), " S(A|B) =", f"{conditional_entropy(result.sigma_c):.1e}")

# %%
w = geometric_witness(bell, result.sigma_c)
print(w.matrix.real)
print("Tr(W werner(0.75)) =", round(eval_witness(w, werner(0.75)), 4))

# %%
# Unlike the log witness, this one catches every negative-entropy Werner state.
for q in (0.74, 0.75, 0.80, 0.85, 0.90):
    print(q, f"{eval_witness(w, werner(q)):+.4f}", f"{conditional_entropy(werner(q)):+.4f}")

# %%
# And it never fires on states that have non-negative conditional entropy.
rng = np.random.default_rng(0)
print(min(eval_witness(w, random_cvenn((2, 2), rng)) for _ in range(2000)))
