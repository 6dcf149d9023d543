"""Detection and use of negative conditional von Neumann entropy.

CVENN denotes the convex, compact set of bipartite states with
``S(A|B) = S(AB) - S(B) >= 0``. This package builds witness operators that
separate states outside CVENN, projects states onto CVENN, decomposes
witnesses into local observables and evaluates the task bounds that a
negative conditional entropy improves.
"""

from .closest import ProjectionResult, SolverConfig, bisect_to_boundary, cond_entropy_gradient, project_to_cvenn
from .decompose import BasisDecomposition, gellmann_decompose, pauli_decompose, polarization_decompose
from .entropy import EntropyReport, conditional_entropy, entropy_report, is_cvenn, relative_entropy, von_neumann
from .errors import CvennError, NotAWitnessWarning
from .linalg import DEFAULT_POLICY, LogBase, NumericPolicy
from .states import DensityMatrix, isotropic, max_entangled, mix, random_cvenn, random_density, validate, werner
from .tasks import (
    MemoryRegion,
    TaskReport,
    UncertaintySetting,
    hashing_bound,
    memory_region,
    merging_cost,
    randomness_rates,
    sdc_capacity,
    uncertainty_bound,
)
from .witness import HermitianOperator, eval_witness, geometric_witness, log_witness, rescale_base

BITS = LogBase.BITS
NATS = LogBase.NATS

__version__ = "0.1.0"
