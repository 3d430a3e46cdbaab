"""fibalg: two-step ladder algebras with generalized Fibonacci spectra.

Library layout:

* ``core``            shared value types (polynomial pairs, vacua,
                      ladder sequences, truncated matrix reps)
* ``rep_builder``     eigenvalue recursion, matrix assembly, relation
                      and Casimir verification
* ``linear_dynamics`` eigenvalues, fixed points, stability triangle and
                      spectrum morphology of the linear case
* ``pq_numbers``      Gauss p,q-numbers, Binet closed forms, the second
                      Casimir
* ``admissibility``   vacuum admissibility by region plus the numeric
                      oracle
* ``chain``           substitution chains and the inflation/count
                      correspondence
* ``spectrum``        level datasets with gap annotations
* ``service``/``cli`` FastAPI surface and its command-line client
"""

from . import (
    admissibility,
    chain,
    core,
    linear_dynamics,
    pq_numbers,
    rep_builder,
    spectrum,
)
from .core import (
    CharacteristicFunctions,
    EigenPair,
    LadderSequence,
    LinearParams,
    TruncatedRep,
    VacuumState,
)

__version__ = "0.1.0"

__all__ = [
    "admissibility",
    "chain",
    "core",
    "linear_dynamics",
    "pq_numbers",
    "rep_builder",
    "spectrum",
    "CharacteristicFunctions",
    "EigenPair",
    "LadderSequence",
    "LinearParams",
    "TruncatedRep",
    "VacuumState",
    "__version__",
]
