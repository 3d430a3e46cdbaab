import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from fibalg.core import CharacteristicFunctions, TruncationError, VacuumState
from fibalg import rep_builder

settings.register_profile(
    "fast",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("fast")


def draw_physical_instance(rng, levels=31, max_scale=1e3):
    """Random polynomial pair (deg <= 2, |coeff| <= 2) with a physical,
    bounded vacuum; rejection-sampled, deterministic under a seeded rng."""
    while True:
        deg_f = int(rng.integers(1, 3))
        deg_g = int(rng.integers(1, 3))
        shrink = 1.0 if rng.random() < 0.5 else 0.35
        f = [float(c) for c in rng.uniform(-2, 2, deg_f + 1) * shrink]
        g = [float(c) for c in rng.uniform(-2, 2, deg_g + 1) * shrink]
        funcs = CharacteristicFunctions(f, g)
        vacuum = VacuumState(float(rng.uniform(-1.0, 0.5)),
                             float(rng.uniform(0.0, 1.5)))
        try:
            seq = rep_builder.iterate_eigenvalues(funcs, vacuum, levels)
        except TruncationError:
            continue
        if not rep_builder.check_physical(seq).physical:
            continue
        if max(abs(a) for a in seq.alphas) > max_scale:
            continue
        return funcs, vacuum, seq


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
