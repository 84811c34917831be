import random

import pytest

from maxdepth.complexes import to_ideal
from maxdepth.random_instances import random_complex

POOL_SEED = 20260824


@pytest.fixture(scope="session")
def pool_main():
    """200 random squarefree ideals, mostly 3-7 vertices, some 8-9."""
    rng = random.Random(POOL_SEED)
    ideals = []
    for k in range(200):
        n = rng.randint(8, 9) if k % 10 == 0 else rng.randint(3, 7)
        ideals.append(to_ideal(random_complex(rng, n)))
    return ideals


@pytest.fixture(scope="session")
def pool_small():
    """200 random squarefree ideals on 3-6 vertices (face-heavy suites)."""
    rng = random.Random(POOL_SEED + 1)
    return [to_ideal(random_complex(rng, rng.randint(3, 6))) for _ in range(200)]


@pytest.fixture(scope="session")
def pool_pairs():
    """200 pairs of small ideals for tensor-join suites."""
    rng = random.Random(POOL_SEED + 2)
    return [
        (
            to_ideal(random_complex(rng, rng.randint(2, 4))),
            to_ideal(random_complex(rng, rng.randint(2, 4))),
        )
        for _ in range(200)
    ]
