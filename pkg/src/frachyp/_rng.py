import numpy as np

# Stream tags keep the generator and the solvers independent when fed the same seed.
HYPERGRAPH = 0
COLORING = 1
THEOREM1 = 2
ALON = 3
CONSTRUCTION = 4


def rng_for(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, stream])
