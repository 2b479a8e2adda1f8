from typing import List

import numpy as np

# PCG64 seeded through SeedSequence; spawn() gives independent child streams.
BIT_GENERATOR = "PCG64"


def make_generator(seed: int) -> np.random.Generator:
    """ Seeded generator used by every random component of the package.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def split_generators(seed: int, count: int) -> List[np.random.Generator]:
    """ Split one seed into ``count`` independent generators.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]
