from .logger import logger
from .rng import make_generator, split_generators
