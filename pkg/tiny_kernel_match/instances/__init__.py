from .errors import GeneratorSpecError
from .worst_case import WorstCaseSpec, gen_worst_case
from .random_graph import gen_random_bipartite
