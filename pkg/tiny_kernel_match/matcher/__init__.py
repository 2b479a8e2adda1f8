from .errors import ReconstructionError, OracleLimitError
from .matching import Matching, VerifyReport, verify_matching, write_matching, load_matching, UNMATCHED
from .hopcroft_karp import HopcroftKarp, maximum_matching
from .reconstruct import reconstruct
from .oracle import brute_force_max, exhaustive_max, augmenting_max
