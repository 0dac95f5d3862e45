"""Sum-product pairs (|A+A|, |AA|) of small sets: generation, exact tables and bounds."""
from .core import SppTriple, classify, format_set, parse_set, spp_of
from .exactspp import check_spp7_partial, compute_exact, verify_witness_tables
from .normalize import normalize
from .prototypes import Prototype, count_prototypes, enumerate_prototypes, is_realizable
from .store import Dataset

__all__ = [
    "SppTriple", "classify", "format_set", "parse_set", "spp_of",
    "check_spp7_partial", "compute_exact", "verify_witness_tables",
    "normalize", "Prototype", "count_prototypes", "enumerate_prototypes", "is_realizable",
    "Dataset",
]
__version__ = "0.1.0"
