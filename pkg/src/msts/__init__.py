"""Construction and brute-force verification of mixed Steiner triple systems
MS(2,3, Z_2^n x Z_{k+1} x Z_{l+1})."""

from .classical import (
    Factorization,
    TripleSystem,
    near_one_factorization,
    one_factorization,
    steiner_triple_system,
)
from .core import (
    Codeword,
    Design,
    GridPoint,
    IncomparableWords,
    MixedAlphabet,
    SparseWord,
    covers,
    enumerate_weight2_words,
    flat_position,
    grid_point,
    hamming_distance,
)
from .io import read_design, read_ptd, write_design, write_ptd
from .pairs_triples import (
    PairsTriplesDesign,
    construct_ptd,
    gdd_to_ptd,
    ptd_exists,
    ptd_from_one_factorization,
    ptd_from_sts,
    ptd_search,
    ptd_to_gdd,
)
from .recursive import ExtensionPlan, canonicalize_alphabet, extend
from .shortest import (
    ShortestParams,
    UnsupportedParameters,
    build_c1,
    build_c2,
    build_c3,
    build_c4,
    construct_shortest,
    embedded_example_5_3,
)
from .subspace import (
    SubspacePartition,
    complementary_partition,
    full_perfect_code,
    is_perfect,
    weight3_codewords,
)
from .verifier import (
    ConditionReport,
    VerificationReport,
    admissible_n_residues,
    check_necessary_conditions,
    expected_count,
    verify_msts,
    verify_ptd,
)

__version__ = "0.1.0"
