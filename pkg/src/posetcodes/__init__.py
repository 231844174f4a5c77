"""Near-MDS linear codes in poset and ordered (NRT) metrics.

Construction, classification and verification of NMDS codes, exact weight
distributions, and the correspondence between ordered codes and uniform
point distributions in the unit cube.
"""

from .code import (
    Classification,
    DerivedCodes,
    LinearCode,
    OrthogonalArrayCertificate,
    WeightProfile,
    classify,
    derive_codes,
    generalized_weights,
    min_distance,
    oa_strength,
    parse_code_text,
    poset_distance,
    poset_weight,
    read_code_file,
    wei_duality_check,
    write_code_text,
)
from .construct import construct_n1, construct_n2, construct_n3, search_random_nmds
from .cube import (
    ElementaryInterval,
    PointSet,
    Tiling,
    code_to_points,
    interval_count,
    nmds_by_tiling,
    verify_net,
    verify_nmds_distribution,
    verify_optimal_distribution,
    verify_tiling,
    write_points_csv,
)
from .errors import (
    DEFAULT_MAX_ENUM,
    BudgetExceededError,
    ConstructionError,
    FileFormatError,
    PosetCodesError,
)
from .field import FieldElement, PrimeField
from .ordered import (
    OrderedSpace,
    Shape,
    chain_product_poset,
    count_N_s,
    detect_chain_product,
    enumerate_shapes,
    shape_of,
)
from .poset import Ideal, Poset, PosetError, maximal_elements, parse_poset_text, poset_to_text
from .weights import (
    WeightDistribution,
    nmds_seed_by_ideal,
    seed_by_shape,
    weight_dist_bruteforce,
    weight_dist_nmds_hamming,
    weight_dist_nmds_ordered,
    weight_dist_nmds_poset,
)

__version__ = "0.1.0"
