from .groups import (
    DEFAULT_GROUP_GUARD,
    generate_group,
    burnside_count,
    orbit_count,
    classical_character_moment,
    classical_haar_monomial,
)
from .partitions import SetPartition, DEFAULT_NC_GUARD, enumerate_nc, catalan
from .weingarten import (
    DEFAULT_WEINGARTEN_GUARD,
    Weingarten,
    gram_matrix,
    inverse_matrix,
    weingarten_matrix,
    snplus_haar_monomial,
)
from .oracles import (
    MomentOracle,
    ClassicalPermutationGroup,
    FreeSymmetric,
    GroupDual,
    ExplicitSequence,
    ORACLE_KINDS,
    oracle_from_dict,
    oracle_to_dict,
    oracle_digest,
    character_moment,
    haar_monomial,
)
