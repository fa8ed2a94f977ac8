"""Constructions and verification of complex equiangular lines and MUBs."""

from .abelian import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    RelativeDifferenceSet,
    builtin_rds,
    char_eval,
    characters,
    enumerate_elements,
    rds_verify,
)
from .constructions import (
    BlockPairSpec,
    MubFamily,
    ScalingSpec,
    c1_magnitudes,
    c1_search,
    construction2_family,
    construction3_d4_extension,
    construction3_pair,
    construction3_solve,
    hoggar_tensor_orbit,
    l_block,
    mubs_from_rds,
    theorem46_predicate,
)
from .framecore import (
    CVector,
    GramReport,
    LineSet,
    apply_equivalence,
    gram_analyze,
    inner,
    lines_equal,
    max_angle,
    mub_bound,
    special_bound_f,
    verify_mubs,
)
from .scalars import Scalar
from .weylheisenberg import (
    Fiducial,
    eigenspace_eig1,
    fiducial_d4,
    normalizer_check,
    wh_generators,
    wh_orbit,
    zauner_unitary,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
