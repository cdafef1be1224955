"""Mirror bipartite graphs: realization, transformation, detection,
degree-set constructions, and exhaustive desk-scale enumeration."""

from .core import (
    BipartiteGraph,
    DegreeSequence,
    DegreeSet,
    LGraph,
    MirrorPairing,
    bipartite_isomorphic,
    left_degrees,
    lgraph_degrees,
    right_degrees,
    verify_pairing,
)
from .degset import (
    SimpleGraph,
    augment_universal_pair,
    degset_mirror_realize,
    kapoor_realize,
)
from .detect import TwinSignature, find_mirror_pairing, is_mirror, twin_signature
from .errors import (
    BudgetExceeded,
    InternalContradiction,
    InvalidPairing,
    NotBigraphic,
    NotLoopGraphic,
)
from .lab import (
    DEFAULT_BUDGET,
    RealizationReport,
    Witness,
    bipp_mirr_report,
    enumerate_realizations,
    regular_survey,
)
from .realize import (
    MirrorRealization,
    gale_ryser_check,
    hh_check,
    loop_check,
    loop_realize,
    mirror_realize,
    realize_bigraphic,
    staircase,
)
from .transform import (
    bipartite_complement,
    complement_pairing,
    fold_to_lgraph,
    kronecker_k2,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "DegreeSequence",
    "DegreeSet",
    "LGraph",
    "MirrorPairing",
    "MirrorRealization",
    "SimpleGraph",
    "TwinSignature",
    "RealizationReport",
    "Witness",
    "NotBigraphic",
    "NotLoopGraphic",
    "InvalidPairing",
    "InternalContradiction",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "left_degrees",
    "right_degrees",
    "lgraph_degrees",
    "verify_pairing",
    "bipartite_isomorphic",
    "gale_ryser_check",
    "hh_check",
    "realize_bigraphic",
    "mirror_realize",
    "loop_check",
    "loop_realize",
    "staircase",
    "kronecker_k2",
    "fold_to_lgraph",
    "bipartite_complement",
    "complement_pairing",
    "twin_signature",
    "find_mirror_pairing",
    "is_mirror",
    "kapoor_realize",
    "augment_universal_pair",
    "degset_mirror_realize",
    "enumerate_realizations",
    "bipp_mirr_report",
    "regular_survey",
    "__version__",
]
