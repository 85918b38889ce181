"""Semi-generalized closed sets and sg-compactness, checked by machine.

Finite topologies are explicit open families over bit-field subsets; the
countable catalog is handled by a finite/cofinite symbolic algebra.
"""

from .core import (
    CarrierMismatch,
    CarrierTooLarge,
    FinTopology,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    PointOutOfRange,
    PtSet,
    SetClass,
    TopologyError,
    classify_set,
    closure,
    interior,
    min_nbhd,
    semi_closure,
    semi_interior,
    validate_topology,
)
from .kernels import BACKEND
from .predicates import (
    PointMap,
    PredicateMode,
    SpaceDecomp,
    cellular_families,
    decompose,
    is_cellular,
    is_hsg_closed,
    is_indiscrete,
    is_pre_sg_continuous,
    is_semi_TD,
    is_sg_closed,
    is_sg_open,
    maximal_cellular_families,
)
from .spaces import (
    EnumerationMode,
    alpha_topology,
    canonical_form,
    catalog,
    count_topologies,
    enumerate_topologies,
    homeomorphic,
    product,
    relabel,
    semi_regularization,
    subspace,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
