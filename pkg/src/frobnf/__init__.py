"""Exact arithmetic for positive semigroups of totally real algebraic
integers: certified heights, discriminant measures, complete representation
enumeration, and Frobenius-type bounds."""

__version__ = "0.1.0"

from .embeddings import certify_total_nonneg, embed, isolate_roots
from .errors import FrobnfError
from .frobenius import (
    FrobeniusBound,
    LowerBoundCertificate,
    classical_frobenius,
    corollary_report,
    gs_lower_search,
    theorem1_bound,
)
from .heights import (
    Comparison,
    HeightValue,
    compare_height,
    height_elem,
    height_vector,
)
from .intervals import RealEnclosure
from .measures import CoordMatrix, coord_matrix, d_measure, disc_subtuple, m_measure
from .nf_core import FieldElement, NumberField, field_from_spec
from .semigroup import (
    ConeMembership,
    CountReport,
    GeneratorSystem,
    RepresentationSet,
    check_generators,
    cone_membership,
    count_by_height,
    enumerate_representations,
    min_representation,
    witness_search,
)

__all__ = [
    "FrobnfError",
    "NumberField",
    "FieldElement",
    "field_from_spec",
    "RealEnclosure",
    "isolate_roots",
    "embed",
    "certify_total_nonneg",
    "HeightValue",
    "Comparison",
    "height_elem",
    "height_vector",
    "compare_height",
    "CoordMatrix",
    "coord_matrix",
    "disc_subtuple",
    "d_measure",
    "m_measure",
    "GeneratorSystem",
    "RepresentationSet",
    "ConeMembership",
    "CountReport",
    "check_generators",
    "cone_membership",
    "enumerate_representations",
    "min_representation",
    "witness_search",
    "count_by_height",
    "FrobeniusBound",
    "LowerBoundCertificate",
    "theorem1_bound",
    "classical_frobenius",
    "gs_lower_search",
    "corollary_report",
]
