"""Fuzzy relation algebra, consistent functions and lossless homomorphic compression."""

from .consistency import (
    CompressionResult,
    ConsistencyReport,
    Partition,
    classify,
    classify_via_roundtrip,
    coarsest_consistent_partition,
    compress,
    image_neighborhood,
    verify_roundtrip,
)
from .core import (
    FuzzyRelation,
    FuzzySet,
    Universe,
    check_property,
    compose,
    inverse,
    join,
    meet,
    pointwise_join,
    pointwise_meet,
    transitive_closure,
)
from .errors import (
    DocumentError,
    ElementNotInUniverse,
    FuzzyError,
    GradeError,
    MissingComponent,
    ParameterError,
    ScaleMismatch,
    UniverseMismatch,
)
from .grades import Grade
from .infosystem import FuzzyInformationSystem, classify_system, compress_system, homomorphic_image
from .kernels import BACKEND
from .mappings import UniverseMapping, image_relation, image_set, preimage_relation, preimage_set
from .neighborhoods import NeighborhoodKind, neighborhood

relation_inverse = inverse

__version__ = "0.1.0"
