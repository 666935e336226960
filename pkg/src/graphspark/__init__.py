"""Graph spark, forts, zero forcing and exact rational matrix tools."""

from .connectivity import minimum_vertex_cut, vertex_connectivity
from .constructions import FortVectorAssignment, adjacency, border, laplacian, matrix_from_fort, rank_bump
from .errors import CapacityError, ConstructionError, DomainError, GraphSparkError, ParseError, PreconditionError
from .families import FamilySpec, generate, parse_family
from .forts import (
    FortReport,
    FortSequence,
    failed_zero_forcing_number,
    fort_sequence,
    is_fort,
    is_zero_forcing_set,
    spark,
    zero_blocking_number,
    zf_closure,
)
from .graph import Graph, duplicate_vertices
from .graph6 import encode_graph6, parse_graph6
from .linalg import (
    NullBasis,
    RationalMatrix,
    SparkCertificate,
    full_spark_check,
    generic_null_basis,
    generic_nullity,
    graph_of,
    is_generic,
    matrix_spark,
    null_basis,
    null_support,
    nullity,
    parter_fiedler,
    rank,
)

__version__ = "0.1.0"
