"""Finite higher-rank graphs presented by colored skeletons and
commuting squares: path calculus, boundary paths, periodicity
certificates, the source-removal reduction, and the simplicity
criterion, with a text format and a CLI."""
from __future__ import annotations

from .alignment import FESet, MinExtPair, ext, is_exhaustive, lambda_min, make_fe, mce
from .boundary import (
    ALL_BRANCHES,
    LEXICOGRAPHIC,
    BoundaryPrefix,
    ExtensionStrategy,
    boundary_prefixes,
    dead_directions,
    extend_to_boundary,
    is_boundary_member_bounded,
    shift,
)
from .degrees import OMEGA, Degree, ExtDegree, iter_degrees_upto, parse_degree
from .errors import (
    DegreeError,
    DegreeMismatch,
    DegreeOutOfRange,
    DupError,
    EmptyGraph,
    GenerationExhausted,
    HasSources,
    HexagonViolation,
    InvalidSquare,
    KGraphError,
    MissingSquare,
    NonBijectiveFlip,
    NotComposable,
    NotHereditary,
    ParseError,
    RangeMismatch,
    RefError,
    UnsupportedDegree,
)
from .fixtures import all_fixtures, fixture, fixture_path
from .generate import GenConfig, generate_kgraph
from .morphism import (
    Morphism,
    compose,
    enumerate_into,
    enumerate_leq,
    enumerate_paths,
    extend,
    factor,
    from_str,
    identity,
    normalize,
    segment,
    to_str,
    vertex_at,
)
from .periodicity import (
    PeriodicityCertificate,
    SearchConfig,
    aperiodicity_check,
    certificate_from_json,
    condition_b_check,
    k1_cycle_criterion,
    local_periodicity_at,
    nlp_check,
    snlp_check,
    techlemma_construct,
    verify_certificate,
)
from .reduction import GammaGraph, gamma_construct, gamma_project_prefix
from .skeleton import Edge, KGraph, Square, dump, dumps, load, loads
from .structure import (
    VertexSet,
    cofinality_check,
    hereditary_closure,
    saturate,
    simplicity_verdict,
)
from .verdicts import SimplicityReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "ALL_BRANCHES",
    "BoundaryPrefix",
    "Degree",
    "DegreeError",
    "DegreeMismatch",
    "DegreeOutOfRange",
    "DupError",
    "Edge",
    "EmptyGraph",
    "ExtDegree",
    "ExtensionStrategy",
    "FESet",
    "GammaGraph",
    "GenConfig",
    "GenerationExhausted",
    "HasSources",
    "HexagonViolation",
    "InvalidSquare",
    "KGraph",
    "KGraphError",
    "LEXICOGRAPHIC",
    "MinExtPair",
    "MissingSquare",
    "Morphism",
    "NonBijectiveFlip",
    "NotComposable",
    "NotHereditary",
    "OMEGA",
    "ParseError",
    "PeriodicityCertificate",
    "RangeMismatch",
    "RefError",
    "SearchConfig",
    "SimplicityReport",
    "Square",
    "UnsupportedDegree",
    "Verdict",
    "VertexSet",
    "all_fixtures",
    "aperiodicity_check",
    "boundary_prefixes",
    "certificate_from_json",
    "cofinality_check",
    "compose",
    "condition_b_check",
    "dead_directions",
    "dump",
    "dumps",
    "enumerate_into",
    "enumerate_leq",
    "enumerate_paths",
    "ext",
    "extend",
    "extend_to_boundary",
    "factor",
    "fixture",
    "fixture_path",
    "from_str",
    "gamma_construct",
    "gamma_project_prefix",
    "generate_kgraph",
    "hereditary_closure",
    "identity",
    "is_boundary_member_bounded",
    "is_exhaustive",
    "iter_degrees_upto",
    "k1_cycle_criterion",
    "lambda_min",
    "load",
    "loads",
    "local_periodicity_at",
    "make_fe",
    "mce",
    "nlp_check",
    "normalize",
    "parse_degree",
    "saturate",
    "segment",
    "shift",
    "simplicity_verdict",
    "snlp_check",
    "techlemma_construct",
    "to_str",
    "verify_certificate",
    "vertex_at",
]
