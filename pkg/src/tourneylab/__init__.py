"""Exact analysis of tournament matrices: 3-cycles, determinants, strong components,
isomorphism classes and extremal searches."""

from .core import (
    ScoreVector,
    Tournament,
    UpperTriangleCode,
    add_sink,
    add_source,
    construct_almost_regular,
    construct_regular,
    construct_transitive,
    construct_upset,
    decode,
    encode,
    from_matrix_text,
    parse_code,
    relabel,
    reverse_arc,
    score_vector,
)
from .cycles import c3_direct, c3_from_scores, moon_bound, reversal_delta, shader_threshold
from .enumeration import are_isomorphic, canonical_code, enumerate_iso_classes
from .extremal import ExtremalResult, max_c3_singular, min_c3_nonsingular
from .linalg import det_via_scc, determinant, is_singular, subdeterminant_spectrum, subtournament
from .structure import (
    SccDecomposition,
    classify_singular_maximizer,
    is_almost_regular,
    is_regular,
    is_strong,
    is_transitive,
    is_upset,
    scc,
)
from .verify import VerificationReport, verify

__version__ = "0.1.0"
