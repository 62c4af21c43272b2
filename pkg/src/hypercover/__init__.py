"""Least dense hyperball coverings of regular prism tilings in H^3, H^4, H^5."""

from .covering import CoveringResult, SweepRow, covering_density, hyperball_piece_volume, limit_p_infinity, sweep
from .errors import (
    DomainError,
    HypercoverError,
    InvalidSymbolError,
    InvalidTilingError,
    NonHyperbolicError,
    NotCompactError,
    QuadratureError,
    SingularMatrixError,
    UnsupportedSymbolError,
)
from .schlafli import (
    CoxeterSymbol,
    TilingRecord,
    build_gram,
    covering_height,
    invert_gram,
    parse_symbol,
    validate_tiling,
)
from .special import LobachevskyEvaluator, lob, zeta3
from .volume import (
    OrthoschemeAngles,
    QuadratureConfig,
    base_volume,
    prism_volume,
    theta,
    vol2_base_triangle,
    vol3_orthoscheme,
    vol3_orthoscheme_p_limit,
    vol4_prism_orthoscheme,
    vol5_prism_orthoscheme,
)

__version__ = "0.1.0"
