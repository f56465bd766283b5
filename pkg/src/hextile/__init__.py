"""Signed and rotation-symmetric tribone tilings of hexagonal triangles."""

from .engine import (
    OracleReport,
    Verdict,
    extract_certificate,
    extract_symmetric_certificate,
    oracle_signed,
    oracle_symmetric,
    signed_tileable,
    symmetric_signed_tileable,
    verify_tiling,
)
from .groebner import GroebnerBasis, buchberger_z, is_member, reduce_full
from .hexlattice import Cell, FixedCellError, Placement, Tiling, TriboneType, region_T
from .polynomial import Polynomial, VariableSet, parse

__all__ = [
    "Cell", "FixedCellError", "GroebnerBasis", "OracleReport", "Placement", "Polynomial",
    "Tiling", "TriboneType", "VariableSet", "Verdict", "buchberger_z", "extract_certificate",
    "extract_symmetric_certificate", "is_member", "oracle_signed", "oracle_symmetric", "parse",
    "reduce_full", "region_T", "signed_tileable", "symmetric_signed_tileable", "verify_tiling",
]
