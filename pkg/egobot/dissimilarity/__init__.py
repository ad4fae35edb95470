from .metrics import (
    DissimilarityMatrix,
    DistanceMethod,
    build_dissimilarity_matrix,
    distance,
    is_flagged,
    write_dissimilarity_csv,
)
from .standardize import standardize_columns
from .vat import idm_pixels, render_idm, vat_order

__all__ = [
    "DissimilarityMatrix",
    "DistanceMethod",
    "build_dissimilarity_matrix",
    "distance",
    "is_flagged",
    "write_dissimilarity_csv",
    "standardize_columns",
    "idm_pixels",
    "render_idm",
    "vat_order",
]
