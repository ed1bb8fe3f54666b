"""liegrade: exact-arithmetic toolkit for short/balanced gradings of simple
Lie algebras, the fixed-point data of the induced one-parameter actions on
rational homogeneous varieties, the associated Jordan-algebra inversion and
Cremona maps, and matrix-model verification on Grassmannians."""

from .gradings import balanced_nodes, classify, classify_type, is_balanced, is_short, short_nodes
from .fixedpoints import chamber_count, enumerate_components, normal_weights
from .rootcore import build_root_datum, dynkin

__all__ = [
    "balanced_nodes",
    "build_root_datum",
    "chamber_count",
    "classify",
    "classify_type",
    "dynkin",
    "enumerate_components",
    "is_balanced",
    "is_short",
    "normal_weights",
    "short_nodes",
]

__version__ = "0.1.0"
