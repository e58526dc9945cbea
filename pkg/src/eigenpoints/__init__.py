"""Eigenpoint configurations of partially symmetric tensors: solve, verify,
reconstruct, enlarge, and the exact intersection-theory calculator."""

from .counts import (
    BettiTable,
    eagon_northcott_betti,
    eigencurve_degree,
    eigensurface_degree,
    expected_count,
    multiplicity_from_betti,
)
from .multipoly import Polynomial
from .points import PointSet, ProjectivePoint
from .solver import EigenSolution, chart_system, curve_membership_check, eigenpoints, solve_zero_dimensional
from .tensors import (
    EigenMatrix,
    PartialSymTensor,
    SymmetricTensor,
    degenerate_shift,
    degenerate_tensor,
    fermat_tensor,
    minor_ideal_generators,
    tensor_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "EigenMatrix",
    "EigenSolution",
    "PartialSymTensor",
    "PointSet",
    "Polynomial",
    "ProjectivePoint",
    "SymmetricTensor",
    "chart_system",
    "curve_membership_check",
    "degenerate_shift",
    "degenerate_tensor",
    "eagon_northcott_betti",
    "eigencurve_degree",
    "eigenpoints",
    "eigensurface_degree",
    "expected_count",
    "fermat_tensor",
    "minor_ideal_generators",
    "multiplicity_from_betti",
    "solve_zero_dimensional",
    "tensor_from_json",
    "__version__",
]
