"""Exact-arithmetic quantum/affine Schubert calculus toolkit.

Index correspondences between quantum Littlewood-Richardson coefficients of
the Grassmannian, of the complete flag variety, and their affine analogues,
together with two independent coefficient oracles and an exhaustive
verification harness for the commuting pentagon of correspondences.
"""

from .maps import (
    AffIndex,
    DomainError,
    FlIndex,
    GrIndex,
    gamma_sd,
    gamma_t,
    pentagon,
    phi_fl,
    phi_fl_inv,
    phi_gr,
    psi_pc,
    verify_peterson_lift,
)
from .oracle import (
    classical_lr,
    quantum_lr_gr,
    quantum_product_fl,
    quantum_product_gr_bcff,
    quantum_product_gr_pieri,
)
from .shapes import Partition, RectContext, ShapeError

__all__ = [
    "AffIndex",
    "DomainError",
    "FlIndex",
    "GrIndex",
    "Partition",
    "RectContext",
    "ShapeError",
    "classical_lr",
    "gamma_sd",
    "gamma_t",
    "pentagon",
    "phi_fl",
    "phi_fl_inv",
    "phi_gr",
    "psi_pc",
    "quantum_lr_gr",
    "quantum_product_fl",
    "quantum_product_gr_bcff",
    "quantum_product_gr_pieri",
    "verify_peterson_lift",
]

__version__ = "0.1.0"
