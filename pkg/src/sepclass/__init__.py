"""Exact enumeration and machine verification of separable partition and
overpartition classes with consecutive-part restrictions."""

from .bases import (Decomposition, DecompositionFailureError, NotAMemberError,
                    basis_gf, brute_force_decompositions, decompose,
                    enumerate_basis, is_basis_member, reconstruct,
                    residue_shift)
from .objects import (ClassSpec, KindMismatchError, Overpartition, Partition,
                      all_overpartitions, all_partitions, enumerate_g,
                      enumerate_members, is_member, refined_gf)
from .series import (Series, ShapeMismatchError, g_poly, gaussian,
                     gaussian_by_division, monomial, pochhammer)
from .theorems import (VerificationReport, basis_closed_form,
                       basis_driven_gf, check_identity, closed_form_gf,
                       compare_routes, load_grid, verify)

__all__ = [
    "ClassSpec", "Partition", "Overpartition", "Series", "Decomposition",
    "VerificationReport",
    "KindMismatchError", "ShapeMismatchError", "NotAMemberError",
    "DecompositionFailureError",
    "monomial", "pochhammer", "gaussian", "gaussian_by_division", "g_poly",
    "is_member", "enumerate_members", "enumerate_g", "refined_gf",
    "all_partitions", "all_overpartitions",
    "is_basis_member", "enumerate_basis", "decompose", "reconstruct",
    "basis_gf", "residue_shift", "brute_force_decompositions",
    "closed_form_gf", "basis_closed_form", "basis_driven_gf",
    "check_identity", "verify", "compare_routes", "load_grid",
]

__version__ = "0.1.0"
