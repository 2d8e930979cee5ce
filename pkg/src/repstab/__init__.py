"""Exact symmetric function computations for the cohomology of configuration spaces
of points in R^d, the Whitney homology of the partition lattice, and their
representation stability."""

from repstab.characters import ClassFunction, decompose, frobenius_ch, inverse_ch
from repstab.liewhitney import ell, hat_entry, kappa, lie_lambda, nu, pi, w_lambda, whitney_homology
from repstab.partitions import Partition
from repstab.symfunc import CONFIG, DegreeCapError, SymFn, e, h, p, plethysm, schur

__version__ = "0.1.0"

__all__ = [
    "CONFIG", "ClassFunction", "DegreeCapError", "Partition", "SymFn", "decompose", "e", "ell",
    "frobenius_ch", "h", "hat_entry", "inverse_ch", "kappa", "lie_lambda", "nu", "p", "pi",
    "plethysm", "schur", "w_lambda", "whitney_homology",
]
