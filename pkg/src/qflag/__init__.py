"""Exact q-analog arithmetic, multivariate Rogers-Szegő polynomials, and flag counting over F_q."""

from . import cyclotomic, ffspace, qkernel, rogers_szego
from .bigpoly import MPoly, TruncSeries
from .cyclotomic import CycInt, CycPoly
from .ffspace import FieldSpec, FlagChain, Subspace, TypeLabel, build_field
from .qkernel import Composition, SubsetIndicator, galois, galois_general, qbinomial, qmultinomial
from .rogers_szego import rs, rs_homogeneous

__version__ = "0.1.0"


def clear_caches():
    """Drop every memoized value (needed after swapping out a kernel function)."""
    qkernel.clear_caches()
    rogers_szego.clear_caches()


__all__ = [
    "CycInt",
    "CycPoly",
    "Composition",
    "FieldSpec",
    "FlagChain",
    "MPoly",
    "SubsetIndicator",
    "Subspace",
    "TruncSeries",
    "TypeLabel",
    "build_field",
    "clear_caches",
    "galois",
    "galois_general",
    "qbinomial",
    "qmultinomial",
    "rs",
    "rs_homogeneous",
]
