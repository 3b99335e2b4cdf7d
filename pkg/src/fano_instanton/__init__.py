"""Exact calculus for rank-2 instanton bundles on F = P^1 x F_1.

Divisor classes are :class:`DivClass` triples over the basis (L, E, XI) of
Pic(F) with the signed coefficient of E; see :data:`SIGN_CONVENTION`.
"""
from .charge import CohomDefect, InstantonCharge, charge_degree, is_admissible
from .chow import H, OMEGA, SIGN_CONVENTION, CurveClass, DivClass, slope
from .cohomology import CohomTable, chi_f, cohom_f, cohom_f1
from .kernel import KernelBundlePresentation, TwistCohomResult, minimal_presentation
from .monad import build_shape, chern, chi_twist, kclass
from .notation import parse_curve, parse_div
from .numerics import enumerate_minimal, moduli_dim, table1

__all__ = [
    "CohomDefect",
    "CohomTable",
    "CurveClass",
    "DivClass",
    "H",
    "InstantonCharge",
    "KernelBundlePresentation",
    "OMEGA",
    "SIGN_CONVENTION",
    "TwistCohomResult",
    "build_shape",
    "charge_degree",
    "chern",
    "chi_f",
    "chi_twist",
    "cohom_f",
    "cohom_f1",
    "enumerate_minimal",
    "is_admissible",
    "kclass",
    "minimal_presentation",
    "moduli_dim",
    "parse_curve",
    "parse_div",
    "slope",
    "table1",
]
