"""Tropical Jacobians of monoid-metrized graphs, computed exactly.

The package layers as follows: integer linear algebra and abelian
groups in normal form (:mod:`tropjac.abgroup`), sharp fine-saturated
monoids as dual pairs (:mod:`tropjac.monoid`), metric graphs with
homology and intersection pairing (:mod:`tropjac.tropcurve`),
piecewise-linear functions (:mod:`tropjac.plfun`), the tropical
Jacobian and its specialization maps (:mod:`tropjac.jacobian`), and
symbolic finite flat group descriptors with torsor bookkeeping
(:mod:`tropjac.torsors`).  :mod:`tropjac.cli` exposes everything as a
batch command-line tool.
"""

from .abgroup import FgAbelianGroup, IntMatrix, cokernel, hom_group, \
    integer_kernel, smith_normal_form, torsion_part
from .errors import InternalError, NotACycleError, NotBoundedMonodromyError, \
    NotPLError, PreconditionError, TropjacError, ValidationError
from .monoid import MonoidHom, SharpFsMonoid
from .tropcurve import Cycle, HomologyData, MetricGraph
from .plfun import PLFunction, harmonic_space, make_pl, multidegree
from .jacobian import TroJacGroup, TropCocycle, bounded_sublattice, \
    critical_group, specialize, trojac, trojac_torsion, unit_subdivision
from .torsors import AlphaP, BaseDescriptor, Bt1Descriptor, GroupDescriptor, \
    LocalLocal, MuN, UnipotentDescriptor, Verdict, ZmodN, alpha_p_torsor_group, \
    bt1_decompose, cartier_dual, discrete_invariant, extendability, \
    weil_pairing_split

__all__ = [
    "FgAbelianGroup", "IntMatrix", "cokernel", "hom_group", "integer_kernel",
    "smith_normal_form", "torsion_part",
    "InternalError", "NotACycleError", "NotBoundedMonodromyError",
    "NotPLError", "PreconditionError", "TropjacError", "ValidationError",
    "MonoidHom", "SharpFsMonoid",
    "Cycle", "HomologyData", "MetricGraph",
    "PLFunction", "harmonic_space", "make_pl", "multidegree",
    "TroJacGroup", "TropCocycle", "bounded_sublattice", "critical_group",
    "specialize", "trojac", "trojac_torsion", "unit_subdivision",
    "AlphaP", "BaseDescriptor", "Bt1Descriptor", "GroupDescriptor",
    "LocalLocal", "MuN", "UnipotentDescriptor", "Verdict", "ZmodN",
    "alpha_p_torsor_group", "bt1_decompose", "cartier_dual",
    "discrete_invariant", "extendability", "weil_pairing_split",
]
