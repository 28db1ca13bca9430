"""Finite corings over F_p: grouplikes, Galois tests, descent orbit sets and
nonabelian cocycles, computed exactly from structure constants."""

from __future__ import annotations

from .algebra import (
    FiniteAlgebra,
    FiniteGroup,
    GroupAction,
    Subring,
    UnitGroup,
    build_action,
    build_algebra,
    build_group,
    conjugate_subring,
    cyclic_group,
    finite_field,
    fixed_subring,
    frobenius_action,
    group_algebra,
    matrix_algebra,
    prime_field,
    prime_subring,
    product_algebra,
    pullback_action,
    subring_closure,
    subring_from_span,
    symmetric_group,
    trivial_action,
    trivial_group,
    upper_triangular,
    whole_ring,
)
from .checks import property_suite
from .constructions import (
    Cocycle,
    ComoduleAlgebra,
    HopfData,
    are_cohomologous,
    build_cocycle,
    build_comodule_algebra,
    build_hopf,
    coalgebra_coring,
    comodule_algebra_coring,
    crossed_product,
    direct_sum_coring,
    dual_coring,
    gl_embedding_check,
    h0,
    h1,
    hopf_group_algebra,
    psi_iso,
    regular_comodule_algebra,
    sweedler,
    theta,
    theta_inv,
    trivial_comodule_algebra,
    twist,
    z1,
)
from .coring import (
    Coring,
    CoringAut,
    Grouplike,
    as_grouplike,
    build_coring,
    canonical_map,
    coinvariants,
    comodule_homs,
    conjugate_grouplike,
    coring_automorphisms,
    galois_grouplikes,
    grouplikes,
    is_galois,
    trivial_coring,
)
from .descent import (
    EmptyGrouplikeSet,
    aut_orbits,
    clasico_check,
    d0,
    d1,
    exact_sequence_report,
    mejor_check,
    n1,
    phi_g,
    simple_cosemisimple_check,
    theta_check,
    unit_stabilizer,
)
from .errors import *  # noqa: F401,F403
from .instances import load_instance, parse_instance
from .modules import Bimodule, BimoduleMap, TensorModule, build_bimodule, build_map, regular_bimodule, tensor_over
from .orbits import PointedOrbitSet, UnitSubgroup
from .reports import Clause, Report
from .tasks import explain, run

__version__ = "0.1.0"
