"""Exact tools for period geometry on translation surfaces and curves.

Four layers, each usable on its own:

- symplectic_lattice: constructive algorithms on sublattices of the
  standard integral symplectic lattice (saturation, determinants,
  alternating normal form, transitivity maps).
- realizability: decides when a cohomology class, or an isotropic pair,
  is realized by an abelian differential; exact rational arithmetic.
- covers: branched covers of the square torus as explicit certificates
  for the realizability verdicts.
- curve_algebra: multiplication of 1-forms on hyperelliptic and plane
  quartic curves (obscurant subspaces, coprime/linked classification,
  residue and cross-ratio laws).

The cli module exposes all of it as `periodforms` subcommands.
"""

from .covers import BranchedTorusCover, Origami, Permutation, construct_cover
from .curve_algebra import (
    Differential,
    HyperellipticCurve,
    PlaneQuartic,
    QuadDifferential,
    TauSubspace,
    classify,
    obscurant_dim,
    overlap_degree,
    quartic_cross_ratio,
    residues_of_quotient,
    section_values,
)
from .errors import DomainError, FormatError
from .exact import GaussianRational, QuadraticNumber
from .realizability import (
    CohomologyClass,
    PlanarLattice,
    is_realizable_elliptic_pair,
    is_realizable_line,
    line_verdict_from_floats,
    polyperiod_dimension_gap,
    severi_range,
)
from .symplectic_lattice import (
    Sublattice,
    alternating_normal_form,
    determinant,
    extend_to_symplectic_basis,
    map_rank2_sublattice,
    map_rank4_sublattice,
    saturate,
)

__version__ = "0.1.0"

__all__ = [
    "BranchedTorusCover",
    "CohomologyClass",
    "Differential",
    "DomainError",
    "FormatError",
    "GaussianRational",
    "HyperellipticCurve",
    "Origami",
    "Permutation",
    "PlanarLattice",
    "PlaneQuartic",
    "QuadDifferential",
    "QuadraticNumber",
    "Sublattice",
    "TauSubspace",
    "alternating_normal_form",
    "classify",
    "construct_cover",
    "determinant",
    "extend_to_symplectic_basis",
    "is_realizable_elliptic_pair",
    "is_realizable_line",
    "line_verdict_from_floats",
    "map_rank2_sublattice",
    "map_rank4_sublattice",
    "obscurant_dim",
    "overlap_degree",
    "polyperiod_dimension_gap",
    "quartic_cross_ratio",
    "residues_of_quotient",
    "saturate",
    "section_values",
    "severi_range",
]
