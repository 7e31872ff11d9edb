"""Psyquandle and biquandle coloring quivers for singular, pseudo, classical and virtual links."""

from .algebra import (
    AlgebraError,
    AlgebraParseError,
    FiniteAlgebra,
    ValidationReport,
    make_alexander_biquandle,
    make_jablan_psyquandle,
    op_apply,
    parse_algebra,
    serialize_algebra,
    validate,
)
from .coloring import ColoringError, ColoringSet, brute_force_colorings, counting_invariant, enumerate_colorings
from .diagram import DiagramCode, DiagramError, crossing_constraints, parse_diagram, perturb, semiarcs, serialize_diagram
from .endo import EndoError, EndoSet, enumerate_endomorphisms, is_endomorphism, parse_endo_set, serialize_endo_set
from .quiver import (
    InDegreePolynomial,
    Quiver,
    QuiverError,
    build_quiver,
    export_dot,
    in_degree_polynomial,
    polynomial_to_string,
    quivers_isomorphic,
)

__version__ = "0.1.0"
