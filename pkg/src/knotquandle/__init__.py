"""Quandle presentations, satellite knots and Alexander invariants over Z[t, t^-1]."""
from .alexander import affine_colorability, coloring_target, delta, linearize, module_factors
from .coloring import affine_colorings, count_colorings, iter_colorings
from .diagram import Diagram, load_diagram, parse_diagram
from .finiteq import FiniteQuandle, affine_build, check_axioms, gamma_quotient, inn_dis
from .laurent import LaurentPoly
from .lmatrix import LMatrix, delta_n
from .presentation import close_in_sphere, present, present_knot, present_solid_torus
from .satellite import SatelliteSpec, satellite_alexander_matrix, satellite_presentation

__version__ = "0.1.0"
