"""Kauffman-state generating polynomials of two-bridge knot shadows C(n, r).

Two independent routes are provided: brute-force enumeration of the states
of an explicitly constructed shadow diagram, and closed forms.

>>> from kstates import build_two_bridge, state_polynomial, b_nr_closed
>>> state_polynomial(build_two_bridge(2, 2)).coeffs
(0, 5, 8, 3)
>>> b_nr_closed(2, 2) == state_polynomial(build_two_bridge(2, 2))
True
"""

from .closed_forms import (
    alpha,
    b_n0,
    b_ninf,
    b_nr,
    b_nr_classes,
    b_nr_closed,
    b_nr_recurrence,
    class_counts,
    coeff_formula,
    coeff_k1,
    coeff_k2,
    degree_formula,
    leading_coeff,
    special_rows,
)
from .diagram import (
    FREE_CIRCLE,
    ShadowDiagram,
    TooManyCrossingsError,
    circle_count,
    connected_sum,
    count_states_with_circles,
    disjoint_union,
    state_polynomial,
    trivial_knot,
)
from .polynomial import ONE, X, ZERO, IntPolynomial, NotDivisibleError
from .tables import TableSpec, emit_sequence, render_table
from .tangle import (
    INF,
    build_torus,
    build_two_bridge,
    closure_denominator,
    closure_numerator,
    parse_count,
    twist_bottom,
    twist_right,
    zero_tangle,
)

__version__ = "0.1.0"
