"""Exact-arithmetic cohomology dimensions of Koszul and twisted de Rham
complexes for polynomial inputs, with dimension-equality verifiers."""

from .ring import (LaurentPolynomial, MonomialOrder, RingError, Rational,
                   partial_derivative, gradient, weighted_degree,
                   find_quasi_homogeneous_weights)
from .groebner import (GroebnerBasis, GroebnerError, buchberger, normal_form,
                       quotient_dimension, is_zero_dimensional,
                       ideal_membership)
from .forms import (FormContext, DifferentialForm, FormError, wedge_df,
                    exterior_derivative, twisted_operator,
                    graded_exterior_derivative, pole_filtration_level,
                    embed_log_in_meromorphic)
from .linalg import exact_rank, rank_of_columns, RankConsistencyError
from .cohomology import (ComplexSpec, DimensionReport, Truncation,
                         koszul_cohomology_dims, log_koszul_cohomology_dims,
                         truncated_complex_dims)
from .checks import (TheoremVerdict, NonIsolatedCriticalLocus, milnor_number,
                     critical_locus, check_kontsevich_barannikov,
                     check_log_corollary, check_sum_of_vanishing_cycles,
                     check_log_quasi_iso)
from .textform import parse_polynomial, render_polynomial, ParseError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
