"""Exact probabilities of rectangular events for urn and multinomial counts."""
from .convolution import (
    ConvolutionProfile,
    TruncatedCoefficientVector,
    convolve,
    event_prob_convolution,
    rect_profile,
    truncated_binomial_coeffs,
)
from .errors import ValidationError, ZeroProbabilityError
from .hypergeom import ColumnSums, MhgSpec, event_prob_enumerate, in_support, pmf
from .numeric import binomial, format_decimal, format_exact, multinomial_coeff, rational
from .ordering import (
    OrderingReport,
    check_corollary,
    check_counterexample,
    check_theorem1,
    scan_over_n,
    sweep_oracle_equivalence,
    sweep_ordering,
)
from .simplex import (
    Rect,
    SymmetricCore,
    enumerate_simplex,
    make_symmetric_core,
    parse_core,
    parse_rect,
    rect_contains,
)
from .truncmult import (
    CensoredMoments,
    MultinomialSpec,
    censored_moments,
    multinomial_pmf,
    reduction_sweep,
    reference_variance,
    variance_of_combo,
    variance_reduction,
)

__version__ = "0.1.0"
