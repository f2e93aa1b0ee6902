"""Numerical laboratory for discrete-sum statistics of Riemann's Z.

Gram-type grids, Z-squared correlation sums with their divisor-sum main
terms, continuous moments by oscillation-resolving quadrature, and the
sampling-theorem relations tying the two sides together.  Every pipeline
reduces through fixed-size blocks so results are bit-identical across
shard counts.
"""

from .correlation import (CorrelationSpec, ProductParts, SumResult,
                          alternating_sum, autocorrelation_sum,
                          biquadratic_local_average, correlation_main_term,
                          euler_weighted_sum, second_moment_discrete,
                          titchmarsh_sum, z4_product_decomposition)
from .divisors import (CumulativeDivisorSums, DivisorTable,
                       bilinear_divisor_sum, cumulative_sums,
                       divisor_cosine_main_term, divisor_cosine_sum,
                       divisor_square_asymptotics, dump_table, load_table,
                       sieve)
from .errors import (CapacityError, ConfigError, CostGuardError, DomainError,
                     EdgeError, IndexTooSmallError, PhaseVectorTooShortError,
                     SolverError, SpecError, TableTooSmallError, ZetalabError)
from .gram import (GramKind, GramPoint, GramRange, Spacing, count_report,
                   gram_point, gram_points, gram_range, gram_spacing,
                   nu_min, proxy_gap, spacing_from_heights)
from .harness import (ConvergenceRow, ExperimentConfig, emit_plot_data,
                      ladder_suite, run)
from .nyquist import (CardinalSpec, QuadratureConfig, biquadratic_effect_ratio,
                      cardinal_energy_ratio, cardinal_reconstruct,
                      cardinal_samples, moment_integral,
                      quadratic_effect_ratio)
from .special import (DEFAULT_RS, PhaseVector, RiemannSiegelConfig, theta,
                      theta1, z, z_many)

__version__ = "0.1.0"
