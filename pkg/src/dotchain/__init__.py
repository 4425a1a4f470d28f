"""Exact counting of dot-product chains in finite point sets."""
from .geometry import (ChainType, DimensionMismatch, GeometryError, LineKey, OriginError,
                       SameRadialLine, ZeroAlphaError, alpha_line, canonical_line, dot,
                       format_scalar, intersect_alpha_lines, is_origin, point,
                       radial_direction, same_radial_line, scalar)
from .pointset import DuplicatePointError, PointSet, PointSetFormatError, make_pointset
from .chains import (CountReport, DotTable, count_by_backtracking, count_chains_distinct,
                     count_chains_dp, count_distinct, count_pairs_with_dot, enumerate_chains,
                     max_pair_count)
from .constructions import (GeneratedConfig, generate_axes2d, generate_grid, generate_lenz3d,
                            generate_prop3, generate_random_disk)
from .stats import (AdaptabilityReport, RadialProfile, RichnessReport, alpha_line_family,
                    energy, is_s_adaptable, max_flat_richness, min_separation,
                    radial_line_profile, st_incidences)
from .bounds import (BoundSpec, BoundValue, FitReport, VerifyReport, evaluate_bound,
                     fit_growth_exponent, verify_family)

__version__ = "0.1.0"
