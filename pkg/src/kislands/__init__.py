"""Exact counting of k-holes and k-islands, Horton sets, and random-set experiments."""

from .bounds import (BoundValue, applicable_bounds, bound_corollary3, bound_planar4_improved,
                     bound_theorem1, bound_theorem2, lower_bound_empty_simplices, lower_bound_islands)
from .canonical import (OrderingReport, canonical_ordering, check_box_containment,
                        check_canonical_conditions, delta_star_contains_all)
from .enumeration import (CapExceededError, CountResult, count_all_islands, count_k_subsets,
                          hole_profile, is_convex_position, is_hole, is_island, iter_k_holes,
                          largest_hole_size)
from .exact_geom import (BOUNDARY, INTERIOR, OUTSIDE, DegenerateError, DimensionError, orientation,
                         point_in_hull, simplex_volume, squared_distance_to_affine_hull,
                         squared_distance_to_convex_hull)
from .experiments import EstimateReport, GrowthReport, growth_experiment, monte_carlo
from .horton import (HortonParams, HortonReport, horton_d, horton_planar, is_deep_below,
                     verify_horton)
from .pointset import (ParseError, PointSet, is_general_position, is_strongly_general_position,
                       parse_pointset, serialize_pointset)
from .sampler import ConvexBody, derive_seed, sample_set

__version__ = "0.1.0"
