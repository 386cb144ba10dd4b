"""Lattice path matroid polytopes: bases, facets and faces, checked against exact hull geometry."""

from .errors import (DomainError, EmptyBasisError, EulerianError, LPMError, OrderingError,
                     ParseError, ResourceError, ShapeError)
from .lattice import (LatticePath, OutsideCorner, SkewRegion, area_between, expand_word,
                      is_border_strip, iter_regions, l_prime, make_region, outside_corners,
                      parse_path, strip_path)
from .matroid import (LatticeMatroid, bases_by_paths, bases_by_transversals, connected_components,
                      contract_element, delete_element, direct_sum_at, polytope_dimension,
                      presentation)

__version__ = "0.1.0"
