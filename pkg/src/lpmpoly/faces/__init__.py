"""Combinatorial descriptions of faces: facet operations, border-strip subsets, block-tiled bottoms."""

from .bottoms import (Block, BlockTiledBottom, FaceCatalog, FacePoset, TiledRegion, bottoms_by_dimension,
                      bottom_to_maximal_region, covering_subfaces, edge_count_by_area,
                      enumerate_bottoms, face_poset, face_vertices, top_bottom)
from .operations import FacetOperation, facet_operations
from .strips import (SegmentDecomposition, check_conditions, enumerate_face_subsets,
                     face_of_subset, segment_decomposition)
