"""Exact computations with numerical exceptional collections on del Pezzo
surfaces: Euler forms, braid and quiver mutations, Hille-Perling polygons,
forbidden-region minimality, a bounded classifier, and verification drivers
for the shipped classification tables.
"""

from .collection import (Collection, braid_left, braid_right, detect_blocks,
                         dual_left, dual_right, equivalent, from_data,
                         gram_matrix, is_very_strong, reduced_gram,
                         rotate_left, rotate_right, tensor_line_bundle)
from .mutation import (apply_mutation_sequence, block_quiver_mutate,
                       is_minimal, quiver_mutate_left, quiver_mutate_right,
                       quiver_of, reduce_to_block_complete)
from .polygon import (HPPolygon, area_x2, is_convex, origin_in_forbidden,
                      polygon_of, toric_system)
from .quiver import Quiver, dwz_mutate, plucker_holds
from .surfaces import (NumClass, Surface, euler_form, make_exceptional,
                       surface)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
