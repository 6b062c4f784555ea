"""King and cylindrical-king permutations: metrics, classifiers, k-prolific
detection, and the containment poset of cylindrical kings."""
from .kings import (Bond, BondKind, Orientation, PermClass, Separator, bonds, ck_children,
                    enumerate_kings, is_cylindrical_king, is_king, separators)
from .metrics import (UNBOUNDED, MetricReport, breadth, cyclic_breadth, cyclic_distance,
                      cyclic_position_distance, manhattan_distance)
from .perm_core import (OrbitClass, ParseError, Permutation, complement, contains, delete_value,
                        delete_values, format_perm, inverse, orbit, parse, reverse, rotate_left,
                        standardize)
from .poset import (BUILDING_BLOCKS, DownsetGraph, GapWitness, VerificationReport, downset,
                    downset_bottom_up, find_intermediate, verify_building_blocks,
                    verify_deletion_observation, verify_gap_theorem)
from .prolific import ProlificReport, distinct_patterns, is_k_prolific, prolific_criterion

__version__ = "0.1.0"
