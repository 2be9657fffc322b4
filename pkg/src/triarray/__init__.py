"""Triple arrays, Youden squares and difference sets in small finite groups."""

from ._backend import BACKEND
from .arrays import (ArrayVerdict, RowColumnArray, compare_constructions, derive_parameters,
                     direct_construct, rl_to_standard, standard_to_rl, triple_criterion,
                     verify_array)
from .catalog import list_entries, load_entry
from .designs import (BlockDesign, FourCycleReport, YoudenSquare, build_youden, delete_column,
                      develop, four_cycle_blocks, verify_sbibd, verify_youden)
from .diffsets import (DifferenceSet, MultiplierReport, complement, group_ring_identity_holds,
                       multiplier_report, numerical_multiplier_check, reversibility_sanity,
                       s_subgroup, search_difference_sets, translate, verify_difference_set)
from .family import (FamilyMember, HadamardParameters, family_triple_array,
                     generate_family_member, hadamard_parameters, menon_complement_product)
from .groupring import GroupRingElement
from .groups import (Element, FiniteGroup, group_from_spec, is_subgroup, make_abelian,
                     make_cyclic, make_direct_product, make_from_permutation_generators,
                     make_metacyclic)

__version__ = "0.1.0"
