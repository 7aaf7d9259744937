"""mnlab: finite permutation groups, congruence lattices, and exhaustive
verification of the minimal M_{p+1} congruence-lattice representation."""

from .congruence import (UnaryAlgebra, all_congruences, congruences_oracle,
                         galois_closure, galois_is_closed, gset_algebra,
                         preserves, preserving_maps, principal_congruence)
from .construct import (CosetAction, GroupSpec, alternating, catalog,
                        coset_action, cyclic, dihedral, direct_product, klein,
                        quaternion, regular_action, symmetric)
from .lattice import FinLattice, NotALatticeError, chain, iso_check, m_n
from .partition import Partition, all_partitions, bell_number
from .perm import (Coset, Perm, PermGroup, all_subgroups, compose, core,
                   cosets, group_closure, interval, is_dihedral, is_normal,
                   is_simple, quotient, subgroup_join)
from .verify import (LemmaFinding, VerificationReport, check_lemma,
                     check_theorem1, check_theorem2, minimal_representation)

__version__ = "0.1.0"

__all__ = [
    "Coset", "CosetAction", "FinLattice", "GroupSpec", "LemmaFinding",
    "NotALatticeError", "Partition", "Perm", "PermGroup", "UnaryAlgebra",
    "VerificationReport", "all_congruences", "all_partitions", "all_subgroups",
    "alternating", "bell_number", "catalog", "chain", "check_lemma",
    "check_theorem1", "check_theorem2", "compose", "congruences_oracle",
    "core", "coset_action", "cosets", "cyclic", "dihedral", "direct_product",
    "galois_closure", "galois_is_closed", "group_closure", "gset_algebra",
    "interval", "is_dihedral", "is_normal", "is_simple", "iso_check", "klein",
    "m_n", "minimal_representation", "preserves", "preserving_maps",
    "principal_congruence", "quaternion", "quotient", "regular_action",
    "subgroup_join", "symmetric",
]
