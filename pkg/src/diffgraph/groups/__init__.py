from diffgraph.groups.abelian import AbelianGroup
from diffgraph.groups.base import FiniteGroup, ForeignElementError, GroupCapError
from diffgraph.groups.build import build_group, spec_order
from diffgraph.groups.cayley import CayleyGroup, to_cayley
from diffgraph.groups.io import CayleyTableError, export_cayley, import_cayley
from diffgraph.groups.permgroup import PermutationGroup
from diffgraph.groups.permutation import Permutation, in_alternating, sign, support
from diffgraph.groups.properties import (
    center,
    center_size,
    is_abelian,
    is_eppo,
    is_nilpotent,
    is_p_group,
    is_trivial,
    prime_divisors,
)
from diffgraph.groups.spec import GroupSpec, SpecError, parse_spec

__all__ = [
    "AbelianGroup",
    "CayleyGroup",
    "CayleyTableError",
    "FiniteGroup",
    "ForeignElementError",
    "GroupCapError",
    "GroupSpec",
    "Permutation",
    "PermutationGroup",
    "SpecError",
    "build_group",
    "center",
    "center_size",
    "export_cayley",
    "import_cayley",
    "in_alternating",
    "is_abelian",
    "is_eppo",
    "is_nilpotent",
    "is_p_group",
    "is_trivial",
    "parse_spec",
    "prime_divisors",
    "sign",
    "spec_order",
    "support",
    "to_cayley",
]
