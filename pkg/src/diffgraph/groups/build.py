from __future__ import annotations

from math import prod
from pathlib import Path

from diffgraph.groups.abelian import AbelianGroup
from diffgraph.groups.base import FiniteGroup, GroupCapError
from diffgraph.groups.cayley import (
    DEFAULT_CAYLEY_CAP,
    CayleyGroup,
    dihedral_group,
    direct_product_cayley,
    semidirect_group,
    to_cayley,
)
from diffgraph.groups.io import import_cayley
from diffgraph.groups.permgroup import DEFAULT_PERM_CAP, PermutationGroup
from diffgraph.groups.spec import (
    Alternating,
    CayleyFile,
    Cyclic,
    Dihedral,
    GroupSpec,
    Product,
    Semidirect,
    Symmetric,
    check_semidirect,
    parse_spec,
)


def spec_order(spec: GroupSpec) -> int | None:
    """|G| without building G; None for imported tables."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Symmetric):
        return prod(range(1, spec.n + 1))
    if isinstance(spec, Alternating):
        return max(1, prod(range(1, spec.n + 1)) // 2)
    if isinstance(spec, Semidirect):
        return spec.n * spec.m
    if isinstance(spec, Product):
        sizes = [spec_order(f) for f in spec.factors]
        return None if None in sizes else prod(sizes)
    return None


def build_group(
    spec: GroupSpec | str,
    *,
    cayley_cap: int = DEFAULT_CAYLEY_CAP,
    perm_cap: int = DEFAULT_PERM_CAP,
    base_dir: str | Path | None = None,
) -> FiniteGroup:
    """Construct a group, choosing the backend from the spec's shape.

    S_n/A_n use the permutation backend, direct products of cyclic groups the
    factored-abelian backend, and everything else a Cayley table.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)
    text = str(spec)
    if isinstance(spec, Cyclic):
        return AbelianGroup((spec.n,), spec=text)
    if isinstance(spec, Product) and all(isinstance(f, Cyclic) for f in spec.factors):
        return AbelianGroup(tuple(f.n for f in spec.factors), spec=text)
    if isinstance(spec, (Symmetric, Alternating)):
        return PermutationGroup(spec.n, alternating=isinstance(spec, Alternating), cap=perm_cap)

    size = spec_order(spec)
    if size is not None and size > cayley_cap:
        raise GroupCapError(f"{text} has order {size}, above the cayley cap {cayley_cap}")
    if isinstance(spec, Dihedral):
        G = dihedral_group(spec.n)
    elif isinstance(spec, Semidirect):
        check_semidirect(spec.n, spec.m, spec.g)
        G = semidirect_group(spec.n, spec.m, spec.g)
    elif isinstance(spec, CayleyFile):
        path = Path(spec.path)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        G = import_cayley(path, cap=cayley_cap)
    elif isinstance(spec, Product):
        parts = [
            to_cayley(build_group(f, cayley_cap=cayley_cap, perm_cap=perm_cap, base_dir=base_dir))
            for f in spec.factors
        ]
        total = prod(p.order for p in parts)
        if total > cayley_cap:
            raise GroupCapError(f"{text} has order {total}, above the cayley cap {cayley_cap}")
        G = direct_product_cayley(parts)
    else:
        raise TypeError(f"unknown spec node {spec!r}")
    G.spec = text
    return G


__all__ = ["build_group", "spec_order", "CayleyGroup"]
