from itertools import product as iproduct
from math import lcm

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffgraph.groups import (
    AbelianGroup,
    CayleyTableError,
    GroupCapError,
    Permutation,
    PermutationGroup,
    SpecError,
    build_group,
    center,
    center_size,
    export_cayley,
    import_cayley,
    in_alternating,
    is_eppo,
    is_nilpotent,
    is_p_group,
    parse_spec,
    prime_divisors,
    sign,
    support,
)
from diffgraph.groups.properties import fingerprint
from diffgraph.groups.subgroups import all_subgroups, generated_subgroup

from oracles import symmetric_order_histogram

SMALL_SPECS = ["Z6", "Z2 x Z4", "D5", "S4", "A4", "sd(Z3,Z4,2)", "S3 x Z2", "D4 x Z3", "Z3 x Z3 x Z2"]


# -- spec language ------------------------------------------------------------


def test_parse_basic_forms():
    assert str(parse_spec("Z6")) == "Z6"
    assert str(parse_spec("Z7 x Z12")) == "Z7 x Z12"
    assert str(parse_spec("sd(Z7,Z12,3)")) == "sd(Z7,Z12,3)"
    assert str(parse_spec(" D4  x S3 ")) == "D4 x S3"


def test_parse_semidirect_validity():
    parse_spec("sd(Z7,Z12,2)")  # 2^12 = 4096 = 1 mod 7
    with pytest.raises(SpecError):
        parse_spec("sd(Z7,Z12,7)")  # gcd(7, 7) != 1
    with pytest.raises(SpecError):
        parse_spec("sd(Z7,Z5,3)")  # 3^5 != 1 mod 7


@pytest.mark.parametrize("text", ["", "Q8", "Z", "Z0", "Z6 x", "sd(Z7,Z12)", "Z6 x (Z2"])
def test_parse_errors(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_parse_error_carries_position():
    with pytest.raises(SpecError) as info:
        parse_spec("Z6 x Q2")
    assert info.value.position == 5


def test_direct_vs_semidirect_same_order():
    a, b = build_group("Z7 x Z12"), build_group("sd(Z7,Z12,3)")
    assert a.order == b.order == 84
    assert a.order_histogram() != b.order_histogram()


def test_backend_choice():
    assert build_group("Z6").backend == "factored-abelian"
    assert build_group("Z2 x Z3 x Z4").backend == "factored-abelian"
    assert build_group("S5").backend == "permutation"
    assert build_group("A5").backend == "permutation"
    assert build_group("D4").backend == "cayley"
    assert build_group("S3 x Z2").backend == "cayley"


def test_caps():
    with pytest.raises(GroupCapError):
        build_group("S11")
    with pytest.raises(GroupCapError):
        build_group("D5000")
    with pytest.raises(GroupCapError):
        build_group("D50 x D50")


# -- examples ------------------------------------------------------------------


def test_z6_basics():
    G = build_group("Z6")
    assert G.order == 6 and G.order_of(G.identity) == 1
    assert G.order_histogram() == {1: 1, 2: 1, 3: 2, 6: 2}
    assert G.multiply(2, 3) == 5 and G.inverse(2) == 4 and G.order_of(3) == 2
    assert G.cyclic_subgroup(2) == [0, 2, 4]
    assert G.closure(2, 3) == set(range(6))
    assert center(G) == set(range(6))


def test_s5_order_histogram_matches_enumeration():
    G = build_group("S5")
    assert G.order == 120
    assert G.order_histogram() == {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}
    assert G.order_histogram() == symmetric_order_histogram(5)
    assert center_size(G) == 1


def test_s4_composition_convention():
    G = build_group("S4")
    a = Permutation.from_cycles([[1, 2]], 4)
    b = Permutation.from_cycles([[1, 3]], 4)
    assert G.multiply(a, b) == Permutation.from_cycles([[1, 3, 2]], 4)
    c = Permutation.from_cycles([[3, 4]], 4)
    assert len(G.closure(a, c)) == 4


def test_semidirect_noncommutative():
    G = build_group("sd(Z3,Z4,2)")
    x, y = G.from_coords((1, 0)), G.from_coords((0, 1))
    assert G.multiply(x, y) != G.multiply(y, x)


def test_witness_group_84():
    G = build_group("sd(Z7,Z12,3)")
    assert G.order == 84 and center_size(G) == 2
    assert not is_nilpotent(G)
    assert prime_divisors(G) == (2, 3, 7)


def test_prime_divisors_and_p_groups():
    assert prime_divisors(build_group("D8")) == (2,)
    assert is_p_group(build_group("D8"))
    assert prime_divisors(build_group("S5")) == (2, 3, 5)
    assert not is_p_group(build_group("S5"))


def test_nilpotency_and_eppo():
    assert is_nilpotent(build_group("Z4 x Z4 x Z6"))
    assert not is_nilpotent(build_group("S3"))
    assert is_nilpotent(build_group("D4 x Z3"))
    assert is_eppo(build_group("S3")) and not is_eppo(build_group("Z6")) and not is_eppo(build_group("S5"))
    assert is_eppo(build_group("D9"))


def test_permutation_support_and_sign():
    e = Permutation.identity(5)
    assert support(e) == 0 and sign(e) == 1
    s = Permutation.from_cycles([[1, 2, 3], [4, 5]], 5)
    assert support(s) == 5 and len(s.cycles) == 2 and sign(s) == -1
    t = Permutation.from_cycles([[1, 2], [3, 4]], 4)
    assert support(t) == 4 and sign(t) == 1 and in_alternating(t)


def test_alternating_parity_formula_exhaustive_s5():
    G = build_group("S5")
    A = build_group("A5")
    evens = set()
    for x in G.elements():
        parity = (-1) ** (support(x) - len(x.cycles))
        assert sign(x) == parity
        if parity == 1:
            evens.add(x)
    assert evens == set(A.elements())


# -- cayley files ---------------------------------------------------------------


def test_cayley_round_trip(tmp_path):
    G = build_group("Z6")
    path = tmp_path / "z6.txt"
    export_cayley(G, path)
    H = import_cayley(path)
    assert H.order_histogram() == G.order_histogram()
    export_cayley(H, tmp_path / "again.txt")
    strip = lambda p: [ln for ln in p.read_text().splitlines() if not ln.startswith("#")]
    assert strip(path) == strip(tmp_path / "again.txt")


def test_cayley_spec_with_path(tmp_path):
    export_cayley(build_group("S3"), tmp_path / "s3.txt")
    G = build_group(f"cayley({tmp_path / 's3.txt'})")
    assert G.order == 6 and center_size(G) == 1


def test_cayley_z2_and_rejections(tmp_path):
    p = tmp_path / "z2.txt"
    p.write_text("2\n0 1\n1 0\n")
    assert import_cayley(p).identity == 0
    p.write_text("3\n0 1 1\n1 2 0\n2 0 1\n")
    with pytest.raises(CayleyTableError, match="Latin"):
        import_cayley(p)
    # a Latin square without associativity (quasigroup with identity 0)
    p.write_text("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n")
    with pytest.raises(CayleyTableError, match="associativity"):
        import_cayley(p)


# -- properties --------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(SMALL_SPECS), data=st.data())
def test_order_equals_cyclic_subgroup_length(spec, data):
    G = build_group(spec)
    x = G.element(data.draw(st.integers(0, G.order - 1)))
    k = G.order_of(x)
    assert len(G.cyclic_subgroup(x)) == k
    assert G.power(x, k) == G.identity
    assert G.order % k == 0


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(SMALL_SPECS), data=st.data())
def test_inverse_and_conjugation(spec, data):
    G = build_group(spec)
    x = G.element(data.draw(st.integers(0, G.order - 1)))
    g = G.element(data.draw(st.integers(0, G.order - 1)))
    assert G.multiply(x, G.inverse(x)) == G.identity
    conj = G.multiply(G.multiply(g, x), G.inverse(g))
    assert G.order_of(conj) == G.order_of(x)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_direct_product_orders_are_lcms(data):
    G = build_group("S3 x Z4")
    i = data.draw(st.integers(0, G.order - 1))
    a, b = G.coords[i]
    S, Z = build_group("S3"), build_group("Z4")
    assert G.order_of(i) == lcm(S.order_of(a), Z.order_of(b))


@settings(max_examples=40, deadline=None)
@given(moduli=st.lists(st.integers(1, 12), min_size=1, max_size=3), data=st.data())
def test_abelian_product_orders_are_lcms(moduli, data):
    G = AbelianGroup(moduli)
    coords = [data.draw(st.integers(0, m - 1)) for m in moduli]
    x = G._wrap(coords)
    expected = lcm(*[m // np.gcd(c, m) for c, m in zip(coords, moduli)])
    assert G.order_of(x) == expected


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 7), data=st.data())
def test_sign_is_multiplicative(n, data):
    G = PermutationGroup(n)
    a = G.element(data.draw(st.integers(0, G.order - 1)))
    b = G.element(data.draw(st.integers(0, G.order - 1)))
    assert sign(G.multiply(a, b)) == sign(a) * sign(b)


@pytest.mark.parametrize("n,m", [(3, 4), (5, 4), (7, 6), (7, 12), (9, 6)])
def test_trivial_action_is_direct_product(n, m):
    a, b = build_group(f"sd(Z{n},Z{m},1)"), build_group(f"Z{n} x Z{m}")
    assert a.order_histogram() == b.order_histogram()


def test_identity_law_all_small_specs():
    for spec in SMALL_SPECS:
        G = build_group(spec)
        for x in G.elements():
            assert G.multiply(G.identity, x) == x == G.multiply(x, G.identity)


# -- subgroups and fingerprints ------------------------------------------------------


@pytest.mark.parametrize("spec,count", [("S3", 6), ("Z2 x Z2", 5), ("S4", 30), ("Z30 x Z2", 20), ("D4", 10), ("Z12", 6)])
def test_subgroup_counts(spec, count):
    # counts of subgroups are standard: S4 has 30, D4 has 10, Z_n has d(n)
    assert len(all_subgroups(build_group(spec))) == count


def test_subgroups_are_closed():
    G = build_group("sd(Z3,Z4,2)")
    for H in all_subgroups(G):
        assert G.order % len(H) == 0
        for i, j in iproduct(H, H):
            assert int(G.mul_row(i)[j]) in H
        assert generated_subgroup(G, sorted(H)) == H


def test_fingerprint_separates_small_groups():
    prints = {fingerprint(build_group(s)) for s in ["Z8", "Z2 x Z4", "Z2 x Z2 x Z2", "D4"]}
    assert len(prints) == 4
    assert fingerprint(build_group("D6")) == fingerprint(build_group("S3 x Z2"))  # isomorphic
