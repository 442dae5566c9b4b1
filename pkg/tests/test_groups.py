import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilorder.elements import (
    element_order,
    format_cycles,
    from_cycles,
    identity_like,
    inverse,
    multiply,
    permutation,
    power,
    unitriangular,
)
from nilorder.errors import GroupTooLarge, MembershipError, RepresentationMismatch
from nilorder.groups import centralizer, cyclic_intersection, generate, lower_central_series
from nilorder.harness.catalog import build, catalog


def test_power_zero_is_identity(rs):
    r, _ = rs
    assert power(r, 0) == identity_like(r)
    assert power(r, 4) == identity_like(r)


def test_heis3_exponent_three():
    G = build("heis3")
    assert all(power(x, 3) == G.identity for x in G)


def test_element_orders(rs):
    r, s = rs
    assert element_order(identity_like(r)) == 1
    assert element_order(r) == 4
    assert element_order(s) == 2
    x = from_cycles([(0, 1, 2), (3, 4, 5, 6)], 7)
    assert element_order(x) == 12
    assert element_order(power(x, 8)) == 3


def test_inverse_and_negative_powers():
    x = unitriangular([1, 2, 1, 0, 1, 4, 0, 0, 1], 3, 5)
    assert multiply(x, inverse(x)).is_identity()
    assert power(x, -3) == inverse(power(x, 3))


def test_representation_mismatch():
    a = permutation([1, 0, 2])
    b = permutation([1, 0])
    with pytest.raises(RepresentationMismatch):
        a * b
    with pytest.raises(RepresentationMismatch):
        unitriangular([1, 1, 0, 1], 2, 3) * unitriangular([1, 1, 0, 1], 2, 5)


def test_invalid_elements():
    with pytest.raises(ValueError):
        permutation([0, 0, 1])
    with pytest.raises(ValueError):
        unitriangular([2, 0, 0, 1], 2, 3)
    with pytest.raises(ValueError):
        unitriangular([1, 0, 1, 1], 2, 3)


def test_unitriangular_reduces_entries():
    assert unitriangular([1, 7, 0, 1], 2, 3) == unitriangular([1, 1, 0, 1], 2, 3)


def test_format_cycles_is_one_based(rs):
    assert format_cycles(rs[0]) == "(1 2 3 4)"
    assert format_cycles(rs[1]) == "(1 3)"


def test_generate_orders(rs):
    one = identity_like(rs[0])
    assert generate([one]).order == 1
    assert generate(list(rs)).order == 8
    assert build("heis3").order == 27


def test_generate_cap():
    with pytest.raises(GroupTooLarge) as exc:
        generate(build("S4").generators, cap=10)
    assert "10" in str(exc.value)


def test_generate_idempotent(d4):
    again = generate(list(d4.elements))
    assert set(again.elements) == set(d4.elements)


def test_closure_and_determinism(d4):
    els = set(d4.elements)
    assert all(x * y in els for x in els for y in els)
    assert all(inverse(x) in els for x in els)
    assert d4.elements == generate(list(d4.generators)).elements


def test_centralizer(d4, rs):
    r, _ = rs
    assert centralizer(d4, d4.identity) == frozenset(d4.elements)
    cr = centralizer(d4, r)
    assert len(cr) == 4 and power(r, 2) in cr
    assert centralizer(d4, power(r, 2)) == frozenset(d4.elements)
    with pytest.raises(MembershipError):
        centralizer(d4, from_cycles([(0, 1)], 4))


def test_centralizer_is_subgroup_and_power_count_divides():
    G = build("dih16")
    for g in G.elements[:6]:
        C = centralizer(G, g)
        assert all(x * y in C for x in C for y in C)
        for a in G.elements:
            k = sum(1 for i in range(element_order(a)) if power(a, i) in C)
            assert element_order(a) % k == 0


def test_cyclic_intersection_examples(rs):
    r, s = rs
    assert cyclic_intersection(r, s).e == 1
    d = cyclic_intersection(r, r)
    assert (d.e, d.g, d.u, d.v) == (4, r, 1, 1)
    d = cyclic_intersection(r, power(r, 2))
    assert d.e == 2 and d.g == power(r, 2)


def test_cyclic_intersection_consistency():
    for name in ("dih16", "heis4", "z4xz6", "S4"):
        G = build(name)
        for a, b in itertools.islice(itertools.product(G.elements, repeat=2), 400):
            d = cyclic_intersection(a, b)
            assert gcd(d.m, d.n) % d.e == 0
            assert element_order(d.g) == d.e
            assert power(a, d.m // d.e) == power(d.g, d.u)
            assert power(b, d.n // d.e) == power(d.g, d.v)


def test_lower_central_series_and_class(d4):
    z = build("z4xz6")
    assert len(lower_central_series(z)) == 2 and z.nilpotency_class == 1
    assert d4.nilpotency_class == 2
    assert build("ut4_3").nilpotency_class == 3
    assert build("S4").nilpotency_class is None
    assert generate([identity_like(d4.identity)]).nilpotency_class == 0


def test_catalog_entries_build():
    for entry in catalog():
        if entry.expected_order > 5000:
            continue
        G = entry.build()
        assert G.order == entry.expected_order
        assert G.nilpotency_class == entry.expected_class


def test_heisenberg_family_is_class_two():
    for name in ("heis3", "heis4", "heis5", "heis9"):
        assert build(name).nilpotency_class == 2


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(7)), st.integers(-50, 50))
def test_order_of_power(images, k):
    x = permutation(images)
    n = element_order(x)
    assert element_order(power(x, k)) * gcd(n, k) == n
