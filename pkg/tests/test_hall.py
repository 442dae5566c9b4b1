import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilorder.elements import commutator, power
from nilorder.errors import DomainError
from nilorder.hall.basis import formal_commutator_count, formal_commutators, hall_basis, is_degenerate
from nilorder.hall.collector import NormalWord, collect, get_collector
from nilorder.hall.constants import class_constants, constant_a, prime_factors
from nilorder.hall.magnus import MagnusAlgebra
from nilorder.hall.polynomials import (
    BinomialPolynomial,
    binom,
    divisibility_check,
    format_golden,
    hall_polynomials,
    parse_golden,
)
from nilorder.harness.catalog import build


def _mobius(n):
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def witt(w, k=2):
    return sum(_mobius(d) * k ** (w // d) for d in range(1, w + 1) if w % d == 0) // w


def test_basis_small_classes():
    assert [c.name for c in hall_basis(1)] == ["a", "b"]
    assert [c.name for c in hall_basis(2)] == ["a", "b", "[b,a]"]
    assert [c.name for c in hall_basis(3)] == ["a", "b", "[b,a]", "[[b,a],a]", "[[b,a],b]"]


def test_basis_sizes_match_witt_formula():
    for gamma in range(1, 7):
        basis = hall_basis(gamma)
        for w in range(1, gamma + 1):
            assert sum(1 for c in basis if c.weight == w) == witt(w)
        weights = [c.weight for c in basis]
        assert weights == sorted(weights)


def test_basis_domain():
    with pytest.raises(DomainError):
        hall_basis(0)
    with pytest.raises(DomainError):
        hall_basis(7)


def test_formal_count():
    assert formal_commutator_count(1)[1] == 1
    counts, r = formal_commutator_count(2)
    assert counts[2] == 4 and r == 5
    counts, r = formal_commutator_count(3)
    assert counts[3] == 16 and r == 21
    for g in range(1, 5):
        assert len(formal_commutators(g)) == formal_commutator_count(g)[1] + 1
    assert is_degenerate(("a", "a")) and not is_degenerate(("b", "a"))


def test_collect_examples():
    assert collect([0, 1], 2).exponents == (1, 1, 0)
    assert collect([1, 0], 2).exponents == (1, 1, 1)
    for n in range(-5, 12):
        w = collect([0, 1] * n if n >= 0 else [-2, -1] * -n, 2)
        assert w.exponents == (n, n, binom(n, 2))


def _random_word(rng, size, length):
    return [(rng.randrange(size), rng.choice([-2, -1, 1, 2, 3])) for _ in range(length)]


def test_collector_against_magnus_oracle():
    rng = random.Random(3)
    for gamma in range(1, 7):
        col = get_collector(gamma)
        mag = MagnusAlgebra(gamma)
        for _ in range(12 if gamma < 6 else 4):
            word = _random_word(rng, col.size, rng.randint(1, 10))
            assert collect(word, gamma).exponents == mag.normal_form(mag.word(word))


def test_collection_is_a_homomorphism():
    rng = random.Random(9)
    for gamma in range(1, 6):
        size = get_collector(gamma).size
        for _ in range(15):
            w1 = _random_word(rng, size, rng.randint(0, 12))
            w2 = _random_word(rng, size, rng.randint(0, 12))
            assert collect(w1, gamma) * collect(w2, gamma) == collect(w1 + w2, gamma)
            inv = [(k, -e) for k, e in reversed(w1)]
            assert collect(w1 + inv, gamma).is_identity()
            assert collect(w1, gamma).inverse() == collect(inv, gamma)


def test_normal_word_length_checked():
    with pytest.raises(ValueError):
        NormalWord(2, (1, 2))
    assert str(collect([1, 0], 2)) == "a b [b,a]"


def test_hall_polynomials_class_two():
    polys = hall_polynomials(2)
    assert list(polys) == [2]
    assert polys[2].coefficients == (0, 1)
    assert all(polys[2](n) == n * (n - 1) // 2 for n in range(-10, 30))


def test_hall_formula_up_to_thirty():
    for gamma in range(1, 6):
        col = get_collector(gamma)
        polys = hall_polynomials(gamma)
        ab = collect([0, 1], gamma)
        for n in range(0, 31):
            expected = (n, n) + tuple(polys[k](n) for k in range(2, col.size))
            assert (ab ** n).exponents == expected
        for f in polys.values():
            assert all(isinstance(x, int) for x in f.coefficients)
            assert f(0) == 0 and f(1) == 0


def test_polynomial_degrees_and_denominators():
    for gamma in range(1, 7):
        basis = hall_basis(gamma)
        for k, f in hall_polynomials(gamma).items():
            assert f.degree_bound == basis[k].weight
            assert factorial(gamma) % f.common_denominator() == 0


def test_monomial_coefficients():
    f = BinomialPolynomial((0, 1))
    assert f.monomial_coefficients() == [0, Fraction(-1, 2), Fraction(1, 2)]


def test_binom_negative():
    assert binom(-1, 2) == 1
    assert binom(-3, 3) == -10


def test_hall_formula_in_concrete_groups():
    # evaluate basic commutators on actual elements of class-3 groups
    for name in ("dih16", "ut4_2", "ut4_3"):
        G = build(name)
        basis = hall_basis(3)
        polys = hall_polynomials(3)
        rng = random.Random(name)
        for _ in range(30):
            a, b = rng.choice(G.elements), rng.choice(G.elements)
            vals = [a, b]
            for c in basis[2:]:
                vals.append(commutator(vals[c.left], vals[c.right]))
            for n in range(0, 13):
                rhs = power(a, n) * power(b, n)
                for k in range(2, len(basis)):
                    rhs = rhs * power(vals[k], polys[k](n))
                assert power(a * b, n) == rhs


def test_divisibility_check():
    assert divisibility_check(2, 2)
    assert divisibility_check(2, 12)
    assert divisibility_check(3, 36)
    for gamma in range(1, 6):
        for q in range(1, 25):
            assert divisibility_check(gamma, q * factorial(gamma))
    with pytest.raises(DomainError):
        divisibility_check(3, 4)


def test_constants():
    k1 = class_constants(1)
    assert (k1.A, k1.B, k1.C, k1.B_prime, k1.C_prime) == (1, 1, 1, 1, 1)
    k2 = class_constants(2)
    assert (k2.r_formal, k2.A, k2.B, k2.C) == (5, 8, 16, 16)
    k3 = class_constants(3)
    assert k3.A == 6 ** 19
    assert k3.B == 6 * 8 * 6 ** 19
    assert k3.C == 6 * 8 * 1 * 6 ** 19 * 2


def test_constants_prime_bound():
    for gamma in range(1, 7):
        k = class_constants(gamma)
        for x in (k.A, k.B, k.C):
            assert all(p <= gamma for p in prime_factors(x))
        assert constant_a(gamma) == k.A


def test_golden_file_roundtrip():
    from importlib.resources import files

    text = files("nilorder").joinpath("data/hall_lambda.txt").read_text()
    golden = parse_golden(text)
    assert golden == parse_golden(format_golden(range(1, 7)))
    assert golden[2, 2] == (2, (0, 1))
    assert golden[3, 3] == (3, (0, 0, 1))
    assert golden[3, 4] == (3, (0, 1, 2))
    with pytest.raises(ValueError):
        parse_golden("2 2 2 0")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 30), st.integers(-3, 3)), max_size=8))
def test_collect_matches_magnus_property(gamma, raw):
    size = get_collector(gamma).size
    word = [(k % size, e) for k, e in raw]
    mag = MagnusAlgebra(gamma)
    assert collect(word, gamma).exponents == mag.normal_form(mag.word(word))
