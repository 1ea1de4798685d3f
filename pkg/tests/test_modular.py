import random

import pytest

from frobdiv import PrimeField, Poly, QQ, Rat
from frobdiv.modular import (
    ComponentAlgebra,
    component_units,
    factor_mod_p,
    good_primes,
    hensel_lift_idempotent,
    interpolate_mod,
    is_prime,
    lift_cyclotomic_root,
    modular_split,
    primitive_root,
    reconstruct_element,
    reduce_scalar,
    roots_mod_p,
    squarefree_part,
)

from conftest import group_algebra_plain, matrix_algebra_2x2


def test_is_prime():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59]
    assert is_prime(10 ** 9 + 7)
    assert not is_prime(561)  # Carmichael


def test_primitive_root():
    for p in (3, 7, 13, 97):
        g = primitive_root(p)
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        assert len(seen) == p - 1


def test_good_prime_policy():
    from frobdiv import CyclotomicField
    A = group_algebra_plain("C6", field=CyclotomicField(6))
    gen = good_primes(A)
    ps = [next(gen) for _ in range(3)]
    for p in ps:
        assert is_prime(p) and p % 6 == 1 and p > 12 and p % 2 and p % 3


def test_component_units():
    assert component_units(1) == [1]
    assert component_units(6) == [1, 5]
    assert component_units(12) == [1, 5, 7, 11]


def test_lift_cyclotomic_root():
    z = lift_cyclotomic_root(6, 7, 7)
    assert pow(z, 6, 7) == 1 and pow(z, 2, 7) != 1 and pow(z, 3, 7) != 1
    z2 = lift_cyclotomic_root(6, 7, 7 ** 4)
    assert z2 % 7 == z or pow(z2 % 7, 1, 7)  # reduces to a 6th root mod 7
    assert pow(z2, 6, 7 ** 4) == 1
    # Newton lift lands above the same mod-p root
    assert z2 % 7 == z


def test_reduce_scalar_rational():
    half = QQ.from_rat(Rat(1, 2))
    assert reduce_scalar(QQ, half, 1, 7) == 4  # 1/2 = 4 mod 7
    assert reduce_scalar(QQ, half, 1, 49) == 25


def test_squarefree_and_factor():
    gf = PrimeField(7)
    # (x-1)^2 (x-2) over F_7
    f = Poly.from_ints(gf, [-2, 5, -4, 1])
    sq = squarefree_part(f)
    assert sq.degree() == 2
    fac = factor_mod_p(sq.monic(), 7, random.Random(0))
    assert sorted(g.degree() for g in fac) == [1, 1]
    roots = roots_mod_p(sq.monic(), 7, random.Random(0))
    assert sorted(roots) == [1, 2]


def test_roots_mod_p_irreducible():
    gf = PrimeField(7)
    # x^2 + 1 has no roots mod 7 (7 = 3 mod 4)
    f = Poly.from_ints(gf, [1, 0, 1])
    assert roots_mod_p(f, 7, random.Random(0)) == []


def test_component_algebra_c2():
    A = group_algebra_plain("C2")
    comp = ComponentAlgebra(A, 1, 7)
    assert comp.multiply([0, 1], [0, 1]) == [1, 0]
    gf = PrimeField(7)
    m = comp.left_mult_matrix([0, 1], gf)
    assert m.apply([gf.one, gf.zero]) == [gf.zero, gf.one]


def test_modular_split_c2():
    # QC2 mod 7: idempotents (1 +- g)/2 reduce to 4 + 4g and 4 + 3g
    A = group_algebra_plain("C2")
    blocks = modular_split(A, 7, 1)
    assert len(blocks) == 2
    elems = sorted(b.central_idempotent for b in blocks)
    assert elems == [[4, 3], [4, 4]]
    assert all(b.degree == 1 and b.block_dim == 1 for b in blocks)


def test_modular_split_s3():
    A = group_algebra_plain("S3")
    blocks = modular_split(A, 13, 1)
    assert sorted(b.degree for b in blocks) == [1, 1, 2]
    assert sorted(b.block_dim for b in blocks) == [1, 1, 4]
    assert all(b.center_dim == 1 for b in blocks)
    # idempotents sum to the unit and are orthogonal mod 13
    comp = ComponentAlgebra(A, 1, 13)
    total = [0] * 6
    for b in blocks:
        sq = comp.multiply(b.central_idempotent, b.central_idempotent)
        assert sq == [x % 13 for x in b.central_idempotent]
        total = [(x + y) % 13 for x, y in zip(total, b.central_idempotent)]
    assert total == [1, 0, 0, 0, 0, 0]


def test_modular_split_matrix_algebra():
    A = matrix_algebra_2x2()
    blocks = modular_split(A, 11, 1)
    assert len(blocks) == 1
    b = blocks[0]
    assert b.degree == 2 and b.block_dim == 4 and b.center_dim == 1
    # primitive idempotent has rank-1 image: dim u A u = 1 was checked
    # internally; here confirm u^2 = u
    comp = ComponentAlgebra(A, 1, 11)
    u = b.primitive_idempotent
    assert comp.multiply(u, u) == [x % 11 for x in u]


def test_modular_split_deterministic():
    A = group_algebra_plain("S3")
    a = modular_split(A, 13, 1, seed=0)
    b = modular_split(A, 13, 1, seed=0)
    assert [x.central_idempotent for x in a] == [x.central_idempotent for x in b]


def test_hensel_lift():
    # e = 4 + 4g idempotent mod 7 lifts to 25 + 25g mod 49
    A = group_algebra_plain("C2")
    comp49 = ComponentAlgebra(A, 1, 49)
    e = hensel_lift_idempotent(comp49, [4, 4], 49)
    assert e == [25, 25]
    assert comp49.multiply(e, e) == e


def test_interpolate_mod():
    # f(x) = 2x + 3 through points (1,5), (2,7) mod 11
    coeffs = interpolate_mod([(1, 5), (2, 7)], 11, 11)
    assert coeffs[0] % 11 == 3 and coeffs[1] % 11 == 2


def test_reconstruct_element_rational():
    # single component, root 1: element [25, 25] mod 49 -> [1/2, 1/2]
    got = reconstruct_element(QQ, [[25, 25]], [1], 49, 7)
    half = QQ.from_rat(Rat(1, 2))
    assert got == [half, half]
