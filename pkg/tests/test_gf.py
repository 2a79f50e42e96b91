import pytest

from grpverify.gf import field_new, field_of_order, is_prime, is_prime_power


def test_prime_field_modulus_is_x():
    f = field_new(3, 1)
    assert f.q == 3
    assert f.modulus == (0, 1)


def test_gf4_modulus_unique_quadratic():
    f = field_new(2, 2)
    assert f.q == 4
    # x^2 + x + 1 is the only irreducible quadratic over F_2
    assert f.modulus == (1, 1, 1)


def test_gf9_orders_divide_eight():
    f = field_new(3, 2)
    assert f.q == 9
    for a in range(1, 9):
        assert 8 % f.element_order(a) == 0


def test_gf7_inverse():
    f = field_new(7, 1)
    assert f.mul(3, 5) == 1
    assert f.inv(3) == 5


def test_gf3_add():
    f = field_new(3, 1)
    assert f.add(2, 2) == 1


def test_inverse_axiom_gf9():
    f = field_new(3, 2)
    for a in range(1, f.q):
        assert f.mul(a, f.inv(a)) == 1


def test_inv_zero_raises():
    f = field_new(5, 1)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_field_new_validates():
    with pytest.raises(ValueError):
        field_new(6, 1)
    with pytest.raises(ValueError):
        field_new(2, 9)


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_field_axioms_exhaustive(p, k):
    f = field_new(p, k)
    q = f.q
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in range(q):
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 1)])
def test_frobenius_is_additive(p, k):
    f = field_new(p, k)
    for a in range(f.q):
        for b in range(f.q):
            assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p))


def test_primitive_element_gf3():
    assert field_new(3, 1).primitive_element() == 2


def test_primitive_element_gf5_by_direct_powering():
    f = field_new(5, 1)
    # brute-force oracle: orders of 2, 3, 4 by direct powering
    orders = {}
    for a in (2, 3, 4):
        x, n = a, 1
        while x != 1:
            x = (x * a) % 5
            n += 1
        orders[a] = n
    assert orders == {2: 4, 3: 4, 4: 2}
    assert f.primitive_element() == 2


def test_primitive_element_gf4_is_class_of_x():
    f = field_new(2, 2)
    # brute-force order check of all three nonzero elements
    orders = {a: f.element_order(a) for a in (1, 2, 3)}
    assert orders == {1: 1, 2: 3, 3: 3}
    # the class of x encodes as 2; it is the smallest generator
    assert f.primitive_element() == 2


@pytest.mark.parametrize("p,k", [(2, 4), (3, 2), (5, 2), (2, 8)])
def test_primitive_powers_enumerate_all(p, k):
    f = field_new(p, k)
    g = f.primitive_element()
    seen = set()
    x = 1
    for _ in range(f.q - 1):
        seen.add(x)
        x = f.mul(x, g)
    assert len(seen) == f.q - 1


def test_prime_power_helpers():
    assert is_prime(13) and not is_prime(1) and not is_prime(15)
    assert is_prime_power(27) and is_prime_power(8) and not is_prime_power(12)
    assert field_of_order(9).q == 9
    with pytest.raises(ValueError):
        field_of_order(6)
