import itertools

import pytest

from symstab.errors import (
    InvalidInputError,
    MissingModulusError,
    NonPrimeError,
    ReducibleModulusError,
)
from symstab.gf import make_field

F4_MODULUS = (1, 1, 1)  # x^2 + x + 1


def test_prime_field_addition_wraps():
    f2 = make_field(2)
    assert f2.add(1, 1) == 0
    assert f2.mul(1, 1) == 1


def test_f4_generator_square():
    # In F_4 = F_2[x]/(x^2+x+1) the element encoded 2 is x and x*x = x+1.
    f4 = make_field(2, 2, F4_MODULUS)
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1  # x * (x+1) = x^2 + x = 1


def test_non_prime_p_rejected():
    with pytest.raises(NonPrimeError):
        make_field(4)


def test_missing_modulus_rejected():
    with pytest.raises(MissingModulusError):
        make_field(2, 2)


def test_reducible_modulus_rejected():
    # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(ReducibleModulusError):
        make_field(2, 2, (1, 0, 1))


def test_non_monic_modulus_rejected():
    with pytest.raises(ReducibleModulusError):
        make_field(3, 2, (1, 0, 2))


def test_spurious_modulus_for_prime_field_rejected():
    with pytest.raises(InvalidInputError):
        make_field(5, 1, (1, 1))


def test_inverse_of_zero_undefined():
    f3 = make_field(3)
    with pytest.raises(ZeroDivisionError):
        f3.inv(0)


def test_trace_identity_on_prime_field():
    f2 = make_field(2)
    assert f2.trace(1) == 1
    f5 = make_field(5)
    assert [f5.trace(x) for x in range(5)] == [0, 1, 2, 3, 4]


def test_trace_f4_generator():
    # trace(x) = x + x^2 = x + (x+1) = 1
    f4 = make_field(2, 2, F4_MODULUS)
    assert f4.trace(2) == 1
    assert f4.trace(0) == 0
    # full table: 0, 1 -> 0 under x+x^2?  trace(1) = 1 + 1 = 0
    assert f4.trace(1) == 0
    assert f4.trace(3) == 1


def test_char_exp_values():
    f2 = make_field(2)
    assert f2.char_exp(1) == 1
    assert f2.phase(f2.char_exp(1)) == pytest.approx(-1.0)
    f3 = make_field(3)
    assert f3.char_exp(2) == 2
    assert f3.char_exp(0) == 0
    assert f3.phase(0) == pytest.approx(1.0)


SMALL_FIELDS = [
    make_field(2),
    make_field(3),
    make_field(5),
    make_field(2, 2, (1, 1, 1)),
    make_field(2, 3, (1, 1, 0, 1)),
    make_field(3, 2, (1, 0, 1)),  # x^2 + 1 irreducible over F_3
    make_field(2, 4, (1, 1, 0, 0, 1)),
]


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: f"q{c.q}")
def test_char_exp_additive(ctx):
    """char_exp(x+y) == char_exp(x) + char_exp(y) mod p, exhaustively."""
    for x in ctx.elements():
        for y in ctx.elements():
            assert ctx.char_exp(ctx.add(x, y)) == (ctx.char_exp(x) + ctx.char_exp(y)) % ctx.p


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: f"q{c.q}")
def test_char_nontrivial(ctx):
    assert any(ctx.char_exp(x) != 0 for x in ctx.elements())


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: f"q{c.q}")
def test_field_axioms_exhaustive(ctx):
    if ctx.q > 16:
        pytest.skip("axiom sweep capped at q = 16")
    els = list(ctx.elements())
    for x, y in itertools.product(els, repeat=2):
        assert ctx.add(x, y) == ctx.add(y, x)
        assert ctx.mul(x, y) == ctx.mul(y, x)
        assert ctx.add(x, ctx.neg(x)) == 0
        if x != 0:
            assert ctx.mul(x, ctx.inv(x)) == 1
    for x, y, z in itertools.product(els, repeat=3):
        assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))
        assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))


def test_dot_product():
    f3 = make_field(3)
    assert f3.dot((1, 2), (2, 2)) == 0  # 2 + 4 = 6 = 0 mod 3
    with pytest.raises(InvalidInputError):
        f3.dot((1,), (1, 2))


def test_field_context_shared_and_comparable():
    assert make_field(2) is make_field(2)
    assert make_field(2, 2, (1, 1, 1)) == make_field(2, 2, [1, 1, 1])
