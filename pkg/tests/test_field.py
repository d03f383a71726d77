"""Field construction, embeddings and polynomial factorization."""

import random

import pytest

from adequacy.errors import FieldCapExceeded, IncompatibleDegrees, NotPrime, ZeroPolynomial
from adequacy.field import (
    FqPoly,
    embed,
    embed_poly,
    factor_poly,
    is_prime,
    make_field,
    parse_field_descriptor,
    splitting_field_roots,
)


def poly(ctx, *ints):
    return FqPoly.from_ints(ctx, ints)


# -- make_field ----------------------------------------------------------------


def test_prime_field_modulus_is_x():
    ctx = make_field(3, 1)
    assert ctx.modulus == (0, 1)
    assert ctx.q == 3


def least_irreducible_quadratic_oracle(p):
    """Trial-divide every monic quadratic by every monic linear, in scan order."""
    ctx = make_field(p, 1)
    # scan order: ascending value c0 + c1*p, matching make_field
    for value in range(p * p):
        c0, c1 = value % p, value // p
        f = poly(ctx, c0, c1, 1)
        if all(not divmod(f, poly(ctx, a, 1))[1].is_zero() for a in range(p)):
            return (c0, c1, 1)
    raise AssertionError("no irreducible quadratic found")


def test_gf9_modulus_matches_trial_division_oracle():
    assert least_irreducible_quadratic_oracle(3) == (1, 0, 1)  # x^2 + 1
    ctx = make_field(3, 2)
    assert ctx.modulus == (1, 0, 1)


def test_gf25_and_gf49_moduli_match_oracle():
    for p in (5, 7):
        assert make_field(p, 2).modulus == least_irreducible_quadratic_oracle(p)


def test_composite_characteristic_rejected():
    with pytest.raises(NotPrime):
        make_field(4, 1)


def test_field_cap():
    with pytest.raises(FieldCapExceeded):
        make_field(2, 30)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for n in range(2, 25):
        assert is_prime(n) == (n in primes)


# -- field axioms ----------------------------------------------------------------


AXIOM_FIELDS = [(3, 1), (3, 2), (3, 4), (5, 1), (5, 2), (2, 3), (7, 1)]


@pytest.mark.parametrize("p,k", AXIOM_FIELDS)
def test_field_axioms_on_random_triples(p, k):
    ctx = make_field(p, k)
    rng = random.Random(1000 * p + k)
    one = ctx.one()
    for _ in range(60):
        a, b, c = (
            ctx.elem([rng.randrange(p) for _ in range(k)]) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == ctx.zero()
        if not a.is_zero():
            assert a * a.inverse() == one


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (2, 3)])
def test_frobenius_is_additive_and_fixes_prime_field(p, k):
    ctx = make_field(p, k)
    rng = random.Random(7)
    for _ in range(40):
        a = ctx.elem([rng.randrange(p) for _ in range(k)])
        b = ctx.elem([rng.randrange(p) for _ in range(k)])
        assert (a + b) ** p == a**p + b**p
    for c in range(p):
        assert ctx.elem(c) ** p == ctx.elem(c)


# -- embed ----------------------------------------------------------------


def test_embed_fixes_prime_subfield():
    gf3 = make_field(3, 1)
    gf9 = make_field(3, 2)
    img = embed(gf3.elem(2), gf9)
    assert img == gf9.elem(2)


def test_embed_gf9_into_gf81_orders():
    gf9 = make_field(3, 2)
    gf81 = make_field(3, 4)
    g = gf9.generator()  # g^2 = -1 since the modulus is x^2 + 1
    assert g * g == gf9.elem(-1)
    img = embed(g, gf81)
    assert img.multiplicative_order() == 8
    assert (img * img).multiplicative_order() == 4


def test_embed_incompatible_degrees():
    gf9 = make_field(3, 2)
    gf27 = make_field(3, 3)
    with pytest.raises(IncompatibleDegrees):
        embed(gf9.generator(), gf27)


@pytest.mark.parametrize(
    "src,dst",
    [((3, 1), (3, 2)), ((3, 2), (3, 4)), ((5, 1), (5, 2)), ((2, 3), (2, 6))],
)
def test_embed_injective_and_multiplicative(src, dst):
    source = make_field(*src)
    target = make_field(*dst)
    rng = random.Random(42)
    seen = {}
    for _ in range(100):
        a = source.elem([rng.randrange(source.p) for _ in range(source.k)])
        b = source.elem([rng.randrange(source.p) for _ in range(source.k)])
        ia, ib = embed(a, target), embed(b, target)
        assert embed(a * b, target) == ia * ib
        assert embed(a + b, target) == ia + ib
        if a in seen:
            assert seen[a] == ia
        seen[a] = ia
    assert len(set(seen.values())) == len(seen)


# -- factor_poly ----------------------------------------------------------------


def test_factor_difference_of_squares():
    gf5 = make_field(5, 1)
    f = poly(gf5, -1, 0, 1)  # x^2 - 1
    factors = factor_poly(f)
    assert sorted((g.coeffs[0].coeffs[0], m) for g, m in factors) == [(1, 1), (4, 1)]
    assert all(g.degree() == 1 for g, _ in factors)


def test_factor_irreducible_quadratic_gf3():
    gf3 = make_field(3, 1)
    f = poly(gf3, 1, 0, 1)  # x^2 + 1
    # oracle: no root among {0,1,2}
    assert all(not f.eval(gf3.elem(c)).is_zero() for c in range(3))
    factors = factor_poly(f)
    assert factors == [(f, 1)]


def test_factor_repeated_root():
    gf7 = make_field(7, 1)
    lin = poly(gf7, -2, 1)
    f = lin * lin * lin
    assert factor_poly(f) == [(lin, 1 * 3)]


def test_zero_polynomial_rejected():
    gf5 = make_field(5, 1)
    with pytest.raises(ZeroPolynomial):
        factor_poly(FqPoly.zero(gf5))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_factor_remultiplies_seeded_corpus(p):
    ctx = make_field(p, 1)
    rng = random.Random(p)
    for _ in range(120):
        deg = rng.randrange(1, 7)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
        f = FqPoly.from_ints(ctx, coeffs)
        prod = FqPoly.constant(f.leading())
        for g, mult in factor_poly(f):
            assert g.is_monic()
            for _ in range(mult):
                prod = prod * g
        assert prod == f


def test_factor_remultiplies_extension_field():
    ctx = make_field(3, 2)
    rng = random.Random(9)
    for _ in range(40):
        deg = rng.randrange(1, 5)
        coeffs = [[rng.randrange(3), rng.randrange(3)] for _ in range(deg + 1)]
        f = FqPoly(ctx, [ctx.elem(c) for c in coeffs])
        if f.is_zero():
            continue
        prod = FqPoly.constant(f.leading())
        for g, mult in factor_poly(f):
            for _ in range(mult):
                prod = prod * g
        assert prod == f


# -- splitting_field_roots ----------------------------------------------------------------


def test_splitting_roots_already_split():
    gf5 = make_field(5, 1)
    ctx, roots = splitting_field_roots(poly(gf5, -1, 0, 1))
    assert ctx == gf5
    assert sorted(r.coeffs[0] for r, _ in roots) == [1, 4]


def test_splitting_roots_needs_extension():
    gf3 = make_field(3, 1)
    f = poly(gf3, 1, 0, 1)  # x^2 + 1
    ctx, roots = splitting_field_roots(f)
    assert (ctx.p, ctx.k) == (3, 2)
    assert len(roots) == 2 and all(m == 1 for _, m in roots)
    # oracle: exhaustive evaluation over all 9 elements of GF(9)
    lifted = embed_poly(f, ctx)
    expected = sorted(e.coeffs for e in ctx.elements() if lifted.eval(e).is_zero())
    assert sorted(r.coeffs for r, _ in roots) == expected


def test_splitting_roots_multiplicity():
    gf5 = make_field(5, 1)
    lin = poly(gf5, -1, 1)
    ctx, roots = splitting_field_roots(lin * lin)
    assert ctx == gf5
    assert roots == [(gf5.elem(1), 2)]


@pytest.mark.parametrize("p", [3, 5])
def test_frobenius_permutes_roots(p):
    ctx0 = make_field(p, 1)
    rng = random.Random(p + 100)
    for _ in range(20):
        deg = rng.randrange(2, 5)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
        f = FqPoly.from_ints(ctx0, coeffs)
        target, roots = splitting_field_roots(f)
        root_set = {r for r, _ in roots}
        assert {r**p for r in root_set} == root_set


def test_parse_field_descriptor_roundtrip():
    ctx = make_field(3, 2)
    desc = ctx.descriptor()
    assert parse_field_descriptor(desc) == ctx
    assert parse_field_descriptor({"prime": 3, "degree": 2}) == ctx
