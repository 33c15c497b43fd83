import json
import random

import numpy as np
import pytest

from sl2hyper.algebra import (
    AlgebraCtx,
    HyperElem,
    coeffs_to_weightfn,
    degree_decompose,
    element_from_json,
    element_to_json,
    embed,
    format_element,
    fr,
    fr_prime,
    gen_h_binom,
    gen_x,
    gen_y,
    one,
    pbw_elem,
    shift_weightfn,
    weightfn_to_coeffs,
    zero,
)
from sl2hyper.pims import weyl_action

SEED = 20240601


def rand_elem(rng, ctx, nterms=3):
    out = zero(ctx)
    for _ in range(nterms):
        m, mp = rng.randrange(ctx.xy_range), rng.randrange(ctx.xy_range)
        n = rng.randrange(ctx.q)
        out = out + rng.randrange(1, ctx.p) * pbw_elem(m, n, mp, ctx)
    return out


def test_ctx_validation():
    with pytest.raises(ValueError):
        AlgebraCtx(4, 1, 1)
    with pytest.raises(ValueError):
        AlgebraCtx(3, 2, 1)
    with pytest.raises(ValueError):
        AlgebraCtx(3, 0, 1)


def test_constructors():
    ctx = AlgebraCtx(3, 1, 1)
    assert gen_h_binom(1, ctx).terms[(0, 0)].tolist() == [0, 1, 2]
    assert gen_h_binom(0, ctx) == one(ctx)
    assert gen_x(1, ctx).terms == {(0, 1): pytest.approx(gen_x(1, ctx).terms[(0, 1)])}
    assert gen_x(1, ctx).terms[(0, 1)].tolist() == [1, 1, 1]
    with pytest.raises(ValueError):
        gen_x(3, ctx)
    with pytest.raises(ValueError):
        gen_h_binom(3, ctx)


def test_shift_weightfn():
    ctx = AlgebraCtx(3, 1, 1)
    ones = np.ones(3, dtype=np.int64)
    assert shift_weightfn(ones, 5, ctx).tolist() == [1, 1, 1]
    f = gen_h_binom(1, ctx).terms[(0, 0)]
    assert shift_weightfn(f, 2, ctx).tolist() == [2, 0, 1]
    rng = random.Random(SEED)
    for _ in range(20):
        g = np.array([rng.randrange(3) for _ in range(3)], dtype=np.int64)
        s = rng.randrange(-7, 8)
        assert np.array_equal(shift_weightfn(shift_weightfn(g, s, ctx), -s, ctx), g)


def test_multiply_cross_example():
    # X^(1) Y^(1) = Y^(1) X^(1) + C(H, 1) in any context
    for ctx in (AlgebraCtx(3, 1, 1), AlgebraCtx(5, 2, 2), AlgebraCtx(2, 1, 2)):
        u = gen_x(1, ctx) * gen_y(1, ctx)
        assert set(u.terms) == {(0, 0), (1, 1)}
        assert u.terms[(1, 1)].tolist() == [1] * ctx.q
        assert u.terms[(0, 0)].tolist() == [w % ctx.p for w in range(ctx.q)]


def test_multiply_identity_and_linearity():
    rng = random.Random(SEED)
    ctx = AlgebraCtx(3, 1, 2)
    for _ in range(10):
        u = rand_elem(rng, ctx)
        assert u * one(ctx) == u
        assert one(ctx) * u == u
        v, w = rand_elem(rng, ctx), rand_elem(rng, ctx)
        assert u * (v + w) == u * v + u * w


def test_multiply_against_weyl_oracle():
    # a divided-power product checked on the highest-weight-2 module
    ctx = AlgebraCtx(3, 1, 1)
    u, v = gen_x(2, ctx), gen_y(2, ctx)
    lhs = weyl_action(u * v, 2)
    rhs = weyl_action(u, 2) @ weyl_action(v, 2) % 3
    assert np.array_equal(lhs, rhs)
    rng = random.Random(SEED)
    for ctx in (AlgebraCtx(2, 2, 2), AlgebraCtx(3, 1, 2), AlgebraCtx(5, 1, 1)):
        for lam in range(2 * ctx.xy_range - 1):
            a, b = rand_elem(rng, ctx), rand_elem(rng, ctx)
            assert np.array_equal(
                weyl_action(a * b, lam),
                weyl_action(a, lam) @ weyl_action(b, lam) % ctx.p,
            )


def test_degree_decompose():
    ctx = AlgebraCtx(3, 1, 1)
    assert list(degree_decompose(gen_x(1, ctx))) == [1]
    assert list(degree_decompose(gen_x(1, ctx) * gen_y(1, ctx))) == [0]
    assert degree_decompose(zero(ctx)) == {}
    rng = random.Random(SEED)
    for _ in range(10):
        u = rand_elem(rng, AlgebraCtx(3, 2, 2), 4)
        total = zero(u.ctx)
        for part in degree_decompose(u).values():
            total = total + part
        assert total == u


def test_degree_additivity():
    rng = random.Random(SEED)
    ctx = AlgebraCtx(3, 2, 2)
    for _ in range(40):
        m1, m1p = rng.randrange(9), rng.randrange(9)
        m2, m2p = rng.randrange(9), rng.randrange(9)
        u = pbw_elem(m1, rng.randrange(9), m1p, ctx)
        v = pbw_elem(m2, rng.randrange(9), m2p, ctx)
        w = u * v
        d = (m1p - m1) + (m2p - m2)
        assert all(mp - m == d for (m, mp) in w.terms)


def test_weightfn_conversions():
    ctx = AlgebraCtx(3, 1, 1)
    mu0 = np.array([1, 0, 0], dtype=np.int64)
    assert weightfn_to_coeffs(mu0, ctx).tolist() == [1, 2, 1]
    assert coeffs_to_weightfn(np.array([1, 2, 1]), ctx).tolist() == [1, 0, 0]
    const = np.ones(3, dtype=np.int64)
    assert weightfn_to_coeffs(const, ctx).tolist() == [1, 0, 0]
    rng = random.Random(SEED)
    for ctx in (AlgebraCtx(3, 1, 2), AlgebraCtx(5, 1, 1), AlgebraCtx(2, 2, 3)):
        for _ in range(20):
            f = np.array([rng.randrange(ctx.p) for _ in range(ctx.q)], dtype=np.int64)
            assert np.array_equal(coeffs_to_weightfn(weightfn_to_coeffs(f, ctx), ctx), f)


def test_torus_commutation_contract():
    # C(H, n) X^(m) = X^(m) shift(C(H, n), 2m) and the Y twin
    rng = random.Random(SEED)
    for ctx in (AlgebraCtx(3, 1, 2), AlgebraCtx(5, 1, 1)):
        for _ in range(20):
            n, m = rng.randrange(ctx.q), rng.randrange(ctx.xy_range)
            h = gen_h_binom(n, ctx)
            hvec = h.terms[(0, 0)]
            shifted_x = HyperElem(ctx, {(0, 0): shift_weightfn(hvec, 2 * m, ctx)})
            assert h * gen_x(m, ctx) == gen_x(m, ctx) * shifted_x
            shifted_y = HyperElem(ctx, {(0, 0): shift_weightfn(hvec, -2 * m, ctx)})
            assert h * gen_y(m, ctx) == gen_y(m, ctx) * shifted_y


def test_frobenius_map():
    ctx = AlgebraCtx(3, 2, 2)
    tgt = AlgebraCtx(3, 1, 1)
    assert fr(gen_x(3, ctx)) == gen_x(1, tgt)
    assert fr(gen_x(1, ctx)).is_zero()
    assert fr(gen_h_binom(3, ctx)) == gen_h_binom(1, tgt)
    assert fr(gen_h_binom(1, ctx)).is_zero()
    with pytest.raises(ValueError):
        fr(one(AlgebraCtx(3, 1, 1)))


def test_frobenius_splitting():
    src = AlgebraCtx(3, 1, 1)
    assert fr_prime(pbw_elem(1, 1, 2, src)) == pbw_elem(3, 3, 6, AlgebraCtx(3, 2, 2))
    assert fr_prime(one(src)) == one(AlgebraCtx(3, 2, 2))
    for ctx in (AlgebraCtx(2, 2, 2), AlgebraCtx(3, 1, 2)):
        for m in range(ctx.xy_range):
            for mp in range(ctx.xy_range):
                for n in range(ctx.q):
                    u = pbw_elem(m, n, mp, ctx)
                    assert fr(fr_prime(u)) == u


def test_embed():
    src = AlgebraCtx(3, 1, 1)
    tgt = AlgebraCtx(3, 2, 2)
    assert embed(one(src), tgt) == one(tgt)
    assert embed(gen_h_binom(2, src), tgt) == gen_h_binom(2, tgt)
    rng = random.Random(SEED)
    for _ in range(20):
        u, v = rand_elem(rng, src, 2), rand_elem(rng, src, 2)
        assert embed(u * v, tgt) == embed(u, tgt) * embed(v, tgt)
    with pytest.raises(ValueError):
        embed(one(tgt), src)


def test_associativity_sampled():
    rng = random.Random(SEED)
    for p, r, rp in [(2, 2, 2), (3, 1, 2), (5, 1, 1)]:
        ctx = AlgebraCtx(p, r, rp)
        for _ in range(40):
            u, v, w = (rand_elem(rng, ctx, 2) for _ in range(3))
            assert (u * v) * w == u * (v * w)


def test_commuting_yx_family():
    # products Y^(p^s) X^(p^s) commute with each other and the torus binomials
    for p, r, rp in [(2, 2, 2), (3, 2, 2), (5, 1, 1)]:
        ctx = AlgebraCtx(p, r, rp)
        prods = [gen_y(p**s, ctx) * gen_x(p**s, ctx) for s in range(r)]
        for us in prods:
            for ut in prods:
                assert us * ut == ut * us
            for n in range(ctx.q):
                h = gen_h_binom(n, ctx)
                assert us * h == h * us


def test_p_divided_powers_centralize():
    for p in (2, 3, 5):
        ctx = AlgebraCtx(p, 2, 2)
        a1_gens = [gen_h_binom(k, ctx) for k in range(p)]
        a1_gens.append(gen_y(1, ctx) * gen_x(1, ctx))
        for n in range(1, p):
            for u in (gen_x(n * p, ctx), gen_y(n * p, ctx)):
                for a in a1_gens:
                    assert u * a == a * u


def test_split_product_independence():
    # the depth-1 basis times the exponent-raised depth-1 basis is independent
    from sl2hyper.pims import _elem_coords
    from sl2hyper.verify import _rank_mod_p

    for p in (2, 3):
        big = AlgebraCtx(p, 2, 2)
        small = AlgebraCtx(p, 1, 1)
        rows = []
        for m1 in range(p):
            for n1 in range(p):
                for m1p in range(p):
                    u = pbw_elem(m1, n1, m1p, big)
                    for m2 in range(p):
                        for n2 in range(p):
                            for m2p in range(p):
                                v = fr_prime(pbw_elem(m2, n2, m2p, small))
                                rows.append(_elem_coords(u * v))
        assert _rank_mod_p(rows, big.xy_range**2 * big.q, p) == p**6


def test_json_round_trip():
    rng = random.Random(SEED)
    for ctx in (AlgebraCtx(2, 1, 2), AlgebraCtx(3, 2, 2)):
        for _ in range(10):
            u = rand_elem(rng, ctx, 3)
            d = element_to_json(u)
            blob = json.dumps(d, sort_keys=True)
            assert element_from_json(json.loads(blob)) == u
    d = element_to_json(one(AlgebraCtx(2, 1, 1)))
    d["terms"].append(dict(d["terms"][0]))
    with pytest.raises(ValueError):
        element_from_json(d)


def test_format_element():
    ctx = AlgebraCtx(2, 1, 1)
    assert format_element(zero(ctx)) == "0"
    assert format_element(one(ctx)) == "1"
    u = gen_y(1, ctx) * gen_h_binom(1, ctx) * gen_x(1, ctx)
    assert format_element(u) == "Y^(1) C(H,1) X^(1)"
