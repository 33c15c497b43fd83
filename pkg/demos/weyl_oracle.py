"""Cross-check normal-form multiplication against highest-weight modules.

The algebra acts on the span of v_0..v_lam by explicit binomial rules, so
matrix multiplication gives a second, independent route to any product.
Agreement across many highest weights certifies the rewriting engine.
"""

import random

import numpy as np

from sl2hyper import AlgebraCtx, pbw_elem, weyl_action, zero

rng = random.Random(20240601)


def random_element(ctx, nterms=3):
    out = zero(ctx)
    for _ in range(nterms):
        m, mp = rng.randrange(ctx.xy_range), rng.randrange(ctx.xy_range)
        n = rng.randrange(ctx.q)
        out = out + rng.randrange(1, ctx.p) * pbw_elem(m, n, mp, ctx)
    return out


ctx = AlgebraCtx(3, 2, 2)
u = pbw_elem(1, 0, 2, ctx) + 2 * pbw_elem(0, 1, 1, ctx)
v = pbw_elem(2, 0, 1, ctx) + pbw_elem(0, 2, 0, ctx)
print(f"two elements of the p={ctx.p}, depth-{ctx.r} algebra")
print(f"u has {len(u.terms)} normal-form terms, v has {len(v.terms)}")

lam = 4
prod_matrix = weyl_action(u * v, lam)
matrix_prod = weyl_action(u, lam) @ weyl_action(v, lam) % ctx.p
print(f"\non the highest-weight-{lam} module:")
print("matrix of u*v:")
print(prod_matrix)
assert np.array_equal(prod_matrix, matrix_prod)
print("equals the product of the matrices of u and v")

checks = 0
for lam in range(2 * ctx.xy_range - 1):
    for _ in range(5):
        a, b = random_element(ctx), random_element(ctx)
        assert np.array_equal(
            weyl_action(a * b, lam), weyl_action(a, lam) @ weyl_action(b, lam) % ctx.p
        )
        checks += 1
print(f"\nagreement on {checks} random products across highest weights 0..{2 * ctx.xy_range - 2}")
