"""Build the depth-1 primitive idempotents and check the decomposition.

For a prime p there are p(p+1)/2 of them, one per pair (a, j): a is a
weight class mod p and j indexes a square class.  Each comes from plugging
the weight-projected lowering-raising element into a selector polynomial.
"""

from sl2hyper import (
    AlgebraCtx,
    all_pairs,
    format_element,
    level1_idempotent,
    one,
    zero,
)

p = 5
ctx = AlgebraCtx(p, 1, 1)
pairs = all_pairs(p)
elems = [level1_idempotent(pr, ctx) for pr in pairs]
print(f"p = {p}: built {len(elems)} idempotents, one per (a, 2j) pair")

assert all(e * e == e for e in elems), "each element squares to itself"
assert all(
    (elems[i] * elems[j]).is_zero() for i in range(len(elems)) for j in range(len(elems)) if i != j
), "distinct elements multiply to zero"
total = zero(ctx)
for e in elems:
    total = total + e
assert total == one(ctx), "the family sums to the identity"
print("verified: idempotent, pairwise orthogonal, sums to 1")

print("\nthe p = 3 family in normal form (divided powers and torus binomials):")
ctx3 = AlgebraCtx(3, 1, 1)
for pr in all_pairs(3):
    print(f"\n  pair (a={pr.a}, 2j={pr.two_j}), case {pr.case}:")
    for line in format_element(level1_idempotent(pr, ctx3)).splitlines():
        print(f"    {line}")
