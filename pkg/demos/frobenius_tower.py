"""Climb one Frobenius level: depth-2 idempotents from depth-1 ones.

A depth-2 label is a pair of depth-1 labels.  The lifting operator raises
every exponent by a factor of p and splices the lift into the corner cut
out by the outer pair's idempotent; summing a lifted family over its inner
label telescopes back to the outer idempotent alone.
"""

from sl2hyper import (
    AlgebraCtx,
    TupleLabel,
    all_pairs,
    embed,
    enumerate_labels,
    format_label,
    level1_idempotent,
    one,
    tuple_idempotent,
    weight_of_idempotent,
    zero,
)

p = 3
ctx = AlgebraCtx(p, 2, 2)
labels = enumerate_labels(ctx)
print(f"p = {p}, depth 2: {len(labels)} labels = (p(p+1)/2)^2")

elems = {format_label(lb): tuple_idempotent(lb, ctx) for lb in labels}
vals = list(elems.values())
assert all(e * e == e for e in vals)
total = zero(ctx)
for e in vals:
    total = total + e
assert total == one(ctx)
print("verified: 36 pairwise orthogonal idempotents summing to 1")

print("\ntelescoping: sum over the inner pair returns the outer idempotent")
base = AlgebraCtx(p, 1, 1)
for pr0 in all_pairs(p)[:3]:
    partial = zero(ctx)
    for pr1 in all_pairs(p):
        partial = partial + tuple_idempotent(TupleLabel((pr0, pr1)), ctx)
    assert partial == embed(level1_idempotent(pr0, base), ctx)
    print(f"  sum over inner labels of ({pr0.a}:{pr0.two_j}, *) == E({pr0.a}:{pr0.two_j})")

print("\ntorus weights of a few depth-2 idempotents:")
for lb in labels[:6]:
    name = format_label(lb)
    print(f"  {name}: weight {weight_of_idempotent(elems[name])} mod p^2")
