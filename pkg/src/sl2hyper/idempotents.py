"""Primitive idempotents of the finite divided-power algebras.

Index pairs (a, j) run over the weight class a in F_p and a square-class
index j; j is stored doubled (two_j = 2j) so the p = 2 half-integer index
needs no rational arithmetic.  Each pair falls into one of four cases
A/B/C/D according to the parity of a and the size of j, which steers the
closed forms below and the recursion one level up.

Depth-1 idempotents come from evaluating a selector polynomial at the
weight-projected lowering-raising element.  Deeper ones are produced by a
case-dependent operator that sandwiches the exponent-multiplying splitting
of the Frobenius map between window elements; iterating it over a tuple of
pairs, and cutting by a torus block projector when the torus range exceeds
the divided-power range, yields the complete family of pairwise orthogonal
primitive idempotents summing to 1.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraCtx,
    HyperElem,
    embed,
    fr_prime,
    gen_x,
    gen_y,
    one,
    x_power,
    y_power,
    zero,
)
from .fpoly import selector_poly, selector_poly_shifted, to_yx_power_basis
from .modp import factorial_mod_p, inv_mod_p

__all__ = [
    "PairAJ",
    "TupleLabel",
    "ProductExpansion",
    "LabelError",
    "classify_case",
    "make_pair",
    "all_pairs",
    "min_yx_power",
    "min_xy_power",
    "recursion_shift",
    "yx_coeff_table",
    "xy_coeff_table",
    "weight_projector",
    "upper_block_projector",
    "level1_idempotent",
    "yx_expansion",
    "xy_expansion",
    "z_operator",
    "tuple_idempotent",
    "enumerate_labels",
    "parse_label",
    "format_label",
]

_P2_PAIRS = ((0, 1), (1, 0), (1, 2))
_P2_YX = {(0, 1): (1, 0), (1, 0): (0, 1), (1, 2): (1, 1)}
_P2_XY = {(0, 1): (1, 0), (1, 0): (1, 1), (1, 2): (0, 1)}


class LabelError(ValueError):
    """Raised for labels that do not parse or do not fit the context."""


@dataclass(frozen=True)
class PairAJ:
    """An index pair; two_j is twice the square-class index."""

    a: int
    two_j: int
    case: str


@dataclass(frozen=True)
class TupleLabel:
    """r index pairs plus, when the torus range is strictly larger, the block index."""

    pairs: tuple[PairAJ, ...]
    aprime: int | None = None


def _validate_pair(a: int, two_j: int, p: int) -> None:
    if p == 2:
        if (a, two_j) not in _P2_PAIRS:
            raise ValueError(f"(a, 2j) = ({a}, {two_j}) is not one of {_P2_PAIRS} for p=2")
        return
    if not 0 <= a < p:
        raise ValueError(f"a = {a} out of range 0..{p - 1}")
    if two_j % 2 or not 0 <= two_j <= p - 1:
        raise ValueError(f"2j = {two_j} must be even in 0..{p - 1} for odd p")


def classify_case(a: int, two_j: int, p: int) -> str:
    """The unique tag among A/B/C/D for a valid pair."""
    _validate_pair(a, two_j, p)
    if a % 2 == 0:
        return "B" if two_j < p - a else "A"
    return "C" if two_j < a else "D"


def make_pair(a: int, two_j: int, p: int) -> PairAJ:
    return PairAJ(a, two_j, classify_case(a, two_j, p))


@functools.lru_cache(maxsize=None)
def all_pairs(p: int) -> tuple[PairAJ, ...]:
    """All p(p+1)/2 index pairs (three for p = 2), lexicographic in (a, 2j)."""
    if p == 2:
        return tuple(make_pair(a, t, p) for a, t in _P2_PAIRS)
    return tuple(
        make_pair(a, 2 * j, p) for a in range(p) for j in range((p + 1) // 2)
    )


def min_yx_power(pair: PairAJ, p: int) -> int:
    """Lowest m with a nonzero Y^m X^m coefficient; closed form by case."""
    a, t = pair.a, pair.two_j
    n2 = {
        "A": p - a - 1 + t,
        "B": p - a - 1 - t,
        "C": 2 * p - a - 1 - t,
        "D": t - a - 1,
    }[pair.case]
    assert n2 >= 0 and n2 % 2 == 0
    return n2 // 2


def min_xy_power(pair: PairAJ, p: int) -> int:
    """Lowest m with a nonzero X^m Y^m coefficient; closed form by case."""
    a, t = pair.a, pair.two_j
    n2 = {
        "A": a - 1 - p + t,
        "B": p + a - 1 - t,
        "C": a - 1 - t,
        "D": t + a - 1,
    }[pair.case]
    assert n2 >= 0 and n2 % 2 == 0
    return n2 // 2


def recursion_shift(pair: PairAJ, p: int) -> int:
    """The X-shift s used by the A/C branch of the recursion; a + 2s is 0 or 1 mod p."""
    if pair.case not in ("A", "C"):
        raise ValueError(f"shift is only defined for cases A/C, not {pair.case}")
    if p == 2:
        return 1
    return (p - pair.a + 1) // 2 if pair.a % 2 == 0 else (p - pair.a) // 2


@functools.lru_cache(maxsize=None)
def yx_coeff_table(pair: PairAJ, p: int) -> tuple[int, ...]:
    """Coefficients c_m with E = mu_a sum_m c_m Y^m X^m, from the polynomial side."""
    if p == 2:
        return _P2_YX[(pair.a, pair.two_j)]
    f = selector_poly_shifted(pair.a, pair.two_j // 2, p)
    return to_yx_power_basis(f, pair.a)


@functools.lru_cache(maxsize=None)
def xy_coeff_table(pair: PairAJ, p: int) -> tuple[int, ...]:
    """Coefficients of the X^m Y^m form; the mirror a -> -a of the YX table."""
    if p == 2:
        return _P2_XY[(pair.a, pair.two_j)]
    a_mirror = (p - pair.a) % p
    f = selector_poly_shifted(a_mirror, pair.two_j // 2, p)
    return to_yx_power_basis(f, a_mirror)


def weight_projector(a: int, s: int, ctx: AlgebraCtx) -> HyperElem:
    """The torus idempotent projecting onto the weight class a mod p**s.

    In the binomial basis this is C(H - a - 1, p**s - 1); in evaluation form
    it is simply the indicator vector of the class.
    """
    if not 1 <= s <= ctx.rprime:
        raise ValueError(f"projector depth {s} out of range 1..{ctx.rprime}")
    ps = ctx.p**s
    vec = (np.arange(ctx.q) % ps == a % ps).astype(np.int64)
    return HyperElem(ctx, {(0, 0): vec})


def upper_block_projector(aprime: int, ctx: AlgebraCtx) -> HyperElem:
    """Projector onto the weights w with w // p**r == aprime.

    Equals the r-fold exponent-multiplied image of the depth-(rprime - r)
    weight projector, by the digit-splitting identity for the projectors.
    """
    blocks = ctx.p ** (ctx.rprime - ctx.r)
    if not 0 <= aprime < blocks:
        raise ValueError(f"block index {aprime} out of range 0..{blocks - 1}")
    vec = (np.arange(ctx.q) // ctx.p**ctx.r == aprime).astype(np.int64)
    return HyperElem(ctx, {(0, 0): vec})


def _poly_at_elem(coeffs, t: HyperElem) -> HyperElem:
    # Horner evaluation of a polynomial at an algebra element.
    ctx = t.ctx
    acc = zero(ctx)
    for c in reversed(coeffs):
        acc = acc * t + int(c) * one(ctx)
    return acc


@functools.lru_cache(maxsize=None)
def level1_idempotent(pair: PairAJ, ctx: AlgebraCtx) -> HyperElem:
    """The primitive idempotent attached to one index pair.

    For odd p this evaluates the selector polynomial at
    mu_a Y X + ((a+1)/2)^2 and multiplies by mu_a; for p = 2 the three
    idempotents are mu_0, mu_1 Y X and mu_1 X Y.
    """
    p = ctx.p
    mu_a = weight_projector(pair.a, 1, ctx)
    yx = gen_y(1, ctx) * gen_x(1, ctx)
    if p == 2:
        if pair.a == 0:
            return mu_a
        if pair.two_j == 0:
            return mu_a * yx
        return mu_a * gen_x(1, ctx) * gen_y(1, ctx)
    half = inv_mod_p(2, p)
    c0 = ((pair.a + 1) * half) ** 2 % p
    t = mu_a * yx + c0 * one(ctx)
    sel = selector_poly(pair.two_j // 2, p)
    return _poly_at_elem(sel.coeffs, t) * mu_a


@dataclass(frozen=True)
class ProductExpansion:
    """Coefficients of a degree-0 element over ordinary Y^m X^m products
    (order 'yx') or X^m Y^m products (order 'xy') against the weight
    projector of class a; min_power is the lowest nonzero index."""

    a: int
    order: str
    coeffs: tuple[int, ...]
    min_power: int


def _expansion(a: int, order: str, coeffs) -> ProductExpansion:
    nz = [m for m, c in enumerate(coeffs) if c]
    if not nz:
        raise ValueError("the zero element has no expansion")
    return ProductExpansion(a, order, tuple(coeffs), nz[0])


def yx_expansion(e: HyperElem, a: int) -> ProductExpansion:
    """Read the Y^m X^m coefficients off the normal form of e.

    The (m, m) term of mu_a Y^m X^m is (m!)^2 Y^(m) mu_{a+2m} X^(m), so each
    stored vector must be supported on the single class a + 2m.
    """
    ctx = e.ctx
    if ctx.r != 1 or ctx.rprime != 1:
        raise ValueError("expansion extraction expects the depth-1 context")
    p = ctx.p
    coeffs = [0] * p
    for (m, mp_), f in e.terms.items():
        if m != mp_:
            raise ValueError(f"term {(m, mp_)} is off the degree-0 diagonal")
        lam = (a + 2 * m) % p
        if np.nonzero(f)[0].tolist() != [lam]:
            raise ValueError(f"term ({m}, {m}) is not supported on weight class {lam}")
        fact = factorial_mod_p(m, p)
        coeffs[m] = int(f[lam]) * inv_mod_p(fact * fact, p) % p
    return _expansion(a % p, "yx", coeffs)


def xy_expansion(e: HyperElem, a: int) -> ProductExpansion:
    """Express e over the products mu_a X^m Y^m by downward elimination."""
    ctx = e.ctx
    if ctx.r != 1 or ctx.rprime != 1:
        raise ValueError("expansion extraction expects the depth-1 context")
    p = ctx.p
    mu_a = weight_projector(a, 1, ctx)
    coeffs = [0] * p
    rem = e
    for m in range(p - 1, -1, -1):
        f = rem.terms.get((m, m))
        if f is None:
            continue
        lam = (a + 2 * m) % p
        fact = factorial_mod_p(m, p)
        cm = int(f[lam]) * inv_mod_p(fact * fact, p) % p
        coeffs[m] = cm
        if cm:
            rem = rem - cm * (mu_a * x_power(m, ctx) * y_power(m, ctx))
    if not rem.is_zero():
        raise ValueError("element is not a combination of the X^m Y^m products")
    return _expansion(a % p, "xy", coeffs)


@functools.lru_cache(maxsize=None)
def _ac_window(pair: PairAJ, ctx: AlgebraCtx) -> HyperElem:
    # mu_a sum_{m >= n} c_m Y^m X^(m - s), the left window of the A/C branch.
    p = ctx.p
    s = recursion_shift(pair, p)
    mu_a = weight_projector(pair.a, 1, ctx)
    acc = zero(ctx)
    for m, cm in enumerate(yx_coeff_table(pair, p)):
        if cm:
            acc = acc + cm * (mu_a * y_power(m, ctx) * x_power(m - s, ctx))
    return acc


def z_operator(z: HyperElem, pair: PairAJ) -> HyperElem:
    """Lift z one level: the case-dependent map into the corner algebra of the pair.

    Cases B/D multiply the exponent-raised z by the level-1 idempotent;
    cases A/C sandwich it between the window element and X^s.
    """
    p = z.ctx.p
    tgt = AlgebraCtx(p, z.ctx.r + 1, z.ctx.rprime + 1)
    lifted = fr_prime(z)
    if pair.case in ("B", "D"):
        return lifted * level1_idempotent(pair, tgt)
    return _ac_window(pair, tgt) * lifted * x_power(recursion_shift(pair, p), tgt)


@functools.lru_cache(maxsize=None)
def tuple_idempotent(label: TupleLabel, ctx: AlgebraCtx) -> HyperElem:
    """The primitive idempotent of a full label in the given context.

    Built by recursion in the minimal context chain (pairs[0] is applied
    last, i.e. it is the least-significant digit), embedded once at the
    end, and cut by the torus block projector when the label carries one.
    """
    p = ctx.p
    if len(label.pairs) != ctx.r:
        raise ValueError(f"label has {len(label.pairs)} pairs, context needs {ctx.r}")
    if (label.aprime is None) != (ctx.rprime == ctx.r):
        raise ValueError("aprime must be present exactly when rprime > r")
    e = level1_idempotent(label.pairs[-1], AlgebraCtx(p, 1, 1))
    for pair in label.pairs[-2::-1]:
        e = z_operator(e, pair)
    e = embed(e, ctx)
    if label.aprime is not None:
        e = e * upper_block_projector(label.aprime, ctx)
    return e


def enumerate_labels(ctx: AlgebraCtx) -> list[TupleLabel]:
    """All labels of the context in lexicographic (a_0, 2j_0, ..., a') order."""
    blocks = ctx.p ** (ctx.rprime - ctx.r)
    out = []
    for combo in itertools.product(all_pairs(ctx.p), repeat=ctx.r):
        if ctx.rprime == ctx.r:
            out.append(TupleLabel(combo, None))
        else:
            out.extend(TupleLabel(combo, ap) for ap in range(blocks))
    return out


def format_label(label: TupleLabel) -> str:
    text = ",".join(f"{pr.a}:{pr.two_j}" for pr in label.pairs)
    if label.aprime is not None:
        text += f";{label.aprime}"
    return text


def parse_label(text: str, ctx: AlgebraCtx) -> TupleLabel:
    """Parse `a:t[,a:t]*[;aprime]` with t = 2j, validating against the context."""
    p = ctx.p
    main, sep, ap_part = text.partition(";")
    pieces = main.split(",") if main else []
    if len(pieces) != ctx.r:
        raise LabelError(f"label '{text}' has {len(pieces)} pairs, context needs {ctx.r}")
    pairs = []
    for piece in pieces:
        a_s, colon, t_s = piece.partition(":")
        try:
            a, t = int(a_s), int(t_s)
        except ValueError:
            raise LabelError(f"malformed pair '{piece}' (expected 'a:t')") from None
        if not colon:
            raise LabelError(f"malformed pair '{piece}' (expected 'a:t')")
        try:
            pairs.append(make_pair(a, t, p))
        except ValueError as exc:
            raise LabelError(f"invalid pair '{piece}' for p={p}: {exc}") from None
    blocks = p ** (ctx.rprime - ctx.r)
    if ctx.rprime == ctx.r:
        if sep:
            raise LabelError("context has rprime = r; the ';aprime' part is not allowed")
        aprime = None
    else:
        try:
            aprime = int(ap_part)
        except ValueError:
            raise LabelError(f"label '{text}' needs ';aprime' in 0..{blocks - 1}") from None
        if not 0 <= aprime < blocks:
            raise LabelError(f"aprime = {aprime} out of range 0..{blocks - 1}")
    return TupleLabel(tuple(pairs), aprime)
