"""Module-theoretic verification: the Weyl-action oracle and projective covers.

weyl_action gives a second, independent route to products (matrices acting
on a highest-weight module), left_ideal_span measures the module each
idempotent generates by sparse row reduction over F_p, and the label
bookkeeping predicts which projective indecomposable that module is from
the case data alone: its dimension, the generator's torus weight, and the
largest surviving X exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    AlgebraCtx,
    HyperElem,
    coeffs_to_weightfn,
    gen_h_binom,
    gen_x,
    gen_y,
    weightfn_to_coeffs,
)
from .idempotents import (
    TupleLabel,
    enumerate_labels,
    format_label,
    min_xy_power,
    tuple_idempotent,
    weight_projector,
)
from .modp import binom_mod_p, inv_mod_p

__all__ = [
    "weyl_action",
    "IdealBasis",
    "left_ideal_span",
    "PimLabel",
    "pim_label_closed_form",
    "predicted_weight",
    "predicted_top_x",
    "top_x_exponent",
    "weight_of_idempotent",
    "pim_rows",
]


def weyl_action(u: HyperElem, lam: int) -> np.ndarray:
    """Matrix of u on the highest-weight-lam Weyl module, basis v_i = Y^(i) v.

    Action rules: Y^(m) v_i = C(i+m, m) v_{i+m},
    X^(m) v_i = C(lam-i+m, m) v_{i-m}, and a torus factor scales v_i by its
    value on the class of lam - 2i.
    """
    ctx = u.ctx
    p, q = ctx.p, ctx.q
    dim = lam + 1
    out = np.zeros((dim, dim), dtype=np.int64)
    for (m, mp_), f in u.terms.items():
        for i in range(mp_, dim):
            i2 = i - mp_ + m
            if i2 > lam:
                continue
            c = binom_mod_p(lam - i + mp_, mp_, p) * int(f[(lam - 2 * (i - mp_)) % q]) % p
            c = c * binom_mod_p(i2, m, p) % p
            if c:
                out[i2, i] = (out[i2, i] + c) % p
    return out


@dataclass
class IdealBasis:
    """Reduced row-echelon basis in the normal-form coordinate space:
    rows maps each pivot coordinate to its normalized sparse row."""

    rows: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.rows)


def _elem_coords(v: HyperElem) -> dict[int, int]:
    # coordinate index of Y^(m) C(H,n) X^(m') is (m * p^r + m') * p^r' + n
    ctx = v.ctx
    out: dict[int, int] = {}
    for (m, mp_), f in v.terms.items():
        c = weightfn_to_coeffs(f, ctx)
        base = (m * ctx.xy_range + mp_) * ctx.q
        for n in np.nonzero(c)[0]:
            out[base + int(n)] = int(c[n])
    return out


def _coords_elem(row: dict[int, int], ctx: AlgebraCtx) -> HyperElem:
    groups: dict[tuple[int, int], np.ndarray] = {}
    for idx, val in row.items():
        key, n = divmod(idx, ctx.q)
        m, mp_ = divmod(key, ctx.xy_range)
        groups.setdefault((m, mp_), np.zeros(ctx.q, dtype=np.int64))[n] = val
    return HyperElem(ctx, {k: coeffs_to_weightfn(c, ctx) for k, c in groups.items()})


def _reduce(row: dict[int, int], rows: dict[int, dict[int, int]], p: int) -> dict[int, int]:
    row = dict(row)
    for pv, rw in rows.items():
        coef = row.get(pv)
        if not coef:
            continue
        for c, val in rw.items():
            nv = (row.get(c, 0) - coef * val) % p
            if nv:
                row[c] = nv
            else:
                row.pop(c, None)
    return row


def left_ideal_span(e: HyperElem) -> IdealBasis:
    """Echelon basis of the left ideal generated by e.

    Closure under left multiplication by the algebra generators
    X^(p^i), Y^(p^i) (i < r) and C(H, p^l) (l < rprime), with deterministic
    lowest-index pivoting.
    """
    if e.is_zero():
        raise ValueError("the zero element spans nothing")
    ctx = e.ctx
    p = ctx.p
    gens = [gen_x(p**i, ctx) for i in range(ctx.r)]
    gens += [gen_y(p**i, ctx) for i in range(ctx.r)]
    gens += [gen_h_binom(p**l, ctx) for l in range(ctx.rprime)]
    rows: dict[int, dict[int, int]] = {}
    work = [e]
    while work:
        row = _reduce(_elem_coords(work.pop()), rows, p)
        if not row:
            continue
        piv = min(row)
        inv = inv_mod_p(row[piv], p)
        row = {c: val * inv % p for c, val in row.items()}
        for rw in rows.values():
            coef = rw.get(piv)
            if not coef:
                continue
            for c, val in row.items():
                nv = (rw.get(c, 0) - coef * val) % p
                if nv:
                    rw[c] = nv
                else:
                    rw.pop(c, None)
        rows[piv] = row
        w = _coords_elem(row, ctx)
        work.extend(g * w for g in gens)
    return IdealBasis(rows)


@dataclass(frozen=True)
class PimLabel:
    """Naming data of a projective indecomposable: digit vector, its value
    lambda' and the torus part lambda'', plus the predicted dimension."""

    betas: tuple[int, ...]
    lambda_prime: int
    lambda_double_prime: int
    dim: int


def _b_digit(pair, p: int) -> int:
    return pair.a - p if pair.case in ("A", "C") else pair.a


def pim_label_closed_form(label: TupleLabel, ctx: AlgebraCtx) -> PimLabel:
    """Predict the projective cover the label's idempotent generates.

    Digits: beta_i = p - 2j_i - 1 in cases B/C and 2j_i - 1 in cases A/D.
    The torus part is a' when the signed weight sum is non-negative and
    a' + 1 (wrapping to 0 at the top block) otherwise.
    """
    p = ctx.p
    betas = []
    bsum = 0
    for i, pr in enumerate(label.pairs):
        betas.append(p - pr.two_j - 1 if pr.case in ("B", "C") else pr.two_j - 1)
        bsum += _b_digit(pr, p) * p**i
    lam1 = sum(beta * p**i for i, beta in enumerate(betas))
    blocks = p ** (ctx.rprime - ctx.r)
    ap = label.aprime or 0
    lam2 = ap if bsum >= 0 else (ap + 1) % blocks
    dim = 1
    for beta in betas:
        dim *= p if beta == p - 1 else 2 * p
    return PimLabel(tuple(betas), lam1, lam2, dim)


def predicted_weight(label: TupleLabel, ctx: AlgebraCtx) -> int:
    """Torus weight of the label's idempotent from the signed digits b_i."""
    p = ctx.p
    bsum = sum(_b_digit(pr, p) * p**i for i, pr in enumerate(label.pairs))
    nu = bsum + (label.aprime or 0) * p**ctx.r
    if bsum < 0:
        nu += p**ctx.r
    return nu % ctx.q


def predicted_top_x(label: TupleLabel, p: int) -> int:
    """Largest surviving X exponent, digitwise p-1 minus the minimal XY power."""
    return sum((p - 1 - min_xy_power(pr, p)) * p**i for i, pr in enumerate(label.pairs))


def top_x_exponent(e: HyperElem) -> int:
    """Largest n < p**r with X^(n) e nonzero, by descending scan."""
    if e.is_zero():
        raise ValueError("the zero element has no top exponent")
    ctx = e.ctx
    for n in range(ctx.xy_range - 1, 0, -1):
        if not (gen_x(n, ctx) * e).is_zero():
            return n
    return 0


def weight_of_idempotent(e: HyperElem) -> int:
    """The unique nu whose depth-rprime weight projector fixes e under left
    multiplication; raises if e is not a torus weight vector."""
    if e.is_zero():
        raise ValueError("the zero element has no weight")
    ctx = e.ctx
    (m, _), f = next(iter(e.terms.items()))
    nu = (int(np.nonzero(f)[0][0]) - 2 * m) % ctx.q
    if weight_projector(nu, ctx.rprime, ctx) * e != e:
        raise ValueError("element is not a torus weight vector")
    return nu


def pim_rows(ctx: AlgebraCtx) -> list[dict]:
    """One verification row per label: predicted vs computed module data."""
    out = []
    for label in enumerate_labels(ctx):
        e = tuple_idempotent(label, ctx)
        pl = pim_label_closed_form(label, ctx)
        nu = weight_of_idempotent(e)
        t = top_x_exponent(e)
        dim = left_ideal_span(e).dim
        ok = (
            dim == pl.dim
            and nu == predicted_weight(label, ctx)
            and t == predicted_top_x(label, ctx.p)
        )
        out.append(
            {
                "label": format_label(label),
                "weight": nu,
                "top_x": t,
                "lambda_prime": pl.lambda_prime,
                "lambda_double_prime": pl.lambda_double_prime,
                "predicted_dim": pl.dim,
                "computed_dim": dim,
                "status": "PASS" if ok else "FAIL",
            }
        )
    return out
