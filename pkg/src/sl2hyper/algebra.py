"""Normal-form elements of the divided-power algebra of sl2 in characteristic p.

An element is a sparse sum over pairs (m, m') of terms

    Y^(m) * f * X^(m'),        0 <= m, m' < p**r,

where X^(k), Y^(k) are divided powers and f lies in the torus subalgebra
spanned by the binomials C(H, n) with n < p**rprime.  The torus factor is
stored in *evaluation form*: a length p**rprime integer vector whose entry
at w is the eigenvalue of f on a vector of weight w (weights live mod
p**rprime).  Evaluation form turns torus multiplication into pointwise
products, and moving f across X^(n) or Y^(n) into index shifts:

    f * X^(n) = X^(n) * shift(f, +2n),    f * Y^(n) = Y^(n) * shift(f, -2n),

where shift(f, s)(w) = f(w + s).  The binomial-coefficient basis is
recovered through the unitriangular Pascal matrix C(w, n), which is what
the Frobenius maps and the JSON round trip go through.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .modp import factorial_mod_p, is_prime

__all__ = [
    "AlgebraCtx",
    "HyperElem",
    "zero",
    "one",
    "gen_x",
    "gen_y",
    "gen_h_binom",
    "pbw_elem",
    "x_power",
    "y_power",
    "shift_weightfn",
    "degree_decompose",
    "weightfn_to_coeffs",
    "coeffs_to_weightfn",
    "fr",
    "fr_prime",
    "embed",
    "element_to_json",
    "element_from_json",
    "format_element",
]


@functools.lru_cache(maxsize=None)
def _pascal(p: int, size: int) -> np.ndarray:
    # C(w, n) mod p for 0 <= w, n < size; lower unitriangular.
    out = np.zeros((size, size), dtype=np.int64)
    out[:, 0] = 1
    for w in range(1, size):
        out[w, 1:] = (out[w - 1, 1:] + out[w - 1, :-1]) % p
    return out


@functools.lru_cache(maxsize=None)
def _shift_table(q: int) -> np.ndarray:
    # row s is the index vector w |-> (w + s) mod q
    a = np.arange(q, dtype=np.int64)
    return (a[:, None] + a[None, :]) % q


@dataclass(frozen=True)
class AlgebraCtx:
    """Ambient sizes: divided powers below p**r, torus binomials below p**rprime."""

    p: int
    r: int
    rprime: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not 1 <= self.r <= self.rprime:
            raise ValueError(f"need 1 <= r <= rprime, got r={self.r}, rprime={self.rprime}")

    @property
    def q(self) -> int:
        """Number of weight classes, p**rprime."""
        return self.p**self.rprime

    @property
    def xy_range(self) -> int:
        """Exclusive bound p**r on divided-power exponents."""
        return self.p**self.r

    @property
    def pascal(self) -> np.ndarray:
        return _pascal(self.p, self.q)

    @property
    def shift(self) -> np.ndarray:
        return _shift_table(self.q)

    @property
    def binom2(self) -> np.ndarray:
        return _pascal(self.p, 2 * self.xy_range)


def _canon(ctx: AlgebraCtx, terms) -> dict[tuple[int, int], np.ndarray]:
    p, q, nmax = ctx.p, ctx.q, ctx.xy_range
    out: dict[tuple[int, int], np.ndarray] = {}
    for key in sorted(terms):
        m, mp_ = key
        if not (0 <= m < nmax and 0 <= mp_ < nmax):
            raise ValueError(f"exponent pair {key} out of range for {ctx}")
        vec = np.asarray(terms[key], dtype=np.int64) % p
        if vec.shape != (q,):
            raise ValueError(f"weight function must have length {q}")
        if vec.any():
            out[(m, mp_)] = vec
    return out


class HyperElem:
    """Sparse normal form: maps (m, m') to the torus factor's evaluation vector."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms):
        self.ctx = ctx
        self.terms = _canon(ctx, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HyperElem):
            return NotImplemented
        if self.ctx != other.ctx or self.terms.keys() != other.terms.keys():
            return False
        return all(np.array_equal(v, other.terms[k]) for k, v in self.terms.items())

    def __repr__(self) -> str:
        return f"HyperElem({self.ctx.p},{self.ctx.r},{self.ctx.rprime}; {len(self.terms)} terms)"

    def __add__(self, other: "HyperElem") -> "HyperElem":
        self._check(other)
        p = self.ctx.p
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = (out[k] + v) % p if k in out else v
        return HyperElem(self.ctx, out)

    def __neg__(self) -> "HyperElem":
        p = self.ctx.p
        return HyperElem(self.ctx, {k: (-v) % p for k, v in self.terms.items()})

    def __sub__(self, other: "HyperElem") -> "HyperElem":
        self._check(other)
        p = self.ctx.p
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = (out[k] - v) % p if k in out else (-v) % p
        return HyperElem(self.ctx, out)

    def _check(self, other: "HyperElem") -> None:
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            s = int(other) % self.ctx.p
            return HyperElem(self.ctx, {k: v * s for k, v in self.terms.items()})
        if not isinstance(other, HyperElem):
            return NotImplemented
        self._check(other)
        ctx = self.ctx
        p, q, nmax = ctx.p, ctx.q, ctx.xy_range
        sh = ctx.shift
        pas = ctx.pascal
        bin2 = ctx.binom2
        acc: dict[tuple[int, int], np.ndarray] = {}
        for (m1, m1p), f1 in self.terms.items():
            for (m2, m2p), f2 in other.terms.items():
                # the i-independent part of the middle factor
                h = f1[sh[(-2 * m2) % q]] * f2[sh[(-2 * m1p) % q]] % p
                if not h.any():
                    continue
                for i in range(min(m1p, m2) + 1):
                    mm = m1 + m2 - i
                    mmp = m1p + m2p - i
                    k1 = int(bin2[mm, m1])
                    k2 = int(bin2[mmp, m2p])
                    if mm >= nmax or mmp >= nmax:
                        # base-p carry: the coefficient vanishes mod p
                        assert (mm < nmax or k1 == 0) and (mmp < nmax or k2 == 0)
                        continue
                    k = k1 * k2 % p
                    if k == 0:
                        continue
                    c = (m1p + m2 - 2 * i) % q
                    mid = h[sh[(2 * i) % q]] * pas[sh[(-c) % q], i] % p * k
                    key = (mm, mmp)
                    if key in acc:
                        acc[key] += mid
                    else:
                        acc[key] = mid
        return HyperElem(ctx, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.__mul__(other)
        return NotImplemented


def zero(ctx: AlgebraCtx) -> HyperElem:
    return HyperElem(ctx, {})


def one(ctx: AlgebraCtx) -> HyperElem:
    return HyperElem(ctx, {(0, 0): np.ones(ctx.q, dtype=np.int64)})


def gen_x(n: int, ctx: AlgebraCtx) -> HyperElem:
    """The divided power X^(n)."""
    if not 0 <= n < ctx.xy_range:
        raise ValueError(f"X exponent {n} out of range for {ctx}")
    return HyperElem(ctx, {(0, n): np.ones(ctx.q, dtype=np.int64)})


def gen_y(n: int, ctx: AlgebraCtx) -> HyperElem:
    """The divided power Y^(n)."""
    if not 0 <= n < ctx.xy_range:
        raise ValueError(f"Y exponent {n} out of range for {ctx}")
    return HyperElem(ctx, {(n, 0): np.ones(ctx.q, dtype=np.int64)})


def gen_h_binom(n: int, ctx: AlgebraCtx) -> HyperElem:
    """The torus binomial C(H, n)."""
    if not 0 <= n < ctx.q:
        raise ValueError(f"torus index {n} out of range for {ctx}")
    return HyperElem(ctx, {(0, 0): ctx.pascal[:, n].copy()})


def pbw_elem(m: int, n: int, mprime: int, ctx: AlgebraCtx) -> HyperElem:
    """The basis element Y^(m) C(H, n) X^(m')."""
    if not 0 <= n < ctx.q:
        raise ValueError(f"torus index {n} out of range for {ctx}")
    return HyperElem(ctx, {(m, mprime): ctx.pascal[:, n].copy()})


def x_power(k: int, ctx: AlgebraCtx) -> HyperElem:
    """The ordinary power X^k = k! X^(k); requires k < p."""
    return factorial_mod_p(k, ctx.p) * gen_x(k, ctx)


def y_power(k: int, ctx: AlgebraCtx) -> HyperElem:
    """The ordinary power Y^k = k! Y^(k); requires k < p."""
    return factorial_mod_p(k, ctx.p) * gen_y(k, ctx)


def shift_weightfn(f: np.ndarray, s: int, ctx: AlgebraCtx) -> np.ndarray:
    """The vector w |-> f((w + s) mod p**rprime)."""
    return f[ctx.shift[s % ctx.q]]


def degree_decompose(u: HyperElem) -> dict[int, HyperElem]:
    """Split u by degree d = m' - m; the parts sum back to u."""
    parts: dict[int, dict] = {}
    for (m, mp_), f in u.terms.items():
        parts.setdefault(mp_ - m, {})[(m, mp_)] = f
    return {d: HyperElem(u.ctx, t) for d, t in sorted(parts.items())}


def weightfn_to_coeffs(f: np.ndarray, ctx: AlgebraCtx) -> np.ndarray:
    """Coefficients c with f(w) = sum_n c[n] C(w, n), by forward substitution."""
    p, q = ctx.p, ctx.q
    pas = ctx.pascal
    c = np.zeros(q, dtype=np.int64)
    for n in range(q):
        c[n] = (int(f[n]) - int(pas[n, :n] @ c[:n])) % p
    return c


def coeffs_to_weightfn(c: np.ndarray, ctx: AlgebraCtx) -> np.ndarray:
    """Evaluation vector of sum_n c[n] C(H, n)."""
    c = np.asarray(c, dtype=np.int64)
    if c.shape != (ctx.q,):
        raise ValueError(f"coefficient vector must have length {ctx.q}")
    return (ctx.pascal @ (c % ctx.p)) % ctx.p


def fr(u: HyperElem) -> HyperElem:
    """The Frobenius map: divides all exponents by p, killing non-multiples."""
    ctx = u.ctx
    if ctx.r < 2:
        raise ValueError("Frobenius target context would be degenerate for r = 1")
    tgt = AlgebraCtx(ctx.p, ctx.r - 1, ctx.rprime - 1)
    p = ctx.p
    out = {}
    for (m, mp_), f in u.terms.items():
        if m % p or mp_ % p:
            continue
        kept = weightfn_to_coeffs(f, ctx)[::p]
        out[(m // p, mp_ // p)] = coeffs_to_weightfn(kept, tgt)
    return HyperElem(tgt, out)


def fr_prime(u: HyperElem) -> HyperElem:
    """The linear splitting of the Frobenius: multiplies all exponents by p.

    On the torus factor this is C(H, n) |-> C(H, np), which in evaluation
    form reads off the base-p digit quotient: g(w) = f(w // p).
    """
    ctx = u.ctx
    p = ctx.p
    tgt = AlgebraCtx(p, ctx.r + 1, ctx.rprime + 1)
    out = {(m * p, mp_ * p): np.repeat(f, p) for (m, mp_), f in u.terms.items()}
    return HyperElem(tgt, out)


def embed(u: HyperElem, target: AlgebraCtx) -> HyperElem:
    """The natural inclusion into a larger context."""
    ctx = u.ctx
    if target.p != ctx.p or target.r < ctx.r or target.rprime < ctx.rprime:
        raise ValueError(f"cannot embed {ctx} into {target}")
    if target == ctx:
        return u
    reps = target.p ** (target.rprime - ctx.rprime)
    return HyperElem(target, {k: np.tile(f, reps) for k, f in u.terms.items()})


def element_to_json(u: HyperElem) -> dict:
    """JSON form; terms sorted by (yexp, xexp), torus factors in evaluation form."""
    return {
        "p": u.ctx.p,
        "r": u.ctx.r,
        "rprime": u.ctx.rprime,
        "terms": [
            {"yexp": m, "xexp": mp_, "h_eval": [int(v) for v in f]}
            for (m, mp_), f in u.terms.items()
        ],
    }


def element_from_json(data: dict) -> HyperElem:
    ctx = AlgebraCtx(int(data["p"]), int(data["r"]), int(data["rprime"]))
    terms: dict[tuple[int, int], np.ndarray] = {}
    for t in data["terms"]:
        key = (int(t["yexp"]), int(t["xexp"]))
        if key in terms:
            raise ValueError(f"duplicate term {key}")
        terms[key] = np.asarray(t["h_eval"], dtype=np.int64)
    return HyperElem(ctx, terms)


def _format_weightfn(f: np.ndarray, ctx: AlgebraCtx) -> str:
    coeffs = weightfn_to_coeffs(f, ctx)
    parts = []
    for n in np.nonzero(coeffs)[0]:
        c = int(coeffs[n])
        if n == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"C(H,{n})")
        else:
            parts.append(f"{c}*C(H,{n})")
    return " + ".join(parts)


def format_element(u: HyperElem) -> str:
    """Human-readable normal form, one line per (m, m') term."""
    if u.is_zero():
        return "0"
    lines = []
    for (m, mp_), f in u.terms.items():
        mid = _format_weightfn(f, u.ctx)
        bits = []
        if m:
            bits.append(f"Y^({m})")
        bits.append(f"({mid})" if "+" in mid else mid)
        if mp_:
            bits.append(f"X^({mp_})")
        lines.append(" ".join(bits))
    return "\n".join(lines)
