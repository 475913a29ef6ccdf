"""Modules induced from a gl(n) module X placed in Z-degree zero.

Two constructions:

* kac_plus: U(g) (x)_{U(g^{>=0})} X with the positive part acting by zero
  on X.  As a vector space this is Lambda(d_1..d_n) (x) X, so the result
  is finite-dimensional of dimension 2^n dim X.

* kac_minus_truncated: the induction from the opposite parabolic is
  infinite-dimensional, so we realize its degree window <= cutoff.  The
  basis is PBW monomials in the positive-degree terms (odd generators at
  most once) applied to X; raising action that leaves the window is
  dropped, and the module records that it is lossy.

Basis vectors are indexed mono * dim X + v, and every column is computed
by a straightening recursion that routes through the module's own column
cache, so repeated subproblems are materialized once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InhomogeneousError, RankMismatchError
from .glmodules import GlModule
from .grassmann import indices_of, removal_sign
from .linalg import DEFAULT_PRIME, Vec, vec_axpy
from .modules import FiniteWModule, singular_vectors
from .walgebra import (
    BorelOrder,
    Term,
    WElement,
    basis_terms,
    bracket,
    format_term,
    term_degree,
    term_key,
    term_parity,
    term_weight,
)
from .weights import Weight

_BRACKETS: dict = {}


def _bracket_terms(n: int, a: Term, b: Term) -> list[tuple[Term, int]]:
    key = (n, a, b)
    hit = _BRACKETS.get(key)
    if hit is None:
        x = WElement.basis_term(n, *a)
        y = WElement.basis_term(n, *b)
        hit = [(t, c) for t, c in bracket(x, y).terms.items()]
        _BRACKETS[key] = hit
    return hit


def _base_total(x: GlModule) -> int:
    totals = {w.total() for w in x.weights}
    if len(totals) > 1:
        raise InhomogeneousError(
            f"base module {x.name or 'X'} mixes weight totals {sorted(totals)}")
    return totals.pop() if totals else 0


def _base_labels(x: GlModule) -> list[str]:
    return [f"x{v}" for v in range(x.dim)]


def kac_plus(x: GlModule, n: int) -> FiniteWModule:
    """Induced module on Lambda(d) (x) X, positive part acting by zero."""
    if x.rank != n:
        raise RankMismatchError(f"base rank {x.rank} vs algebra rank {n}")
    dx = x.dim
    t0 = _base_total(x)
    weights: list[Weight] = []
    labels: list[str] = []
    xl = _base_labels(x)
    for mask in range(1 << n):
        drop = Weight(tuple((i, -1) for i in indices_of(mask)))
        tag = "d" + "".join(str(i) for i in indices_of(mask)) + "|" if mask else ""
        for v in range(dx):
            weights.append(x.weights[v] + drop)
            labels.append(tag + xl[v])

    mod: FiniteWModule

    def col(term: Term, j: int) -> Vec:
        mask, v = divmod(j, dx)
        tm, tj = term
        if mask == 0:
            d = tm.bit_count() - 1
            if d > 0:
                return {}
            if d == 0:
                return dict(x.column((tm.bit_length(), tj), v))
            return {(1 << (tj - 1)) * dx + v: 1}
        bit = mask & -mask
        i = bit.bit_length()
        rj = (mask ^ bit) * dx + v
        out: Vec = {}
        # w d_i = [w, d_i] + (-1)^p(w) d_i w on the remaining factors
        for bt, bc in _bracket_terms(n, term, (0, i)):
            vec_axpy(out, bc, mod.column(bt, rj))
        sgn = -1 if term_parity(term) else 1
        for jj, c in mod.column(term, rj).items():
            m2, v2 = divmod(jj, dx)
            if m2 & bit:
                continue
            key = (m2 | bit) * dx + v2
            nv = out.get(key, 0) + sgn * removal_sign(i, m2 | bit) * c
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
        return out

    mod = FiniteWModule(
        n, weights, col_fn=col, name=f"K+({x.name or 'X'})", labels=labels,
        meta={"kind": "kac_plus", "base_total": t0, "base_dim": dx,
              "layer_sign": -1, "base_name": x.name},
    )
    return mod


def kac_minus_truncated(x: GlModule, n: int, cutoff: int) -> FiniteWModule:
    """Degree window <= cutoff of the induction with the positive part free.

    Lossy: action components landing beyond the window are dropped."""
    if x.rank != n:
        raise RankMismatchError(f"base rank {x.rank} vs algebra rank {n}")
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    dx = x.dim
    t0 = _base_total(x)
    pos = sorted((t for t in basis_terms(n) if term_degree(t) >= 1), key=term_key)

    monos: list[tuple[Term, ...]] = [()]

    def grow(prefix: tuple, start: int, budget: int) -> None:
        for s in range(start, len(pos)):
            t = pos[s]
            d = term_degree(t)
            if d > budget:
                break  # pos is sorted by degree first
            cur = prefix + (t,)
            monos.append(cur)
            grow(cur, s if d % 2 == 0 else s + 1, budget - d)

    grow((), 0, cutoff)
    mono_deg = [sum(term_degree(t) for t in m) for m in monos]
    order = sorted(range(len(monos)), key=lambda s: (mono_deg[s], [term_key(t) for t in monos[s]]))
    monos = [monos[s] for s in order]
    mono_deg = [mono_deg[s] for s in order]
    idx = {m: s for s, m in enumerate(monos)}

    weights: list[Weight] = []
    labels: list[str] = []
    xl = _base_labels(x)
    for m in monos:
        w = Weight.zero()
        for t in m:
            w = w + term_weight(t)
        tag = "".join(f"({format_term(t)})" for t in m)
        for v in range(dx):
            weights.append(x.weights[v] + w)
            labels.append((tag + "|" if tag else "") + xl[v])

    memo: dict = {}

    def pbw_insert(t: Term, mono: tuple) -> dict:
        """Straighten t * mono into canonical monomials, dropping anything
        beyond the degree window."""
        key = (t, mono)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if term_degree(t) + sum(term_degree(u) for u in mono) > cutoff:
            memo[key] = {}
            return {}
        if not mono:
            out = {(t,): 1}
            memo[key] = out
            return out
        h = mono[0]
        rest = mono[1:]
        out = {}
        if t == h and term_degree(t) % 2:
            # odd square: t t = (1/2)[t, t]
            for bt, bc in _bracket_terms(n, t, t):
                for m2, c2 in pbw_insert(bt, rest).items():
                    nv = out.get(m2, 0) + Fraction(bc, 2) * c2
                    if nv:
                        out[m2] = nv
                    else:
                        out.pop(m2, None)
        elif term_key(t) <= term_key(h):
            out = {(t,) + mono: 1}
        else:
            for bt, bc in _bracket_terms(n, t, h):
                for m2, c2 in pbw_insert(bt, rest).items():
                    nv = out.get(m2, 0) + bc * c2
                    if nv:
                        out[m2] = nv
                    else:
                        out.pop(m2, None)
            sgn = -1 if term_parity(t) and term_parity(h) else 1
            for m2, c2 in pbw_insert(t, rest).items():
                for m3, c3 in pbw_insert(h, m2).items():
                    nv = out.get(m3, 0) + sgn * c2 * c3
                    if nv:
                        out[m3] = nv
                    else:
                        out.pop(m3, None)
        memo[key] = out
        return out

    mod: FiniteWModule

    def col(term: Term, j: int) -> Vec:
        mi, v = divmod(j, dx)
        mono = monos[mi]
        d = term_degree(term)
        if d >= 1:
            out: Vec = {}
            for m2, c2 in pbw_insert(term, mono).items():
                out[idx[m2] * dx + v] = c2
            return out
        if not mono:
            tm, tj = term
            if d == 0:
                return dict(x.column((tm.bit_length(), tj), v))
            return {}
        h = mono[0]
        rj = idx[mono[1:]] * dx + v
        out = {}
        for bt, bc in _bracket_terms(n, term, h):
            vec_axpy(out, bc, mod.column(bt, rj))
        sgn = -1 if term_parity(term) and term_parity(h) else 1
        for jj, c in mod.column(term, rj).items():
            mi2, v2 = divmod(jj, dx)
            for m3, c3 in pbw_insert(h, monos[mi2]).items():
                key = idx[m3] * dx + v2
                nv = out.get(key, 0) + sgn * c * c3
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    mod = FiniteWModule(
        n, weights, col_fn=col, name=f"K-({x.name or 'X'},<={cutoff})",
        labels=labels,
        meta={"kind": "kac_minus", "base_total": t0, "base_dim": dx,
              "layer_sign": 1, "cutoff": cutoff, "lossy": True,
              "base_name": x.name},
    )
    return mod


def layer_dims(m: FiniteWModule) -> dict[int, int]:
    """Dimension of each induction layer, read off the degree bookkeeping."""
    t0 = m.meta["base_total"]
    s = m.meta["layer_sign"]
    out: dict[int, int] = {}
    for z in m.zdegs:
        layer = s * (z - t0)
        out[layer] = out.get(layer, 0) + 1
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class Typicality:
    """Whether a one-line weight parametrizes a typical induced module."""
    weight: Weight
    rank: int
    typical: bool
    position: int | None = None
    coefficient: int | None = None

    def to_json(self) -> dict:
        out = {"weight": self.weight.to_json(), "n": self.rank,
               "typical": self.typical}
        if not self.typical:
            out["position"] = self.position
            out["coefficient"] = self.coefficient
        return out


def typicality(nu: Weight, n: int) -> Typicality:
    """Atypical exactly when nu = a e_i + e_{i+1} + ... + e_n for some i, a."""
    dense = nu.dense(n)
    for i in range(1, n + 1):
        if all(c == 0 for c in dense[: i - 1]) and all(c == 1 for c in dense[i:]):
            return Typicality(nu, n, typical=False, position=i,
                              coefficient=dense[i - 1])
    return Typicality(nu, n, typical=True)


def find_primitive(m: FiniteWModule, b: BorelOrder,
                   degrees=None, prime: int = DEFAULT_PRIME,
                   generating_only: bool = True) -> dict:
    """Singular vectors of an induced module away from the layer that
    generates it, keyed by weight block.

    degrees restricts to the stated induction layers; layer zero is always
    excluded since its highest-weight line generates everything."""
    t0 = m.meta["base_total"]
    s = m.meta["layer_sign"]
    if degrees is None:
        zset = {z for z in m.zdegs if z != t0}
    else:
        zset = {t0 + s * d for d in degrees if d != 0}
    return singular_vectors(m, b, zdegs=zset, prime=prime,
                            generating_only=generating_only)
