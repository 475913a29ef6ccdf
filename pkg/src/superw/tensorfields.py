"""Tensor-field modules Lambda(n) (x) X and the simple modules inside them.

The action splits into a derivation part on the Grassmann coefficient and
a gl correction contracted through the base module:

    (xi^a d_j).(f (x) v) = (xi^a d_j f) (x) v
                           + (-1)^{p(a,j) p(f)} sum_i d_i(xi^a) f (x) E_ij v

Duality with the downward induction is checked by an explicit invertible
intertwiner, and the simple module attached to a partition pair is cut out
as the cyclic submodule on the interleaved-order singular vector.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonBasisElementError, RankMismatchError
from .glmodules import GlModule, gl_dual, gl_simple
from .grassmann import indices_of, merge_sign, removal_sign
from .induction import kac_plus
from .linalg import DEFAULT_PRIME, Vec
from .modules import (
    FiniteWModule,
    SimplicityVerdict,
    Submodule,
    dual_module,
    is_simple,
    iso_check,
    submodule_generated,
)
from .partitions import aspartition, stable_highest_weight
from .spanops import singular_blocks
from .walgebra import BorelOrder, Term, nilradical_generating_terms, term_parity
from .weights import Weight


def tensor_field(x: GlModule, n: int) -> FiniteWModule:
    """Lambda(n) (x) X with the coefficient-plus-contraction action."""
    if x.rank != n:
        raise RankMismatchError(f"base rank {x.rank} vs algebra rank {n}")
    dx = x.dim
    weights: list[Weight] = []
    labels: list[str] = []
    for f in range(1 << n):
        lift = Weight(tuple((i, 1) for i in indices_of(f)))
        tag = "x" + "".join(str(i) for i in indices_of(f)) + "|" if f else ""
        for v in range(dx):
            weights.append(x.weights[v] + lift)
            labels.append(tag + f"x{v}")

    def col(term: Term, j: int) -> Vec:
        f, v = divmod(j, dx)
        a, tj = term
        out: Vec = {}
        bitj = 1 << (tj - 1)
        if f & bitj:
            s = removal_sign(tj, f) * merge_sign(a, f ^ bitj)
            if s:
                out[(a | (f ^ bitj)) * dx + v] = s
        # the parity sign on the contraction term is what makes the bracket
        # relation close; the representation check pins it uniquely
        sgn = -1 if term_parity(term) else 1
        rest_bits = a
        while rest_bits:
            bit = rest_bits & -rest_bits
            rest_bits ^= bit
            i = bit.bit_length()
            ms = merge_sign(a ^ bit, f)
            if not ms:
                continue
            c0 = sgn * removal_sign(i, a) * ms
            base = ((a ^ bit) | f) * dx
            for r, c in x.column((i, tj), v).items():
                key = base + r
                nv = out.get(key, 0) + c0 * c
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    return FiniteWModule(
        n, weights, col_fn=col, name=f"T({x.name or 'X'})", labels=labels,
        meta={"kind": "tensor_field", "base_dim": dx, "base_name": x.name},
    )


@dataclass
class DualityReport:
    """Outcome of matching a tensor-field module with a dual induction."""
    rank: int
    base_name: str
    passes: bool
    dim: int
    intertwiner: dict | None = None


def coinduction_duality_check(x: GlModule, n: int, prime: int = DEFAULT_PRIME,
                              seed: int = 0) -> DualityReport:
    """T(X) should be the full dual of the downward induction from X*."""
    t = tensor_field(x, n)
    k = dual_module(kac_plus(gl_dual(x), n))
    phi = iso_check(t, k, prime=prime, seed=seed)
    return DualityReport(rank=n, base_name=x.name or "X", passes=phi is not None,
                         dim=t.dim, intertwiner=phi)


def interleaved_min_borel(n: int) -> BorelOrder:
    return BorelOrder("interleaved", n, "min")


def _singular_line(t: FiniteWModule, hw: Weight, b: BorelOrder,
                   prime: int) -> Vec:
    key = (hw, hw.total(), hw.total() % 2)
    sing = singular_blocks(t, nilradical_generating_terms(b), prime=prime,
                           block_filter=lambda k: k == key)
    vecs = sing.get(key)
    if not vecs:
        raise NonBasisElementError(f"no singular vector of weight {hw}")
    return vecs[0]


def extract_L_minus_submodule(lam, mu, n: int,
                              prime: int = DEFAULT_PRIME) -> Submodule:
    """The cyclic submodule of T(V(lam|mu)) on the interleaved singular
    vector, kept as a span inside its parent."""
    lam, mu = aspartition(lam), aspartition(mu)
    hw = stable_highest_weight(lam, mu, "interleaved", n)
    x = gl_simple(lam, mu, n, order="interleaved", prime=prime)
    t = tensor_field(x, n)
    v = _singular_line(t, hw, interleaved_min_borel(n), prime)
    sub = submodule_generated(t, [v], prime=prime)
    t.meta["highest_weight"] = hw
    return sub


def extract_L_minus(lam, mu, n: int, prime: int = DEFAULT_PRIME) -> FiniteWModule:
    """The simple module attached to a partition pair, realized inside the
    tensor-field module over the interleaved-order simple base."""
    lam, mu = aspartition(lam), aspartition(mu)
    sub = extract_L_minus_submodule(lam, mu, n, prime=prime)
    hw = sub.parent.meta["highest_weight"]
    name = f"L-({lam}|{mu},n={n})"
    if sub.full:
        out = sub.parent
        out.name = name
    else:
        out = sub.module()
        out.name = name
    out.meta["highest_weight"] = hw
    out.meta["ambient_dim"] = sub.parent.dim
    out.meta["proper"] = sub.dim < sub.parent.dim
    return out


def tensor_field_simplicity(lam, mu, n: int,
                            prime: int = DEFAULT_PRIME) -> SimplicityVerdict:
    """Simplicity of the full tensor-field module over V(lam|mu)."""
    lam, mu = aspartition(lam), aspartition(mu)
    x = gl_simple(lam, mu, n, order="interleaved", prime=prime)
    return is_simple(tensor_field(x, n), prime=prime)
