"""Generic span computations against a small module protocol.

Everything here works for any object exposing

    dim             -> int
    weight_blocks() -> dict[block_key, list[int]]   (a partition of 0..dim-1)
    column(gen, j)  -> sparse dict row -> coeff

where ``gen`` ranges over caller-supplied hashable generator keys whose
operators are block-homogeneous: each one maps every block into at most
one other block.  Both the superderivation modules and the plain gl(n)
modules satisfy this.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import StepBudgetExceeded
from .linalg import (
    DEFAULT_PRIME,
    ModPEchelon,
    RationalEchelon,
    Vec,
    closed_span,
    kernel_basis,
    rank_mod_p,
    vec_axpy,
    vec_mod,
)


def apply_gen(m, gen, vec: Vec) -> Vec:
    out: Vec = {}
    for j, c in vec.items():
        vec_axpy(out, c, m.column(gen, j))
    return out


def module_closure(m, gen_keys, seeds: Iterable[Vec], p: int | None = None, max_steps: int | None = None):
    ops = [lambda v, g=g: apply_gen(m, g, v) for g in gen_keys]
    return closed_span(seeds, ops, p=p, max_steps=max_steps)


def singular_blocks(
    m,
    gen_keys,
    prime: int = DEFAULT_PRIME,
    block_filter: Callable | None = None,
) -> dict:
    """Joint kernel of the generator operators, one entry per block that
    carries a nonzero kernel.  Mod-p rank is used only to discard blocks
    whose kernel is provably zero; surviving blocks are solved exactly."""
    out: dict = {}
    for key, cols in m.weight_blocks().items():
        if block_filter is not None and not block_filter(key):
            continue
        k = len(cols)
        pos = {c: t for t, c in enumerate(cols)}
        rows_map: dict = {}
        for g in gen_keys:
            for t, c in enumerate(cols):
                for r, x in m.column(g, c).items():
                    rows_map.setdefault((g, r), {})[t] = x
        rows = list(rows_map.values())
        if not rows:
            out[key] = [{c: 1} for c in cols]
            continue
        if rank_mod_p(rows, prime, stop_at=k) >= k:
            continue
        local = kernel_basis(rows, k)
        if local:
            out[key] = [{cols[t]: c for t, c in v.items()} for v in local]
    return out


def burnside_full(m, gen_keys, p: int, max_steps: int | None = None) -> bool:
    """Whether products of the generator operators span all of End mod p.

    A True answer certifies fullness over the rationals; False certifies
    nothing by itself."""
    dim = m.dim
    target = dim * dim
    mats = []
    for g in gen_keys:
        mat: dict = {}
        for j in range(dim):
            col = vec_mod(m.column(g, j), p)
            if col:
                mat[j] = col
        mats.append(mat)

    def flat(mat: dict) -> Vec:
        return {c * dim + r: x for c, col in mat.items() for r, x in col.items()}

    def matmul(a: dict, b: dict) -> dict:
        out: dict = {}
        for c, col in b.items():
            acc: dict = {}
            for r, x in col.items():
                arow = a.get(r)
                if not arow:
                    continue
                for rr, y in arow.items():
                    nv = (acc.get(rr, 0) + x * y) % p
                    if nv:
                        acc[rr] = nv
                    else:
                        acc.pop(rr, None)
            if acc:
                out[c] = acc
        return out

    ech = ModPEchelon(p)
    ident = {j: {j: 1} for j in range(dim)}
    queue = []
    for mat in [ident] + mats:
        if ech.insert(flat(mat)) is not None:
            queue.append(mat)
    steps = 0
    while queue and ech.dim < target:
        b = queue.pop()
        for a in mats:
            prod = matmul(a, b)
            if not prod:
                continue
            if ech.insert(flat(prod)) is not None:
                queue.append(prod)
                steps += 1
                if max_steps is not None and steps > max_steps:
                    raise StepBudgetExceeded(f"operator span exceeded {max_steps} products")
        if ech.dim >= target:
            break
    return ech.dim >= target


def hom_basis(m1, m2, gen_keys, prime: int = DEFAULT_PRIME) -> list[dict]:
    """Basis of the space of maps m1 -> m2 commuting with the generators.

    Returned maps are sparse dicts (row2, col1) -> coefficient; they are
    block-diagonal across shared weight blocks by construction.  That
    ansatz is complete only when gen_keys contains the Cartan operators,
    which forces every intertwiner to preserve weight blocks."""
    blocks1 = m1.weight_blocks()
    blocks2 = m2.weight_blocks()
    uidx: dict[tuple[int, int], int] = {}
    for key, cols1 in blocks1.items():
        cols2 = blocks2.get(key)
        if not cols2:
            continue
        for c1 in cols1:
            for r2 in cols2:
                uidx[(r2, c1)] = len(uidx)
    if not uidx:
        return []
    nu = len(uidx)
    partners: dict[int, list[int]] = {}
    for (r2, c1) in uidx:
        partners.setdefault(c1, []).append(r2)
    rows: list[Vec] = []
    for g in gen_keys:
        for c1 in range(m1.dim):
            col1 = m1.column(g, c1)
            # phi(g.e_c1) - g.phi(e_c1), grouped by output row of m2
            eq: dict[int, Vec] = {}
            for r1, x in col1.items():
                for r2 in partners.get(r1, ()):
                    row = eq.setdefault(r2, {})
                    ui = uidx[(r2, r1)]
                    row[ui] = row.get(ui, 0) + x
            for r2p in partners.get(c1, ()):
                ui = uidx[(r2p, c1)]
                for rr, y in m2.column(g, r2p).items():
                    row = eq.setdefault(rr, {})
                    nv = row.get(ui, 0) - y
                    if nv:
                        row[ui] = nv
                    else:
                        row.pop(ui, None)
            rows.extend(r for r in eq.values() if r)
    if not rows:
        # no constraints at all
        basis = []
        for (r2, c1), ui in uidx.items():
            basis.append({(r2, c1): Fraction(1)})
        return basis
    if rank_mod_p(rows, prime, stop_at=nu) >= nu:
        return []
    ech = RationalEchelon()
    for r in rows:
        ech.insert(r)
    reduced = list(ech.rows.values())
    local = kernel_basis(reduced, nu)
    rev = {ui: key for key, ui in uidx.items()}
    return [{rev[ui]: c for ui, c in v.items()} for v in local]


def hom_value(phi: dict, vec: Vec) -> Vec:
    """Apply a hom given as (row2, col1) -> coeff to a vector of m1."""
    out: Vec = {}
    for (r2, c1), a in phi.items():
        x = vec.get(c1)
        if x:
            nv = out.get(r2, 0) + a * x
            if nv:
                out[r2] = nv
            else:
                out.pop(r2, None)
    return out


def invertible_combination(
    m1, m2, homs: list[dict], seed: int = 0, samples: int = 12
) -> Optional[dict]:
    """Search the hom space for an invertible element; None if not found.

    Invertibility is decided exactly, block by weight block."""
    if not homs or m1.dim != m2.dim:
        return None
    blocks1 = m1.weight_blocks()
    blocks2 = m2.weight_blocks()
    if set(blocks1) != set(blocks2):
        return None
    for key in blocks1:
        if len(blocks1[key]) != len(blocks2[key]):
            return None

    def is_invertible(phi: dict) -> bool:
        by_block: dict = {}
        for (r2, c1), a in phi.items():
            by_block.setdefault(c1, {})[(r2, c1)] = a
        # rank per weight block must be full
        for key, cols1 in blocks1.items():
            k = len(cols1)
            rows = []
            for c1 in cols1:
                row = {r2: a for (r2, _c), a in by_block.get(c1, {}).items()}
                rows.append(row)
            ech = RationalEchelon()
            for r in rows:
                ech.insert(r)
            if ech.dim < k:
                return False
        return True

    for phi in homs:
        if is_invertible(phi):
            return phi
    rng = random.Random(seed)
    for _ in range(samples):
        combo: dict = {}
        for phi in homs:
            c = rng.randint(-3, 3)
            if not c:
                continue
            for key, a in phi.items():
                nv = combo.get(key, 0) + c * a
                if nv:
                    combo[key] = nv
                else:
                    combo.pop(key, None)
        if combo and is_invertible(combo):
            return combo
    return None
