"""Sparse exact-rational vectors, echelon bookkeeping, and mod-p shortcuts.

Vectors are dicts from integer coordinates to nonzero rationals.  Echelon
state keeps each stored row normalized so its minimal coordinate is the
pivot with coefficient one; reduction therefore terminates by always
eliminating the least pivoted coordinate present.

Mod-p computations serve only as one-sided certificates: the rank of a
rational matrix reduced mod p never exceeds the rational rank, so a full
rank mod p certifies full rank over the rationals, and a zero nullity mod
p certifies a zero rational kernel.  No "not full" conclusion is ever
drawn from a mod-p run alone.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import StepBudgetExceeded

Vec = dict  # coordinate -> nonzero coefficient

# Mersenne prime 2^61 - 1, the default modulus when no seeded draw is wanted
DEFAULT_PRIME = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, bits: int = 62) -> int:
    """Draw a prime with the given bit length; deterministic for a seeded rng."""
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if _is_probable_prime(cand):
            return cand


def vec_axpy(acc: Vec, c, v: Vec) -> None:
    """acc += c*v in place, dropping zeros."""
    if not c:
        return
    for k, x in v.items():
        nv = acc.get(k, 0) + c * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def vec_scaled(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_mod(v: Vec, p: int) -> Vec:
    out = {}
    for k, x in v.items():
        if isinstance(x, Fraction):
            num = x.numerator % p
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by modulus")
            r = num * pow(den, p - 2, p) % p
        else:
            r = x % p
        if r:
            out[k] = r
    return out


class RationalEchelon:
    """Incremental echelon basis over the rationals.

    Rows are stored normalized (pivot coefficient one, pivot = minimal
    coordinate of the row).  Insertion order is preserved in ``order`` so
    the rows can serve as an ordered basis of the span.
    """

    __slots__ = ("rows", "order", "meta")

    def __init__(self):
        self.rows: dict = {}  # pivot -> row vec
        self.order: list = []  # pivots in insertion order
        self.meta: dict = {}  # pivot -> caller payload

    @property
    def dim(self) -> int:
        return len(self.order)

    def reduce(self, v: Vec) -> Vec:
        v = dict(v)
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            piv = min(hits)
            c = v[piv]
            vec_axpy(v, -c, self.rows[piv])
        return v

    def reduce_tracked(self, v: Vec) -> tuple[Vec, dict]:
        """Residual plus coefficients over stored pivots with v = sum c*row + residual."""
        v = dict(v)
        coeffs: dict = {}
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            piv = min(hits)
            c = v[piv]
            coeffs[piv] = coeffs.get(piv, 0) + c
            vec_axpy(v, -c, self.rows[piv])
        return v, coeffs

    def insert(self, v: Vec, payload=None):
        """Reduce and, if independent, store; returns the new pivot or None."""
        r = self.reduce(v)
        if not r:
            return None
        piv = min(r)
        c = r[piv]
        if c != 1:
            norm = {}
            for k, x in r.items():
                q = Fraction(x) / Fraction(c)
                norm[k] = int(q) if q.denominator == 1 else q
            r = norm
        self.rows[piv] = r
        self.order.append(piv)
        if payload is not None:
            self.meta[piv] = payload
        return piv

    def express(self, v: Vec) -> Optional[dict]:
        """Coefficients of v over the stored rows (keyed by pivot), or None."""
        residual, coeffs = self.reduce_tracked(v)
        if residual:
            return None
        return coeffs

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)


class ModPEchelon:
    """Same shape as RationalEchelon but over Z/p."""

    __slots__ = ("p", "rows", "order")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}
        self.order: list = []

    @property
    def dim(self) -> int:
        return len(self.order)

    def reduce(self, v: Vec) -> Vec:
        p = self.p
        v = dict(v)
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            piv = min(hits)
            c = v[piv]
            row = self.rows[piv]
            for k, x in row.items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def insert(self, v: Vec):
        p = self.p
        r = self.reduce(v)
        if not r:
            return None
        piv = min(r)
        inv = pow(r[piv], p - 2, p)
        r = {k: x * inv % p for k, x in r.items()}
        self.rows[piv] = r
        self.order.append(piv)
        return piv


def closed_span(
    seeds: Iterable[Vec],
    ops: list[Callable[[Vec], Vec]],
    p: int | None = None,
    max_steps: int | None = None,
    payloads: Iterable | None = None,
):
    """Smallest op-stable span containing the seeds.

    Returns a RationalEchelon (p None) or ModPEchelon.  Raises
    StepBudgetExceeded when max_steps vector insertions are exhausted.
    """
    ech = ModPEchelon(p) if p else RationalEchelon()
    queue: list = []
    payloads = list(payloads) if payloads is not None else None
    for idx, s in enumerate(seeds):
        if p:
            s = vec_mod(s, p)
        if isinstance(ech, RationalEchelon):
            piv = ech.insert(s, payloads[idx] if payloads else None)
        else:
            piv = ech.insert(s)
        if piv is not None:
            queue.append(ech.rows[piv])
    steps = 0
    while queue:
        v = queue.pop()
        for op in ops:
            w = op(v)
            if not w:
                continue
            if p:
                w = vec_mod(w, p)
            piv = ech.insert(w)
            if piv is not None:
                queue.append(ech.rows[piv])
                steps += 1
                if max_steps is not None and steps > max_steps:
                    raise StepBudgetExceeded(f"closure exceeded {max_steps} insertions")
    return ech


def kernel_basis(rows: list[Vec], ncols: int) -> list[dict[int, Fraction]]:
    """Exact nullspace of the system given by constraint rows over 0..ncols-1."""
    mat = []
    for r in rows:
        if r:
            mat.append([Fraction(r.get(j, 0)) for j in range(ncols)])
    # reduced row echelon form
    pivots: list[int] = []
    ri = 0
    for col in range(ncols):
        sel = None
        for i in range(ri, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[ri], mat[sel] = mat[sel], mat[ri]
        inv = 1 / mat[ri][col]
        mat[ri] = [x * inv for x in mat[ri]]
        for i in range(len(mat)):
            if i != ri and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[ri])]
        pivots.append(col)
        ri += 1
        if ri == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = {fc: Fraction(1)}
        for r, pc in enumerate(pivots):
            c = mat[r][fc]
            if c:
                v[pc] = -c
        basis.append(v)
    return basis


def rank_mod_p(rows: Iterable[Vec], p: int, stop_at: int | None = None) -> int:
    """Rank of the rows mod p with optional early exit at a target rank."""
    ech = ModPEchelon(p)
    for r in rows:
        ech.insert(vec_mod(r, p))
        if stop_at is not None and ech.dim >= stop_at:
            return ech.dim
    return ech.dim
