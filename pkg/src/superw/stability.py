"""Cross-rank stabilization checks.

A family of modules M_n over increasing rank is compared on a fixed
window of indices {1..w}.  The raw graded character on window-supported
weights is not rank-stable for most families (a weight such as e_1 picks
up new mass like xi_1 xi_j d_j at every rank), so the comparison uses the
part of the module that the tail copy of the algebra on indices {w+1..n}
does not see:

* annihilator mode: the joint kernel of every basis term supported on
  the tail.  This is the finite-rank face of the large-annihilator
  condition and suits modules whose vectors are killed by deep tails
  (tensor fields and their submodules).

* coinvariants mode: the quotient by the span of all tail-term images.
  Downward inductions have no tail-killed vectors at all (the d_i act
  freely), but their coinvariants on the window stabilize.

Both restricted characters live on weights supported inside the window,
and the sweep report records the per-rank characters plus the first
disagreement, if any.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .glmodules import gl_simple
from .induction import kac_plus
from .linalg import DEFAULT_PRIME, RationalEchelon, rank_mod_p, vec_mod
from .modules import Character, FiniteWModule
from .partitions import Partition, aspartition
from .spanops import singular_blocks
from .tensorfields import extract_L_minus, tensor_field
from .walgebra import Term, basis_terms, term_weight


def tail_subalgebra_terms(n: int, window: int) -> list[Term]:
    """Basis terms supported entirely on indices {window+1..n}: the copy
    of the rank n-window algebra acting on the deep coordinates."""
    lo_mask = (1 << window) - 1
    return [(m, j) for m, j in basis_terms(n) if not (m & lo_mask) and j > window]


def _window_blocks(m: FiniteWModule, window: int):
    for key, cols in m.weight_blocks().items():
        w = key[0]
        if w.max_index() <= window:
            yield key, cols


def restricted_character(m: FiniteWModule, window: int,
                         mode: str = "annihilator",
                         prime: int = DEFAULT_PRIME) -> Character:
    """Graded character of the window part of m that the tail algebra
    cannot see; entries are keyed by dense window weights."""
    n = m.rank
    if not 0 < window <= n:
        raise ValueError(f"window {window} out of range for rank {n}")
    tail = tail_subalgebra_terms(n, window)
    entries: dict = {}
    if mode == "annihilator":
        sing = singular_blocks(m, tail, prime=prime,
                               block_filter=lambda key: key[0].max_index() <= window)
        for (w, z, _), vecs in sing.items():
            key = (w.dense(window), z)
            entries[key] = entries.get(key, 0) + len(vecs)
        return Character(window, entries)
    if mode != "coinvariants":
        raise ValueError(f"unknown restriction mode {mode!r}")
    blocks = m.weight_blocks()
    for (w, z, _), cols in _window_blocks(m, window):
        local = {c: t for t, c in enumerate(cols)}
        rows = []
        for g in tail:
            shift = term_weight(g)
            src = blocks.get((w - shift, z - shift.total(), (z - shift.total()) % 2))
            if not src:
                continue
            for c in src:
                img = m.column(g, c)
                if img:
                    rows.append({local[r]: x for r, x in img.items()})
        k = len(cols)
        if not rows:
            dim = k
        elif rank_mod_p(rows, prime, stop_at=k) >= k:
            dim = 0
        else:
            ech = RationalEchelon()
            for r in rows:
                ech.insert(dict(r))
            dim = k - ech.dim
        if dim:
            key = (w.dense(window), z)
            entries[key] = entries.get(key, 0) + dim
    return Character(window, entries)


_OBJECT_MODES = {"L-": "annihilator", "T": "annihilator", "K+": "coinvariants"}


def _build_family_member(obj: str, lam, mu, n: int, prime: int) -> FiniteWModule:
    if obj == "L-":
        return extract_L_minus(lam, mu, n, prime=prime)
    if obj == "T":
        return tensor_field(gl_simple(lam, mu, n, order="interleaved", prime=prime), n)
    if obj == "K+":
        return kac_plus(gl_simple(lam, mu, n, order="natural", prime=prime), n)
    raise ValueError(f"unknown stabilization object {obj!r}")


@dataclass
class StabilizationReport:
    """Window-restricted characters of one family across a rank range."""
    obj: str
    lam: Partition
    mu: Partition
    n_from: int
    n_to: int
    window: int
    mode: str
    stabilized: bool
    characters: list = field(default_factory=list)  # (n, Character)
    first_mismatch: tuple | None = None  # (n, n+1) ranks that disagree

    def to_json(self) -> str:
        payload = {
            "object": self.obj,
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "n_from": self.n_from,
            "n_to": self.n_to,
            "window": self.window,
            "mode": self.mode,
            "stabilized": self.stabilized,
            "characters": [
                {"n": n, "restricted_dim": ch.total_dim(),
                 "entries": [{"weight": list(w), "zdeg": z, "mult": mult}
                             for (w, z), mult in sorted(ch.entries.items())]}
                for n, ch in self.characters
            ],
        }
        if self.first_mismatch is not None:
            payload["first_mismatch"] = list(self.first_mismatch)
        return json.dumps(payload, sort_keys=True, indent=2)


def stabilization_sweep(lam, mu, n_from: int, n_to: int, obj: str = "L-",
                        window: int | None = None,
                        prime: int = DEFAULT_PRIME) -> StabilizationReport:
    """Build one family member per rank and compare restricted characters
    across consecutive ranks.

    The window defaults to n_from - 1 so that the base rank already has a
    nonempty tail to quotient by or to take invariants of; comparing
    against a bare rank (empty tail) would mix two different functors."""
    lam, mu = aspartition(lam), aspartition(mu)
    if n_to <= n_from:
        raise ValueError("need n_to > n_from")
    if obj not in _OBJECT_MODES:
        raise ValueError(f"unknown stabilization object {obj!r}")
    if window is None:
        window = n_from - 1
    if not 0 < window < n_from:
        raise ValueError("window must sit strictly below n_from")
    mode = _OBJECT_MODES[obj]
    chars: list = []
    for n in range(n_from, n_to + 1):
        m = _build_family_member(obj, lam, mu, n, prime)
        chars.append((n, restricted_character(m, window, mode=mode, prime=prime)))
    stabilized = True
    mismatch = None
    for (n1, c1), (n2, c2) in zip(chars, chars[1:]):
        if c1 != c2:
            stabilized = False
            mismatch = (n1, n2)
            break
    return StabilizationReport(obj=obj, lam=lam, mu=mu, n_from=n_from,
                               n_to=n_to, window=window, mode=mode,
                               stabilized=stabilized, characters=chars,
                               first_mismatch=mismatch)
