"""Trace window-restricted characters of module families across ranks.

For each requested family the script rebuilds the module at every rank in
[n_from, n_to], restricts to the leading index window, and reports whether
the restricted character has stopped changing.  The interesting output is
the per-rank restricted dimension trace, which flattens exactly when the
family stabilizes.

Run as

    python scripts/stabilization_sweep.py --n-from 4 --n-to 6 --out sweep.json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from superw.stability import stabilization_sweep

# family spec: (object kind, lam, mu)
DEFAULT_FAMILIES = [
    ("L-", (1,), ()),
    ("L-", (), (1,)),
    ("L-", (1,), (1,)),
    ("K+", (1,), (1,)),
    ("T", (1,), ()),
]


@dataclass
class SweepConfig:
    n_from: int = 4
    n_to: int = 6
    window: int | None = None
    out: str | None = None


def parse_family(text: str):
    kind, lam, mu = (text.split(":") + ["", ""])[:3]
    to_parts = lambda s: tuple(int(p) for p in s.split(",") if p)
    return kind, to_parts(lam), to_parts(mu)


def run(cfg: SweepConfig, families) -> list[dict]:
    out = []
    for kind, lam, mu in families:
        t0 = time.perf_counter()
        rep = stabilization_sweep(lam, mu, cfg.n_from, cfg.n_to, obj=kind,
                                  window=cfg.window)
        dt = time.perf_counter() - t0
        trace = [(n, ch.total_dim()) for n, ch in rep.characters]
        flag = "stable" if rep.stabilized else f"mismatch at {rep.first_mismatch}"
        print(f"{kind:>3} ({lam}|{mu}) window {rep.window}: "
              + " -> ".join(f"{d}@n={n}" for n, d in trace)
              + f"  [{flag}, {dt:.1f}s]")
        out.append(json.loads(rep.to_json()))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-from", type=int, default=4)
    ap.add_argument("--n-to", type=int, default=6)
    ap.add_argument("--window", type=int, default=None)
    ap.add_argument("--family", action="append", default=None,
                    metavar="KIND:LAM:MU",
                    help="e.g. L-:1:1 or K+::1; repeatable")
    ap.add_argument("--out", default=None)
    a = ap.parse_args()
    cfg = SweepConfig(n_from=a.n_from, n_to=a.n_to, window=a.window, out=a.out)
    families = ([parse_family(f) for f in a.family]
                if a.family else DEFAULT_FAMILIES)
    reports = run(cfg, families)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(reports, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
