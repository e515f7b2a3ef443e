"""Tabulate the six partition classes and flag any (r, i, n) where they disagree.

    python scripts/count_tables.py --n-max 30 --out results/counts.csv
"""

from __future__ import annotations

import argparse
import csv
import time
from dataclasses import dataclass, field
from pathlib import Path

from durfee.classes import CLASS_NAMES, ClassId, count


@dataclass
class CountConfig:
    r_values: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    n_max: int = 25
    classes: tuple[str, ...] = CLASS_NAMES
    out: Path = Path("results/counts.csv")


def run(cfg: CountConfig) -> list[dict]:
    rows = []
    for r in cfg.r_values:
        for i in range(1, r + 1):
            t = time.perf_counter()
            for n in range(cfg.n_max + 1):
                row = {"r": r, "i": i, "n": n}
                row.update({c: count(ClassId(c, r, i), n) for c in cfg.classes})
                row["agree"] = len({row[c] for c in cfg.classes}) == 1
                rows.append(row)
            print(f"r={r} i={i}: {time.perf_counter() - t:.2f}s")
    return rows


def main():
    cfg = CountConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=cfg.n_max)
    ap.add_argument("--r", type=int, nargs="+", default=cfg.r_values)
    ap.add_argument("--out", type=Path, default=cfg.out)
    a = ap.parse_args()
    cfg = CountConfig(r_values=a.r, n_max=a.n_max, out=a.out)

    rows = run(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with cfg.out.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
    bad = [row for row in rows if not row["agree"]]
    print(f"{len(rows)} rows -> {cfg.out}; disagreements: {len(bad)}")
    for row in bad[:10]:
        print("  ", row)


if __name__ == "__main__":
    main()
