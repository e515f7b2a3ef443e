"""Check every identity over a grid of r and record timings and the first failing power.

    python scripts/identity_sweep.py --order 80 --r-max 6
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from durfee.identities import IdentityId, admissible, verify


@dataclass
class SweepConfig:
    names: list[str] = field(default_factory=lambda: ["AG", "AGP", "BR33", "BR35",
                                                      "EVEN_B", "AGPB"])
    r_max: int = 5
    order: int = 60
    include_uncorrected: bool = True
    out: Path = Path("results/identity_sweep.json")


def cases(cfg: SweepConfig):
    for name in cfg.names:
        for r in range(1, cfg.r_max + 1):
            for i in admissible(name, r):
                yield IdentityId(name, r, i)
    for r in range(1, cfg.r_max + 1):
        yield IdentityId("JTP", z=r, step=2 * r + 1)
    if cfg.include_uncorrected:
        for r in range(1, cfg.r_max + 1):
            for i in admissible("BR33", r):
                yield IdentityId("BR33", r, i, uncorrected=True)


def main():
    cfg = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=cfg.order)
    ap.add_argument("--r-max", type=int, default=cfg.r_max)
    ap.add_argument("--out", type=Path, default=cfg.out)
    a = ap.parse_args()
    cfg = SweepConfig(r_max=a.r_max, order=a.order, out=a.out)

    records = []
    for ident in cases(cfg):
        t = time.perf_counter()
        v = verify(ident, cfg.order)
        dt = time.perf_counter() - t
        first = None if v.witness is None else v.witness[0]
        records.append({"identity": str(ident), "ok": v.ok, "first_failure": first,
                        "seconds": round(dt, 3)})
        print(f"{'ok  ' if v.ok else 'FAIL'} {ident!s:32} {dt:6.2f}s"
              + ("" if first is None else f"  first bad power q^{first}"))
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps({"config": {**asdict(cfg), "out": str(cfg.out)},
                                   "records": records}, indent=2))
    print(f"-> {cfg.out}")


if __name__ == "__main__":
    main()
