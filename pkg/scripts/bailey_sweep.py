"""Run the Bailey pipelines and check the tail bound used for the limit.

For every pipeline this records the smallest valuation among alpha_j with
j > M, computed with a much larger M, to confirm it stays above the order.

    python scripts/bailey_sweep.py --order 40 --r-max 5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from durfee.bailey import lattice_lhs, pipeline, tail_index, verify_pair


@dataclass
class BaileyConfig:
    r_max: int = 5
    order: int = 40
    e_values: tuple[int, ...] = (0, 1, 2)
    extra: int = 4  # how many indices past M to inspect


def tail_valuation(r, i, e, N, M, extra):
    res = pipeline(r, i, e, N, M=M + extra)
    vals = [a.valuation() for a in res.final.alpha[M + 1:]]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def main():
    cfg = BaileyConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=cfg.order)
    ap.add_argument("--r-max", type=int, default=cfg.r_max)
    a = ap.parse_args()
    cfg = BaileyConfig(r_max=a.r_max, order=a.order)

    N, M = cfg.order, tail_index(cfg.order)
    print(f"order {N}, M = {M}")
    print(f"{'r':>2} {'i':>2} {'e':>2}  pairs  limit  tail-valuation  time")
    for e in cfg.e_values:
        for r in range(1, cfg.r_max + 1):
            for i in range(0, r + 1):
                if i > 0 and e < 1:
                    continue
                t = time.perf_counter()
                res = pipeline(r, i, e, N)
                pairs_ok = all(verify_pair(p) for p in res.pairs)
                limit_ok = res.limit == lattice_lhs(r, i, e, N)
                tv = tail_valuation(r, i, e, N, M, cfg.extra)
                tail = f">{N}" if tv is None else str(tv)  # None: zero through q^N
                flag = "" if tv is None or tv > N else "  <-- tail reaches the order"
                print(f"{r:>2} {i:>2} {e:>2}  {str(pairs_ok):>5}  {str(limit_ok):>5}"
                      f"  {tail:>14}  {time.perf_counter() - t:.2f}s{flag}")


if __name__ == "__main__":
    main()
