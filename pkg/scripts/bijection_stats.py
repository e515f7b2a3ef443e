"""Branch statistics of T on A''_r(n), plus a round-trip check per weight.

    python scripts/bijection_stats.py --n-max 25
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass, field

from durfee.bijection import Branch, T_inv, T_inv_branch, T_map, in_A_double_prime
from durfee.partitions import partitions_of


@dataclass
class BijectionConfig:
    r_values: list[int] = field(default_factory=lambda: [2, 3, 4, 5])
    n_max: int = 20


def main():
    cfg = BijectionConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=cfg.n_max)
    ap.add_argument("--r", type=int, nargs="+", default=cfg.r_values)
    a = ap.parse_args()
    cfg = BijectionConfig(r_values=a.r, n_max=a.n_max)

    cols = [b.value for b in Branch]
    print(f"{'r':>2} {'n':>3} " + " ".join(f"{c:>8}" for c in cols) + "  round-trip")
    total = Counter()
    for r in cfg.r_values:
        for n in range(cfg.n_max + 1):
            c = Counter()
            ok = True
            for lam in partitions_of(n):
                if not in_A_double_prime(lam, r):
                    continue
                mu = T_map(lam, r)
                c[T_inv_branch(mu, r).value] += 1
                ok &= T_inv(mu, r) == lam
            total += c
            print(f"{r:>2} {n:>3} " + " ".join(f"{c[k]:>8}" for k in cols) + f"  {ok}")
    print("total  " + " ".join(f"{total[k]:>8}" for k in cols))


if __name__ == "__main__":
    main()
