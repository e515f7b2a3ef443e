"""Where does the uncorrected product for BR33 first depart from the sum side?

Prints the first failing power and both coefficients for every (r, i).

    python scripts/uncorrected_bressoud.py --r-max 7 --order 60
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from durfee.identities import IdentityId, verify


@dataclass
class UncorrectedConfig:
    r_max: int = 6
    order: int = 40


def main():
    cfg = UncorrectedConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=cfg.order)
    ap.add_argument("--r-max", type=int, default=cfg.r_max)
    a = ap.parse_args()
    cfg = UncorrectedConfig(r_max=a.r_max, order=a.order)

    print(f"{'r':>2} {'i':>2}  {'power':>5}  {'sum':>6}  {'product':>7}")
    for r in range(1, cfg.r_max + 1):
        for i in range(r):
            v = verify(IdentityId("BR33", r, i, uncorrected=True), cfg.order)
            if v.ok:
                print(f"{r:>2} {i:>2}  agrees to q^{cfg.order}")
            else:
                k, s, p = v.witness
                print(f"{r:>2} {i:>2}  {k:>5}  {s:>6}  {p:>7}")


if __name__ == "__main__":
    main()
