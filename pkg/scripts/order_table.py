"""Automorphism group orders: formula vs brute force vs affine subgroup.

    python scripts/order_table.py --max-n 5
"""

import argparse
import time

from foldcube.autgroup import affine_group_order, group_order
from foldcube.oracle import NotAffine, brute_force_automorphisms, decompose_affine
from foldcube.topology import CayleyGraph


def count_affine(auts, folded):
    ok = 0
    for p in auts:
        try:
            decompose_affine(p, folded)
            ok += 1
        except NotAffine:
            pass
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--mode", choices=["folded", "hypercube"], default="folded")
    args = ap.parse_args()
    folded = args.mode == "folded"

    print(f"{'graph':>6} {'formula':>8} {'brute':>8} {'affine':>8} {'decomposable':>13} {'regime':>18} {'secs':>6}")
    for n in range(2, args.max_n + 1):
        g = CayleyGraph(n, folded)
        t0 = time.perf_counter()
        auts = brute_force_automorphisms(g)
        order = group_order(n, folded)
        print(f"{g.name:>6} {order.value:>8} {len(auts):>8} {affine_group_order(n, folded):>8} "
              f"{count_affine(auts, folded):>13} {order.regime:>18} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
