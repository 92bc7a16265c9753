"""4-cycle census, rigidity propagation and connectivity across dimensions.

    python scripts/structure_table.py --max-n 7
"""

import argparse

from foldcube.oracle import CONNECTIVITY_LIMIT, four_cycle_census, vertex_connectivity
from foldcube.topology import CayleyGraph
from foldcube.witness import rigidity_propagate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--mode", choices=["folded", "hypercube"], default="folded")
    args = ap.parse_args()
    folded = args.mode == "folded"

    print(f"{'graph':>6} {'degree':>6} {'census':>14} {'rigidity':>16} {'kappa':>6}")
    for n in range(2, args.max_n + 1):
        g = CayleyGraph(n, folded)
        census = ",".join(f"{k}:{v}" for k, v in four_cycle_census(g).items())
        rep = rigidity_propagate(n, folded=folded)
        rig = f"{rep.determined}/{g.order}"
        kappa = vertex_connectivity(g) if n <= CONNECTIVITY_LIMIT else "-"
        print(f"{g.name:>6} {g.degree:>6} {census:>14} {rig:>16} {kappa:>6}")


if __name__ == "__main__":
    main()
