"""Iterate U_0 = [[a, b], [b, -a]] with b < 0 over a grid of a and report
where each sequence ends up. Nothing is asserted: for b < 0 the first step
leaves the [[a, b], [b, -a]] family, so the sigma_z limit known for b > 0
does not carry over automatically.

    python scripts/negative_b_sweep.py [--steps 20]
"""
import argparse

import numpy as np

from eigenseq import gate, hs_distance, iterate_sequence
from eigenseq.gateseq import reflection_2x2


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--max-iter", type=int, default=200)
    args = p.parse_args()
    sz = gate("sigmaz")
    print(f"{'a':>8} {'steps':>6} {'reason':>20} {'|lim - sz|':>12}  U_1 row 2")
    for i in range(args.steps):
        a = i / args.steps
        states, rep = iterate_sequence(reflection_2x2(a, -1), args.max_iter)
        u1 = states[1].u
        print(f"{a:8.4f} {rep.steps:6d} {rep.reason:>20} {hs_distance(rep.limit, sz):12.3e}  {np.round(u1[1], 6)}")


if __name__ == "__main__":
    main()
