"""Print the first steps of the sequences for sigma_x, sigma_y and the 3x3
degenerate example, with Hamilton operators, Cayley transforms, distances
and eigenphases.

    python scripts/reference_chains.py [--steps 3]
"""
import argparse

import numpy as np

from eigenseq import cayley_spectral, gate, hamiltonian_from_frame, iterate_sequence

np.set_printoptions(precision=6, suppress=True, linewidth=140)

R = 1 / np.sqrt(2)
STARTS = {
    "sigmax": gate("sigmax"),
    "sigmay": gate("sigmay"),
    "degenerate-3x3": np.array([[R, 0, R], [0, 1, 0], [R, 0, -R]], dtype=complex),
}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--steps", type=int, default=3)
    args = p.parse_args()
    for name, u0 in STARTS.items():
        states, rep = iterate_sequence(u0, 60)
        print(f"=== {name}: {rep.reason} after {rep.steps} steps, final distance {rep.final_distance:.3e}")
        for s in states[: args.steps]:
            print(f"--- k = {s.k}" + ("" if s.hs_dist_prev is None else
                                      f"   |U_k - U_k-1| = {s.hs_dist_prev:.12f}   d = {s.d_prev:.12f}"))
            print("U =\n", s.u)
            print("theta =", s.frame.phases)
            print("H =\n", hamiltonian_from_frame(s.frame))
            print("V =\n", cayley_spectral(s.frame))
        print("limit =\n", rep.limit)


if __name__ == "__main__":
    main()
