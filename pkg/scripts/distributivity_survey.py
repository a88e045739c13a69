"""Residuals |F(A op B) - F(A) op F(B)| for random unitary pairs, per composition.

    python scripts/distributivity_survey.py [--pairs 200] [--seed 0]
"""
import argparse

import numpy as np

from eigenseq import check_distributivity, gate


def haar(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))[None, :]


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = np.random.default_rng(args.seed)
    for kind in ("direct_sum", "kronecker", "star"):
        res = []
        for _ in range(args.pairs):
            m = 2 if kind == "star" else int(rng.integers(1, 5))
            res.append(check_distributivity(kind, haar(rng, m), haar(rng, int(rng.integers(1, 5)))).residual)
        res = np.array(res)
        print(f"{kind:>10}: holds for {np.sum(res <= 1e-9)}/{len(res)}   "
              f"median residual {np.median(res):.3e}   max {res.max():.3e}")
    for a, b in [("sigmax", "sigmax"), ("hadamard", "sigmaz"), ("sigmay", "hadamard")]:
        for kind in ("kronecker", "star"):
            r = check_distributivity(kind, gate(a), gate(b))
            print(f"{kind:>10}({a}, {b}): residual {r.residual:.3e}")


if __name__ == "__main__":
    main()
