#!/usr/bin/env python3
"""Compare eigenvalue-location estimates across a purity sweep.

For each built-in frame and a grid of random states, prints the true
largest Gram eigenvalue next to the trace/Frobenius interval bound, the
closed-form purity bound and the Gershgorin union bound. The last column
shows which estimate is tighter at that state.
"""

import argparse

import numpy as np

from kdframes.bounds import etf_spectral_bound, gershgorin_disks, max_eig_upper_bound
from kdframes.channels import principal_kraus, unraveling_gram
from kdframes.frames import (
    EtfParameters,
    complement_etf,
    orthonormal_frame,
    purity,
    random_density_matrix,
    sic_qubit,
)
from kdframes.linalg import hermitian_eig


def scan(frame, name: str, states: int, seed: int) -> None:
    params = EtfParameters.of_frame(frame)
    unraveling = principal_kraus(frame)
    print(f"\n{name} (n={frame.n}, d={frame.d}, c={params.coherence:.4f})")
    print(f"{'purity':>8} {'true max':>10} {'interval':>10} {'closed':>10} {'gershgorin':>11}  winner")
    for k in range(states):
        rho = random_density_matrix(frame.d, np.random.default_rng([seed, k]))
        gram = unraveling_gram(unraveling, rho)
        true_max = hermitian_eig(gram).eigenvalues[0]
        interval_bound = max_eig_upper_bound(gram)
        closed_bound = etf_spectral_bound(params, purity(rho))
        gershgorin_bound = max(c.real + r for c, r in gershgorin_disks(gram))
        winner = "interval" if interval_bound <= gershgorin_bound else "gershgorin"
        print(
            f"{purity(rho):8.4f} {true_max:10.6f} {interval_bound:10.6f} "
            f"{closed_bound:10.6f} {gershgorin_bound:11.6f}  {winner}"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--states", type=int, default=8, help="random states per frame")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    base = sic_qubit()
    scan(base, "qubit SIC", args.states, args.seed)
    scan(complement_etf(base), "qubit SIC complement", args.states, args.seed + 1)
    scan(orthonormal_frame(3), "orthonormal basis d=3", args.states, args.seed + 2)


if __name__ == "__main__":
    main()
