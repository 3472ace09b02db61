"""Which complete-symmetric sequence belongs in the deformed Giambelli determinant.

Builds the determinant with h taken in B_r and in B_{r-k} and counts the
queries on which each agrees with the oracle.
"""
import itertools

from glwedge.partitions import enumerate_partitions
from glwedge.vertex import second_version_h_rank_check


def main():
    tally = {"H_r": [0, 0], "H_(r-k)": [0, 0]}
    for k in (1, 2):
        for r in range(k, 4):
            for lam in enumerate_partitions(r, 2):
                for mu, nu in itertools.product(enumerate_partitions(k, 2), repeat=2):
                    for label, rank in (("H_r", r), ("H_(r-k)", r - k)):
                        ok = second_version_h_rank_check(k, r, lam, mu, nu, r + 3, rank).holds
                        tally[label][0] += ok
                        tally[label][1] += 1
    for label, (good, total) in tally.items():
        print(f"{label:8} agrees with the oracle on {good}/{total} queries")


if __name__ == "__main__":
    main()
