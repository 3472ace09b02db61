"""Print the matrix of E^k_{mu,nu} on B_r in the Schur basis, by the oracle and by the closed form.

    python3 demos/action_table.py 1 2 2
(k, r, max weight of lam/mu/nu)
"""
import sys

from glwedge.partitions import enumerate_partitions
from glwedge.vertex import ActionQuery, evaluate


def main(k=1, r=2, weight=2):
    lams = enumerate_partitions(r, weight)
    pairs = [(mu, nu) for mu in enumerate_partitions(k, weight) for nu in enumerate_partitions(k, weight)]
    mismatches = 0
    for mu, nu in pairs:
        print(f"E^{k}_{{{mu},{nu}}}")
        for lam in lams:
            res = evaluate(ActionQuery.make(k, r, lam, mu, nu))
            mismatches += not res.equal
            if res.direct:
                print(f"    Delta_{lam}  ->  {res.direct}")
    print(f"{len(pairs) * len(lams)} entries, {mismatches} disagreements between oracle and closed forms")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:4]))
