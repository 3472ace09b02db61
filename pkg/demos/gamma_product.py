"""Gamma(z)Gamma*(w)[b]^r_lam against the two candidate right-hand sides.

The four-derivation product on wedge^r V already fails at k = r = 1, lam = ():
Gamma(z)Gamma*(w) b_0 = sigma_plus(z) b_0 has no w in it.  Passing through
rank r - k instead gives an identity exactly when r - k >= len(lam).
"""
from glwedge.arith import ws, zs
from glwedge.exterior import basis_element
from glwedge.partitions import enumerate_partitions
from glwedge.vertex import gamma, gamma_product_check, gamma_product_literal_check, gamma_star


def main(D=3):
    u = basis_element(1, ())
    print("Gamma(z)Gamma*(w) b_0 =", gamma(zs(1), D, gamma_star(ws(1), u)))
    print("literal form holds at k=r=1, lam=():", gamma_product_literal_check(1, 1, (), D).holds)
    print()
    print(" k  r  lam      r-k>=len  corrected holds")
    for k in (1, 2):
        for r in range(k, 4):
            for lam in enumerate_partitions(r, 2):
                ok = gamma_product_check(k, r, lam, D).holds
                print(f" {k}  {r}  {str(lam):8} {str(r - k >= lam.length):9} {ok}")


if __name__ == "__main__":
    main()
