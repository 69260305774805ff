"""Euler characteristic bookkeeping behind two parity obstructions.

A codimension-1 symmetric resolution twisted by l on P^n with n = 1 mod 4
forces chi(F(-l/2)) to be even.  For the threefold example in P^5 the
sheaf F is assembled from Omega^3(3) and a trivial bundle of rank 10, and
chi(F(-3)) = 1, so no such resolution exists.

The skew analogue on P^3 applies to the cotangent sheaf of a degree d
surface, which is obstructed exactly when d is odd.
"""

from lagloci.resolutions import (euler_characteristic, parity_obstruction_codim1,
                                 surface_cotangent_twists, threefold_sheaf_twists)


def main():
    vt = threefold_sheaf_twists()
    chi = euler_characteristic(vt, 5, -3)
    print("virtual twists of F:", vt)
    print("chi(F(-3)) =", chi)
    print("obstructed (n=5, l=6):", parity_obstruction_codim1(5, 6, chi, "symmetric"))
    print()
    for d in range(1, 8):
        c = euler_characteristic(surface_cotangent_twists(d), 3)
        print(f"degree {d}: chi = {c:4d}, skew obstruction:",
              parity_obstruction_codim1(3, 0, c, "skew"))


if __name__ == "__main__":
    main()
