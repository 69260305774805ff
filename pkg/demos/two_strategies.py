"""Local equations of a degeneracy locus, computed three ways on one split
instance (psi; phi) over the local ring at the origin.

* directly, as a Pfaffian ideal of a local alternating representative;
* by symmetrizing with an alternating homotopy h, mu = phi^T psi + psi^T h psi;
* from the standard local form, as the colon ideal (Pf(phi^T psi) : f).
"""

from lagloci.degeneracy import degeneracy_ideal
from lagloci.generate import strategy_instance
from lagloci.ideals import ideal_equal
from lagloci.pairs import split_pair
from lagloci.resolutions import colon_equations, standard_local_form, strategy_one_ideal


def main(seed=3):
    psi, phi, planted = strategy_instance(seed)
    print("planted beta:")
    print(planted["beta"])
    print("planted gamma:")
    print(planted["gamma"])

    D = degeneracy_ideal(split_pair(psi, phi), 3, kernel=False).ideal
    I1, mu, h = strategy_one_ideal(psi, phi)
    form = standard_local_form(psi, phi)
    C, info = colon_equations(psi, phi, form=form, details=True)

    print("f = Pf(gamma) =", info["f"])
    print("direct   :", D.groebner())
    print("homotopy :", I1.groebner())
    print("colon    :", C.groebner())
    print("all equal:", ideal_equal(D, I1) and ideal_equal(D, C))


if __name__ == "__main__":
    main()
