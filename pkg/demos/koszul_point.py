"""The point of P^3 cut out by x1, x2, x3, seen three ways.

1. As the Pfaffian locus of the 3x3 Koszul alternating matrix.
2. Through its Buchsbaum-Eisenbud resolution, which is the Koszul complex.
3. As a degeneracy locus Z_3(E, F) of the graph Lagrangian of that matrix,
   whose 2x2 minors generate the square of the ideal.
"""

from lagloci import Ideal, be_complex, check_exactness, degeneracy_ideal, graph_pair
from lagloci.fixtures import fixture_matrix
from lagloci.pfaffian import submaximal_pfaffian_vector
from lagloci.resolutions import dual_diagram, verify_square
from lagloci.linalg import identity


def main():
    A, R = fixture_matrix("koszul-point")
    print("matrix:")
    print(A)
    print("submaximal Pfaffians:", list(submaximal_pfaffian_vector(A)))

    C = be_complex(A)
    print("twists of the BE complex:", C.twists)
    print("d o d = 0:", C.is_complex(), " exact:", check_exactness(C))

    Z = degeneracy_ideal(graph_pair(A), 3).ideal
    print("Z_3 ideal generators:", Z.gens)
    print("minors of order 2 generate its square:", verify_square(A, Ideal(list(R.gens()), R)))

    # psi = A, phi = 1 is the Pfaffian-subscheme case of a split diagram
    S = dual_diagram(A, identity(R, 3))
    print("top twists:", S.top.twists)
    print("bottom twists:", S.bottom.twists)
    print("ladder commutes:", S.ladder_commutes())


if __name__ == "__main__":
    main()
