"""Over F2, three Lagrangians can meet pairwise in even dimension and still
have no common complement.

We search the hyperbolic plane of rank 4 exhaustively.  The worked example
we started from names U, U' and a third subspace x1 + x3 = x2 + x4 = 0;
that third subspace is b-isotropic but not q-isotropic, so it is not
Lagrangian.  The search finds a genuine triple instead.
"""

import numpy as np

from lagloci.fixtures import load_fixture
from lagloci.jsonio import matrix_from_json, quadspace_from_json, read_ring
from lagloci.linalg import rank
from lagloci.pairs import all_lagrangians, find_triple_without_complement


def main():
    data = load_fixture("f2-space")
    K = read_ring(data)
    V = quadspace_from_json(K, data["space"])
    lags = all_lagrangians(V)
    print(f"{len(lags)} Lagrangian subspaces of F2^4 with q = x1 x3 + x2 x4")

    literal = matrix_from_json(K, data["subspaces"]["U''"])
    v = literal[:, 0]
    print("literal third subspace, q(first column) =", V.q(v), "(not isotropic)")

    triple, _ = find_triple_without_complement(V)
    for i, T in enumerate(triple):
        print(f"L{i}:", [[x.v for x in row] for row in T])
    for i in range(3):
        for j in range(i + 1, 3):
            d = 4 - rank(np.hstack([triple[i], triple[j]]), K)
            print(f"dim(L{i} cap L{j}) = {d}")
    common = [M for M in lags
              if all(rank(np.hstack([T, M]), K) == 4 for T in triple)]
    print("common complements:", len(common))


if __name__ == "__main__":
    main()
