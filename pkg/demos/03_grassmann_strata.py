"""
Three labels for one subspace
=============================

A plane U in F^4 is labelled by the flat of L(B_4^(2)) holding its
Plücker vector, by the matroid of the restricted normals and by its
Schubert symbols along all 24 maximal chains of L(B_4).
"""

from kadjoint.adjoint import k_adjoint
from kadjoint.arrangement import boolean_arrangement, build_lattice, maximal_chains
from kadjoint.grassmann import Subspace, l_lower, locate_stratum, plucker, refined_signature
from kadjoint.matroid import bases, invariants, matroid_of_restriction

b4 = boolean_arrangement(4)
lat = build_lattice(b4)
adj = k_adjoint(b4, 2, lat)
adj_lat = build_lattice(adj.base)
chains = maximal_chains(lat)

planes = {
    "generic": [[1, 0, 1, 2], [0, 1, 1, 1]],
    "diagonal": [[1, 0, 1, 0], [0, 1, 0, 1]],
    "coordinate": [[1, 0, 0, 0], [0, 1, 0, 0]],
}
for name, rows in planes.items():
    u = Subspace.from_rows(rows)
    m = matroid_of_restriction(b4, u)
    inv = invariants(m)
    print(name)
    print("  Plücker vector  ", plucker(u).coords)
    print("  stratum rank    ", locate_stratum(u, adj, adj_lat).rank)
    print("  bases           ", [tuple(i + 1 for i in b) for b in bases(m)])
    print("  Schubert symbols", sorted(set(refined_signature(u, chains).per_chain)))
    print("  complements     ", len(l_lower(u, lat)), "of 6 rank-2 flats")
    print("  I, w            ", inv.independence_numbers, inv.whitney)
