"""
The 2-adjoint of the Boolean arrangement
========================================

Every rank-2 flat of B_4 is a coordinate plane, and its adjoint hyperplane
is a single coordinate hyperplane of F^6.
"""

from kadjoint.adjoint import format_subset, k_adjoint
from kadjoint.arrangement import boolean_arrangement, build_lattice

b4 = boolean_arrangement(4)
lat = build_lattice(b4)
print("rank sizes of L(B_4):", lat.rank_sizes())

adj = k_adjoint(b4, 2, lat)
for h in adj.hyperplanes:
    span = [i + 1 for i in range(4) if i not in h.source.contains]
    terms = [f"{c}*x{format_subset(s)}" for s, c in zip(adj.index.subsets, h.raw) if c]
    print(f"X = span of e{span}:  {' + '.join(terms)} = 0")

# the normalized hyperplanes are exactly B_6
print("equals B_6:", adj.base.normal_set() == boolean_arrangement(6).normal_set())
