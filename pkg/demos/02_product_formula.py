"""
Adjoints of a product
=====================

The k-adjoint of A x B splits into blocks, one per i, each holding the
tensor product of the i-adjoint of A with the (k-i)-adjoint of B.
"""

from kadjoint.adjoint import k_adjoint, product_adjoint_rhs, product_coordinate_map
from kadjoint.arrangement import boolean_arrangement, build_arrangement, product
from kadjoint.linalg import normalize_vector

a3 = build_arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
b1 = boolean_arrangement(1)

for k in (1, 2, 3):
    direct = k_adjoint(product(a3, b1), k).base
    blocks = product_adjoint_rhs(a3, b1, k)
    # move the lex coordinates of F^C(4,k) into the block layout
    where = product_coordinate_map(3, 1, k)
    moved = set()
    for h in direct.hyperplanes:
        w = [0] * len(where)
        for j, c in enumerate(h.normal):
            w[where[j]] = c
        moved.add(normalize_vector(w))
    print(f"k={k}: {len(direct)} hyperplanes in F^{direct.dim}, blocks agree: {moved == blocks.normal_set()}")
