"""Exact k-adjoints of hyperplane arrangements, their Grassmannian strata and matroid invariants.

Modules: ``linalg`` (rational matrices), ``arrangement`` (lattices, chains),
``adjoint`` (k-adjoints, tensors, products), ``grassmann`` (Plücker vectors,
strata, Schubert symbols), ``matroid`` (invariants, NBC sets), ``decompose``
(sampling census) and ``cli``.
"""

__version__ = "0.1.0"
