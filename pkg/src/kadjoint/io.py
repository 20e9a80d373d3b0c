"""JSON reading and writing for arrangements, subspaces and reports.

Rationals are written as strings ``"p"`` or ``"p/q"``.  Hyperplane and
ground-set indices are 1-based in every document.
"""

from __future__ import annotations

import json
from typing import Any

from .adjoint import AdjointArrangement, format_subset
from .arrangement import Arrangement, IntersectionLattice, Restriction, build_arrangement, characteristic_polynomial
from .grassmann import Subspace
from .linalg import QMatrix, as_rational, format_rational
from .matroid import MatroidInvariants


class FormatError(ValueError):
    """A JSON document does not match the expected schema; the message names the field."""


def _field(doc: dict, name: str, where: str):
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected a JSON object")
    if name not in doc:
        raise FormatError(f"{where}: missing field '{name}'")
    return doc[name]


def _int_field(doc: dict, name: str, where: str) -> int:
    v = _field(doc, name, where)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise FormatError(f"{where}: field '{name}' must be a non-negative integer")
    return v


def _rational_rows(rows: Any, name: str, where: str, width: int) -> list[list]:
    if not isinstance(rows, list):
        raise FormatError(f"{where}: field '{name}' must be a list of rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != width:
            raise FormatError(f"{where}: {name}[{i}] must be a list of {width} rationals")
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(as_rational(x))
            except (TypeError, ValueError) as exc:
                raise FormatError(f"{where}: {name}[{i}][{j}]: {exc}") from None
        out.append(parsed)
    return out


def arrangement_from_dict(doc: dict, where: str = "arrangement", **kwargs) -> Arrangement:
    n = _int_field(doc, "dim", where)
    rows = _rational_rows(_field(doc, "hyperplanes", where), "hyperplanes", where, n)
    return build_arrangement(rows, n, **kwargs)


def arrangement_to_dict(a: Arrangement) -> dict:
    return {"dim": a.dim, "hyperplanes": [[str(x) for x in h.normal] for h in a.hyperplanes]}


def subspace_from_dict(doc: dict, where: str = "subspace") -> Subspace:
    n = _int_field(doc, "n", where)
    k = _int_field(doc, "k", where)
    rows = _rational_rows(_field(doc, "basis", where), "basis", where, n)
    if len(rows) != k:
        raise FormatError(f"{where}: field 'basis' has {len(rows)} rows but k={k}")
    return Subspace.from_rows(rows, n)


def subspace_to_dict(u: Subspace) -> dict:
    return {"k": u.k, "n": u.n, "basis": matrix_to_lists(u.basis)}


def matrix_to_lists(m: QMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.rows]


def one_based(indices) -> list[int]:
    return [i + 1 for i in sorted(indices)]


def lattice_to_dict(lat: IntersectionLattice) -> dict:
    return {
        "dim": lat.arrangement.dim,
        "rank_sizes": list(lat.rank_sizes()),
        "flats": [
            {
                "id": i,
                "rank": f.rank,
                "contains": one_based(f.contains),
                "basis": matrix_to_lists(f.basis),
                "mobius": mu,
            }
            for i, (f, mu) in enumerate(zip(lat.flats, lat.mobius))
        ],
        "hasse_edges": [list(e) for e in lat.hasse_edges],
        "char_poly": list(characteristic_polynomial(lat)),
    }


def adjoint_to_list(adj: AdjointArrangement) -> list[dict]:
    subsets = adj.index.subsets
    return [
        {
            "flat": one_based(h.source.contains),
            "coeffs": {format_subset(s): format_rational(c) for s, c in zip(subsets, h.raw) if c != 0},
            "normalized": {format_subset(s): str(c) for s, c in zip(subsets, h.coeffs) if c != 0},
        }
        for h in adj.hyperplanes
    ]


def restriction_to_dict(res: Restriction) -> dict:
    return {
        "arrangement": arrangement_to_dict(res.arrangement),
        "index_map": [None if j is None else j + 1 for j in res.index_map],
        "contains_U": one_based(res.loops),
    }


def invariants_to_dict(inv: MatroidInvariants, nbc_polynomial=None) -> dict:
    out = {
        "rank": inv.rank,
        "loops": one_based(inv.loops),
        "parallel_classes": [one_based(c) for c in inv.parallel_classes],
        "bases_count": inv.bases_count,
        "I": list(inv.independence_numbers),
        "I_groundset_m": list(inv.independence_numbers),
        "I_restricted": list(inv.independence_numbers_restricted or ()),
        "w": list(inv.whitney),
        "char_poly": list(inv.char_poly),
        "nbc": list(inv.nbc_counts),
    }
    if nbc_polynomial is not None:
        out["nbc_char_poly"] = list(nbc_polynomial)
    return out


def format_polynomial(coeffs, var: str = "t") -> str:
    """Render high-to-low integer coefficients, e.g. ``t^2 - 4t + 3``."""
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = deg - i
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        mag = abs(c)
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
