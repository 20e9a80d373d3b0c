"""Command line entry point: ``kadjoint <command> ...``.

Exit codes: 0 success, 1 verification violations, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Sequence

from . import io
from .adjoint import k_adjoint, tensor
from .arrangement import (
    DEFAULT_CHAIN_CAP,
    boolean_arrangement,
    build_lattice,
    characteristic_polynomial,
    maximal_chains,
    product,
    restriction,
)
from .decompose import (
    Setting,
    classify_samples,
    report_to_dict,
    verify_antimonotonicity,
    verify_lower_set_inclusion,
    verify_nbc_theorem,
)
from .errors import ChainBudgetExceeded, ConsistencyError, KAdjointError, NonEssentialError, RangeError
from .grassmann import DEFAULT_BOUND, l_lower, l_upper, locate_stratum, plucker, refined_signature
from .matroid import invariants, matroid_of_restriction, nbc_polynomial, restricted_matroid


class UsageError(Exception):
    pass


def _read_json(path: str, stdin) -> object:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def _arrangement(path: str, stdin, **kwargs):
    return io.arrangement_from_dict(_read_json(path, stdin), f"arrangement {path}", **kwargs)


def _subspace(path: str, stdin):
    return io.subspace_from_dict(_read_json(path, stdin), f"subspace {path}")


def _parse_order(text: str | None, m: int) -> list[int] | None:
    if text is None:
        return None
    try:
        order = [int(x) - 1 for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--nbc-order must be comma-separated integers, got {text!r}") from None
    if sorted(order) != list(range(m)):
        raise UsageError(f"--nbc-order must be a permutation of 1..{m}")
    return order


def _check_k(k: int, lo: int, hi: int):
    if not lo <= k <= hi:
        raise RangeError(f"k out of range: --k {k} must lie in {lo}..{hi}")


def cmd_lattice(args, stdin):
    return io.lattice_to_dict(build_lattice(_arrangement(args.arrangement, stdin))), 0


def cmd_adjoint(args, stdin):
    a = _arrangement(args.arrangement, stdin)
    _check_k(args.k, 0, a.dim)
    return io.adjoint_to_list(k_adjoint(a, args.k)), 0


def cmd_restrict(args, stdin):
    a = _arrangement(args.arrangement, stdin)
    u = _subspace(args.subspace, stdin)
    return io.restriction_to_dict(restriction(a, u.basis)), 0


def cmd_stratum(args, stdin):
    a = _arrangement(args.arrangement, stdin)
    u = _subspace(args.subspace, stdin)
    _check_k(u.k, 1, a.dim - 1)
    lat = build_lattice(a)
    adj = k_adjoint(a, u.k, lat)
    p = locate_stratum(u, adj, build_lattice(adj.base))
    chains = maximal_chains(lat, args.chain_cap)
    sig = refined_signature(u, chains)
    return {
        "plucker": [str(c) for c in plucker(u).coords],
        "stratum_rank": p.rank,
        "stratum_contains": [io.one_based(adj.source(i).contains) for i in sorted(p.contains)],
        "L_lower": [io.one_based(x.contains) for x in l_lower(u, lat)],
        "L_upper": [io.one_based(x.contains) for x in l_upper(u, lat)],
        "schubert": {str(i): list(s) for i, s in enumerate(sig.per_chain)},
    }, 0


def cmd_matroid(args, stdin):
    a = _arrangement(args.arrangement, stdin)
    u = _subspace(args.subspace, stdin)
    m = matroid_of_restriction(a, u)
    order = _parse_order(args.nbc_order, m.ground_size)
    inv = invariants(m, order, restricted=restricted_matroid(a, u))
    return io.invariants_to_dict(inv, nbc_polynomial(m, order)), 0


def cmd_charpoly(args, stdin):
    coeffs = characteristic_polynomial(build_lattice(_arrangement(args.arrangement, stdin)))
    return {"char_poly": list(coeffs), "text": io.format_polynomial(coeffs)}, 0


def cmd_product(args, stdin):
    a = _arrangement(args.first, stdin)
    b = _arrangement(args.second, stdin)
    return io.arrangement_to_dict(product(a, b)), 0


def cmd_tensor(args, stdin):
    a = _arrangement(args.first, stdin)
    b = _arrangement(args.second, stdin)
    return io.arrangement_to_dict(tensor(a, b)), 0


def _census(args, stdin):
    a = _arrangement(args.arrangement, stdin)
    _check_k(args.k, 1, a.dim - 1)
    if args.samples < 1:
        raise RangeError(f"--samples must be positive, got {args.samples}")
    if args.bound < 1:
        raise RangeError(f"--bound must be at least 1, got {args.bound}")
    setting = Setting.build(a, args.k, args.chain_cap)
    return classify_samples(a, args.k, args.samples, args.seed, args.bound, setting=setting)


def cmd_verify_equivalence(args, stdin):
    report = _census(args, stdin)
    out = report_to_dict(report, include_pairs=False)
    return out, 1 if report.violations else 0


def cmd_verify_monotonicity(args, stdin):
    report = _census(args, stdin)
    out = report_to_dict(report)
    out["monotonicity_violations"] = verify_antimonotonicity(report)
    out["inclusion_violations"] = verify_lower_set_inclusion(report)
    out["nbc_violations"] = verify_nbc_theorem(report)
    bad = report.violations or out["monotonicity_violations"] or out["inclusion_violations"] or out["nbc_violations"]
    return out, 1 if bad else 0


def cmd_boolean(args, stdin):
    if args.n < 1:
        raise RangeError(f"--n must be positive, got {args.n}")
    _check_k(args.k, 1, args.n - 1)
    adj = k_adjoint(boolean_arrangement(args.n), args.k)
    target = boolean_arrangement(comb(args.n, args.k))
    equal = adj.base.dim == target.dim and adj.base.normal_set() == target.normal_set()
    return {
        "n": args.n,
        "k": args.k,
        "adjoint_dim": adj.base.dim,
        "hyperplanes": len(adj.base),
        "expected": f"B_{target.dim}",
        "equal": equal,
    }, 0 if equal else 1


COMMANDS = {
    "lattice": cmd_lattice,
    "adjoint": cmd_adjoint,
    "restrict": cmd_restrict,
    "stratum": cmd_stratum,
    "matroid": cmd_matroid,
    "charpoly": cmd_charpoly,
    "product": cmd_product,
    "tensor": cmd_tensor,
    "verify-equivalence": cmd_verify_equivalence,
    "verify-monotonicity": cmd_verify_monotonicity,
    "boolean": cmd_boolean,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kadjoint", description="k-adjoints of hyperplane arrangements")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_arr(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("arrangement", help="arrangement JSON file, '-' for stdin")
        return p

    with_arr("lattice", "intersection lattice with Möbius values")
    p = with_arr("adjoint", "k-adjoint hyperplanes")
    p.add_argument("--k", type=int, required=True)
    for name, help_ in (("restrict", "restriction to a subspace"), ("stratum", "adjoint stratum of a subspace")):
        p = with_arr(name, help_)
        p.add_argument("subspace", help="subspace JSON file")
        p.add_argument("--chain-cap", type=int, default=DEFAULT_CHAIN_CAP)
    p = with_arr("matroid", "matroid invariants of a restriction")
    p.add_argument("subspace", help="subspace JSON file")
    p.add_argument("--nbc-order", help="comma-separated permutation of 1..m, smallest first")
    with_arr("charpoly", "characteristic polynomial")
    for name in ("product", "tensor"):
        p = sub.add_parser(name, help=f"{name} of two arrangements")
        p.add_argument("first")
        p.add_argument("second")
    for name in ("verify-equivalence", "verify-monotonicity"):
        p = with_arr(name, "sampling census of Grassmannian strata")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--samples", type=int, required=True)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        p.add_argument("--chain-cap", type=int, default=DEFAULT_CHAIN_CAP)
    p = sub.add_parser("boolean", help="check that B_n^(k) is Boolean")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _is_flat(value) -> bool:
    if isinstance(value, dict):
        return all(not isinstance(v, (dict, list)) or _is_flat(v) and not isinstance(v, dict) for v in value.values())
    if isinstance(value, list):
        return all(not isinstance(v, dict) for v in value)
    return True


def render_text(obj, indent: int = 0) -> str:
    """Indented plain-text rendering of a report."""
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            if _is_flat(value):
                lines.append(f"{pad}{key}: {_inline(value)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for i, item in enumerate(obj):
            if _is_flat(item):
                lines.append(f"{pad}{_inline(item)}")
            else:
                lines.append(f"{pad}[{i}]")
                lines.append(render_text(item, indent + 1))
        return "\n".join(lines)
    return f"{pad}{_inline(obj)}"


def _inline(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_inline(v) for v in value) + ")"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_inline(v)}" for k, v in value.items())
    if value is None:
        return "-"
    return str(value)


def run(argv: Sequence[str], stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        result, code = COMMANDS[args.command](args, stdin)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except io.FormatError as exc:
        print(f"error: invalid input: {exc}", file=stderr)
        return 2
    except NonEssentialError as exc:
        print(f"error: non-essential arrangement: {exc}", file=stderr)
        return 2
    except ChainBudgetExceeded as exc:
        print(f"error: chain budget exceeded: {exc}", file=stderr)
        return 2
    except RangeError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ConsistencyError as exc:
        print(f"error: identity violated: {exc}", file=stderr)
        return 1
    except KAdjointError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    if args.format == "text":
        stdout.write(render_text(result) + "\n")
    else:
        stdout.write(json.dumps(result, indent=2) + "\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
