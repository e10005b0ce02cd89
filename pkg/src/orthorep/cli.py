"""Command-line front end.

Every subcommand writes one record per line (JSON Lines by default) on stdout
and diagnostics on stderr.  Exit status: 0 when every check passes, 1 when a
check fails, 2 on invalid input or a size-guard violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .errors import OrthorepError, SizeGuard
from .guards import check_rank
from .identities import IDENTITIES, random_dominant, sweep
from .liealg import Weight, basis, is_dominant, weyl_dim
from .linalg import rank_of
from .modbasis import enumerate_S, graded_component, graded_dim_formula, module_basis, span_dim
from .oscrep import RepContext, build_op, build_op_inductive, check_highest_weight, homomorphism_failures
from .poly import Parity, Poly, monomial_str, parse_parity
from .singular import (
    branching_table,
    enumerate_B,
    leading_monomial,
    spec_degree,
    spec_weight,
    to_pattern,
    verify_singular,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Emitter:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv_header: Optional[List[str]] = None

    def emit(self, record: Dict[str, Any]) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(record, sort_keys=True, default=str) + "\n")
        elif self.fmt == "csv":
            flat = {k: json.dumps(v, default=str) if isinstance(v, (list, dict)) else v for k, v in record.items()}
            if self._csv_header is None:
                self._csv_header = sorted(flat)
                csv.writer(self.stream).writerow(self._csv_header)
            csv.writer(self.stream).writerow([flat.get(k, "") for k in self._csv_header])
        else:
            self.stream.write("  ".join(f"{k}={_text(v)}" for k, v in record.items()) + "\n")


def _text(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_text(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ",".join(f"{k}:{_text(x)}" for k, x in v.items()) + "}"
    return str(v)


def _weight_arg(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}: {exc}")


def _range_arg(text: str) -> List[int]:
    """'3' or '1..6' (inclusive)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _kind(parity: Parity) -> str:
    return "B" if parity is Parity.ODD else "D"


def _weights_from_args(args) -> List[Weight]:
    parity = parse_parity(args.parity)
    if getattr(args, "random_weights", 0):
        rng = random.Random(args.seed)
        return [Weight(random_dominant(rng, args.n, parity)) for _ in range(args.random_weights)]
    if args.lambda_ is None:
        raise OrthorepError("--lambda or --random-weights is required")
    return [args.lambda_]


def _ctx(args, lam: Weight, need_dominant: bool) -> RepContext:
    if len(lam) != args.n + 1:
        raise OrthorepError(f"--lambda needs {args.n + 1} coordinates for n={args.n}")
    ctx = RepContext(args.n, args.parity, [v.to_fraction() for v in lam])
    if need_dominant and not is_dominant(lam, _kind(ctx.parity)):
        raise OrthorepError(f"{lam} is not dominant for {_kind(ctx.parity)}{args.n + 1}")
    return ctx


def cmd_rep_check(args, out: Emitter) -> int:
    check_rank(args.n)
    ok = True
    for lam in _weights_from_args(args):
        ctx = _ctx(args, lam, need_dominant=False)
        failures = homomorphism_failures(ctx)
        size = len(basis(ctx.n, ctx.parity))
        mismatched = [str(e) for e in basis(ctx.n, ctx.parity) if build_op(ctx, e) != build_op_inductive(ctx, e)]
        highest = check_highest_weight(ctx)
        passed = not failures and not mismatched and highest
        ok &= passed
        out.emit(
            {
                "lambda": lam.as_strings(),
                "parity": ctx.parity.value,
                "n": ctx.n,
                "pairs_checked": size * (size - 1) // 2,
                "bracket_failures": [f"{a},{b}" for a, b in failures],
                "oracle_mismatches": mismatched,
                "highest_weight": highest,
                "pass": passed,
            }
        )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_basis_dim(args, out: Emitter) -> int:
    check_rank(args.n)
    ok = True
    for lam in _weights_from_args(args):
        ctx = _ctx(args, lam, need_dominant=True)
        if args.r is None:
            words = list(enumerate_S(ctx, reading=args.reading))
            formula = weyl_dim(ctx.n + 1, ctx.mu, _kind(ctx.parity))
        else:
            words = graded_component(ctx, args.r, reading=args.reading)
            formula = graded_dim_formula(ctx, args.r)
        dim = span_dim(words, ctx)
        record = {
            "lambda": lam.as_strings(),
            "parity": ctx.parity.value,
            "n": ctx.n,
            "r": args.r,
            "reading": args.reading,
            "count": len(words),
            "span_dim": dim,
            "formula_dim": formula,
        }
        if args.oracle:
            record["module_dim"] = _oracle_dim(ctx, args.r)
        passed = dim == formula and record.get("module_dim", dim) == dim
        record["pass"] = passed
        ok &= passed
        out.emit(record)
    return EXIT_OK if ok else EXIT_FAIL


def _oracle_dim(ctx: RepContext, r: Optional[int]) -> int:
    vectors = module_basis(ctx)
    if r is None:
        return len(vectors)
    # the module is graded by row-n degree, so its degree-r piece is spanned by the degree-r parts
    n = ctx.n
    parts = []
    for p in vectors:
        terms = {m: c for m, c in p.terms.items() if sum(e for (i, _), e in m if i == n) == r}
        parts.append(Poly(terms))
    return rank_of(parts)


def cmd_singular_list(args, out: Emitter) -> int:
    check_rank(args.n)
    ok = True
    for lam in _weights_from_args(args):
        ctx = _ctx(args, lam, need_dominant=True)
        for spec in enumerate_B(ctx, args.r):
            pattern = to_pattern(spec, ctx)
            verified = verify_singular(spec, ctx) if args.verify else None
            if verified is False:
                ok = False
            out.emit(
                {
                    "lambda": lam.as_strings(),
                    "gamma": spec.as_dict(),
                    "leading_monomial": monomial_str(leading_monomial(spec)),
                    "weight": spec_weight(spec, ctx).as_strings(),
                    "kappa": [str(Weight([x])[0]) for x in pattern.kappa],
                    "nu": [str(Weight([x])[0]) for x in pattern.nu],
                    "degree": spec_degree(spec),
                    "verified": verified,
                }
            )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_branch_table(args, out: Emitter) -> int:
    check_rank(args.n)
    ok = True
    for lam in _weights_from_args(args):
        ctx = _ctx(args, lam, need_dominant=True)
        rows = branching_table(ctx)
        total = 0
        for nu, mult, dim in rows:
            total += mult * dim
            out.emit({"lambda": lam.as_strings(), "nu": nu.as_strings(), "multiplicity": mult, "dim": dim})
        big = weyl_dim(ctx.n + 1, ctx.mu, _kind(ctx.parity))
        passed = total == big
        ok &= passed
        out.emit({"lambda": lam.as_strings(), "rows": len(rows), "sum": total, "weyl_dim": big, "pass": passed})
    return EXIT_OK if ok else EXIT_FAIL


def _identity_params(name: str, args, lam: Optional[Weight] = None, n: Optional[int] = None, k: Optional[int] = None, r: Optional[int] = None) -> Dict[str, Any]:
    n = args.n if n is None else n
    if name in ("macdonald-odd", "macdonald-even", "graded"):
        if lam is None:
            raise OrthorepError(f"{name} needs --lambda")
        params = {"n": n, "lam": [v.to_fraction() for v in lam]}
        if name == "graded":
            params["parity"] = args.parity
        return params
    if name in ("steinberg-odd", "steinberg-even"):
        return {"n": n, "k": args.k if k is None else k}
    if name == "steinberg-dims":
        return {"n": n, "k": args.k if k is None else k, "parity": args.parity}
    if name == "decomposition":
        mu = args.mu if lam is None else lam
        if mu is None:
            raise OrthorepError("decomposition needs --mu")
        return {"n": n, "mu": [v.to_fraction() for v in mu], "r": args.r if r is None else r, "parity": args.parity}
    raise OrthorepError(f"unknown identity {name!r}")


def _emit_report(out: Emitter, rep) -> None:
    out.emit(rep.as_dict())


def cmd_identity(args, out: Emitter) -> int:
    name = args.name
    if name == "macdonald":
        name = f"macdonald-{parse_parity(args.parity).value}"
    params = _identity_params(name, args, lam=args.lambda_)
    rep = IDENTITIES[name](**params)
    _emit_report(out, rep)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_sweep(args, out: Emitter) -> int:
    name = args.name
    if name == "macdonald":
        name = f"macdonald-{parse_parity(args.parity).value}"
    grid: List[Dict[str, Any]] = []
    ns = args.n_range or [args.n]
    for n in ns:
        check_rank(n)
    if name in ("steinberg-odd", "steinberg-even", "steinberg-dims"):
        for n in ns:
            for k in args.k_range or [args.k]:
                grid.append(_identity_params(name, args, n=n, k=k))
    else:
        rng = random.Random(args.seed)
        count = args.random_weights or 1
        max_top = Fraction(args.max_top) if args.max_top is not None else None
        for n in ns:
            for _ in range(count):
                if name == "decomposition":
                    lam = Weight(random_dominant(rng, n - 1, args.parity, max_top=max_top))
                    for r in args.r_range or [args.r]:
                        grid.append(_identity_params(name, args, lam=lam, n=n, r=r))
                else:
                    lam = Weight(random_dominant(rng, n, args.parity, max_top=max_top))
                    grid.append(_identity_params(name, args, lam=lam, n=n))
    reports = sweep(name, grid, workers=args.workers)
    for rep in reports:
        _emit_report(out, rep)
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} cells pass", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


def _common(p: argparse.ArgumentParser, weights: bool = True) -> None:
    p.add_argument("--n", type=int, default=1, help="rank parameter: o(2n+3) or o(2n+2)")
    p.add_argument("--parity", choices=["odd", "even"], default="odd")
    if weights:
        p.add_argument("--lambda", dest="lambda_", type=_weight_arg, help="comma-separated, e.g. 1/2,3/2")
        p.add_argument("--random-weights", type=int, default=0, help="draw this many seeded dominant weights")
        p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["json", "csv", "text"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthorep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    rep = sub.add_parser("rep").add_subparsers(dest="action", required=True)
    p = rep.add_parser("check", help="bracket, oracle and highest-weight checks")
    _common(p)
    p.set_defaults(func=cmd_rep_check)

    bas = sub.add_parser("basis").add_subparsers(dest="action", required=True)
    p = bas.add_parser("dim", help="rank of the spanning set against the Weyl dimension")
    _common(p)
    p.add_argument("--r", type=int, default=None, help="restrict to one graded degree")
    p.add_argument("--reading", choices=["corrected", "literal"], default="corrected")
    p.add_argument("--oracle", action="store_true", help="also compute the module by closure")
    p.set_defaults(func=cmd_basis_dim)

    sing = sub.add_parser("singular").add_subparsers(dest="action", required=True)
    p = sing.add_parser("list", help="one singular product per leading monomial")
    _common(p)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--verify", action="store_true", help="apply the subalgebra raising operators")
    p.set_defaults(func=cmd_singular_list)

    br = sub.add_parser("branch").add_subparsers(dest="action", required=True)
    p = br.add_parser("table", help="restriction multiplicities and the dimension sum")
    _common(p)
    p.set_defaults(func=cmd_branch_table)

    names = sorted(IDENTITIES) + ["macdonald"]
    p = sub.add_parser("identity", help="evaluate one identity")
    p.add_argument("name", choices=names)
    _common(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--mu", type=_weight_arg, default=None, help="subalgebra weight for the decomposition identity")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("sweep", help="evaluate one identity over a grid")
    p.add_argument("name", choices=names)
    _common(p)
    p.add_argument("--n-range", type=_range_arg, default=None, help="e.g. 1..6")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--k-range", type=_range_arg, default=None)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--r-range", type=_range_arg, default=None)
    p.add_argument("--max-top", default=None, help="upper bound on mu_{n+1} for random weights")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Emitter(args.output)
    try:
        return args.func(args, out)
    except SizeGuard as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OrthorepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
