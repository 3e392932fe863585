"""Command-line interface: one verb per question the library answers.

validate  is (p, m, n, k) a valid parameter set?
zeta      closed-form subgroup count vector for one group
classify  valid k residues and their iso / zeta / lattice partitions
oracle    brute-force subgroup enumeration for one group
compare   isomorphic? zeta-equal? lattice-isomorphic? for two k values
sweep     cross-validate formulas against the oracle over a size range

Exit codes: 0 success, 2 invalid arguments, 3 resource limit hit,
4 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify as run_classify
from .classify import compare as run_compare
from .classify import sweep_verify as run_sweep
from .zeta import coefficients
from .errors import InvalidParameterError, ResourceLimitError
from .groups import GroupParams, is_valid, valid_k_set
from .lattice import build_lattice
from .oracle import OracleLimits, build_group, enumerate_subgroups

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metazeta",
        description="Subgroup-count zeta functions of split metacyclic "
                    "p-groups: closed formulas, classification, and a "
                    "brute-force cross-check oracle.")
    parser.add_argument("--max-order", type=int, default=None, metavar="N",
                        help="largest group order the oracle will touch "
                             "(overrides METAZETA_MAX_ORDER)")
    parser.add_argument("--max-subgroups", type=int, default=None, metavar="N",
                        help="subgroup-count cap for enumeration "
                             "(overrides METAZETA_MAX_SUBGROUPS)")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON instead of tables")
    parser.add_argument("--csv", action="store_true",
                        help="emit CSV (classify: k,iso_rep,zeta_rep,"
                             "lattice_rep rows)")
    sub = parser.add_subparsers(dest="command", required=True)

    def pmnk(sp, with_k=True):
        sp.add_argument("p", type=int)
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)
        if with_k:
            sp.add_argument("k", type=int)

    sp = sub.add_parser("validate", help="check parameter validity")
    pmnk(sp)

    sp = sub.add_parser("zeta", help="closed-form subgroup count vector")
    pmnk(sp)

    sp = sub.add_parser("classify", help="partition valid k residues")
    pmnk(sp, with_k=False)
    sp.add_argument("--lattice", action="store_true",
                    help="also compute lattice-isomorphism classes "
                         "(needs the oracle)")
    sp.add_argument("--verify", action="store_true",
                    help="cross-check the zeta partition against "
                         "explicit coefficient vectors")

    sp = sub.add_parser("oracle", help="brute-force subgroup enumeration")
    pmnk(sp)
    sp.add_argument("--export-lattice", action="store_true",
                    help="also emit the subgroup lattice (DOT, or JSON "
                         "under --json)")

    sp = sub.add_parser("compare", help="compare two parameter values")
    sp.add_argument("p", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k1", type=int)
    sp.add_argument("k2", type=int)

    sp = sub.add_parser("sweep", help="cross-validate formulas vs oracle")
    sp.add_argument("--p", type=int, required=True, dest="prime")
    sp.add_argument("--max-order", type=int, required=True,
                    dest="sweep_max_order")
    sp.add_argument("--no-lattice", action="store_true",
                    help="skip the lattice-lemma check")
    return parser


def _limits(args) -> OracleLimits:
    base = OracleLimits.from_env()
    return OracleLimits(
        max_order=args.max_order or base.max_order,
        max_subgroups=args.max_subgroups or base.max_subgroups)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _counts_table(counts, p) -> str:
    head = [f"p^{t}" for t in range(len(counts))]
    widths = [max(len(h), len(str(c))) for h, c in zip(head, counts)]
    top = "  ".join(h.rjust(w) for h, w in zip(head, widths))
    bot = "  ".join(str(c).rjust(w) for c, w in zip(counts, widths))
    return f"order  {top}\ncount  {bot}"


def _cmd_validate(args) -> int:
    ok = is_valid(GroupParams(args.p, args.m, args.n, args.k))
    if args.json:
        _emit_json({"p": args.p, "m": args.m, "n": args.n, "k": args.k,
                    "valid": ok})
    else:
        verdict = "valid" if ok else "invalid"
        print(f"G({args.p},{args.m},{args.n},{args.k}): {verdict}")
    return EXIT_OK if ok else EXIT_USAGE


def _cmd_zeta(args) -> int:
    params = GroupParams(args.p, args.m, args.n, args.k)
    coeffs = coefficients(params)
    if args.json:
        _emit_json(coeffs.to_json_dict())
    elif args.csv:
        print("order,count")
        for t, c in enumerate(coeffs.counts):
            print(f"{args.p ** t},{c}")
    else:
        print(f"G({args.p},{args.m},{args.n},{args.k})  "
              f"order {params.order}")
        print(_counts_table(coeffs.counts, args.p))
        print(f"total subgroups: {sum(coeffs.counts)}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    report = run_classify(
        args.p, args.m, args.n, with_lattice=args.lattice,
        verify=args.verify, limits=_limits(args))
    if args.json:
        sys.stdout.write(report.to_json())
    elif args.csv:
        print("k,iso_rep,zeta_rep,lattice_rep")
        for k in report.valid_k:
            iso_rep = min(report.iso.block_of(k))
            zeta_rep = min(report.zeta_partition.block_of(k))
            lat = (min(report.lattice.block_of(k))
                   if report.lattice else "")
            print(f"{k},{iso_rep},{zeta_rep},{lat}")
    else:
        print(f"p={args.p} m={args.m} n={args.n}  "
              f"valid k: {list(report.valid_k)}")
        for name, part in (("iso", report.iso),
                           ("zeta", report.zeta_partition),
                           ("lattice", report.lattice)):
            if part is None:
                continue
            blocks = "  ".join("{" + ",".join(map(str, b)) + "}"
                               for b in part.blocks)
            print(f"{name:>8}: {blocks}")
        for check in report.cross_checks:
            print(f"   check: {check.name}: {check.status}"
                  + (f" ({check.detail})" if check.detail else ""))
    if report.failed:
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_oracle(args) -> int:
    limits = _limits(args)
    params = GroupParams(args.p, args.m, args.n, args.k)
    group = build_group(params, limits)
    subs = enumerate_subgroups(group, limits)
    counts = subs.counts_by_power()
    lattice = build_lattice(subs) if args.export_lattice else None
    if args.json:
        payload = subs.to_json_dict()
        if lattice is not None:
            payload["lattice"] = lattice.to_json_dict()
        _emit_json(payload)
    else:
        print(f"{group.label}  order {group.order}  "
              f"subgroups {len(subs)}")
        print(_counts_table(counts, args.p))
        if lattice is not None:
            print(lattice.to_dot())
    return EXIT_OK


def _cmd_compare(args) -> int:
    a = GroupParams(args.p, args.m, args.n, args.k1)
    b = GroupParams(args.p, args.m, args.n, args.k2)
    answers = run_compare(a, b, _limits(args))
    if args.json:
        _emit_json({"p": args.p, "m": args.m, "n": args.n,
                    "k1": args.k1, "k2": args.k2, **answers})
    else:
        def word(flag):
            return "yes" if flag else "no"
        print(f"G({args.p},{args.m},{args.n},{args.k1}) vs "
              f"G({args.p},{args.m},{args.n},{args.k2})")
        print(f"isomorphic:          {word(answers['isomorphic'])}")
        print(f"zeta-equal:          {word(answers['zeta_equal'])}")
        print(f"lattice-isomorphic:  {word(answers['lattice_isomorphic'])}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    summary = run_sweep(
        args.prime, args.sweep_max_order, limits=_limits(args),
        with_lattice=not args.no_lattice)
    if args.json:
        _emit_json(summary.to_json_dict())
    else:
        print(f"sweep p={summary.p} max order {summary.max_order}: "
              f"{summary.groups_checked} groups over cells "
              + " ".join(f"({m},{n})" for m, n in summary.cells))
        for check in summary.checks:
            print(f"  {check.name}: {check.status}"
                  + (f" ({check.detail})" if check.detail else ""))
    return EXIT_VERIFY if summary.failed else EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "zeta": _cmd_zeta,
    "classify": _cmd_classify,
    "oracle": _cmd_oracle,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help; pass both through.
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
