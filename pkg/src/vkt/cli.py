"""Command-line front end.

Verbs: parse, invariant, transform, mutate, fuzz, family, report.
Input codes are given inline, as ``@path``, as ``-`` for stdin, or as a
shipped fixture name (K1, MK1, K2, MK2, VT2, VT3, F8).  Exit status is
0 on success, 1 on a domain error (including fuzz violations), 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gauss import (
    GaussCode,
    GaussError,
    Parity,
    canonical_form,
    odd_writhe,
    parity,
    parse_gauss,
    validate,
)
from .invariants import (
    LaurentPoly,
    affine_index_polynomial,
    definitions_agree,
    odd_wriggle_polynomial,
    vassiliev,
    wriggle_polynomial,
)
from .labeling import label_arcs, weight_table
from .mutation import (
    BlockPair,
    mutate_reflection,
    mutate_rotation,
    mutation_detection_report,
)
from .transform import (
    RandomWalkConfig,
    connected_sum,
    crossing_change,
    family,
    mirror,
    r1_delete,
    r1_insert,
    r2_delete,
    r2_insert,
    r3_apply,
    r3_sites,
    R3Site,
    random_move_walk,
    replay,
    reverse,
    twist_replace,
)
from . import fixtures


def _read_code(spec_text: str) -> GaussCode:
    if spec_text == "-":
        return parse_gauss(sys.stdin.read())
    if spec_text.startswith("@"):
        with open(spec_text[1:]) as fh:
            return parse_gauss(fh.read())
    if spec_text.upper() in fixtures.KNOT_FIXTURES:
        return fixtures.load_fixture(spec_text)
    return parse_gauss(spec_text)


def _emit(data: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_json(p: LaurentPoly) -> dict:
    return {str(e): c for e, c in p.coeffs.items()}


def _cmd_parse(args) -> int:
    code = _read_code(args.code)
    report = validate(code)
    data = {
        "text": code.text,
        "valid": report.ok,
        "violations": list(report.violations),
    }
    lines = [f"code: {code.text}" if code.text else "code: (empty)"]
    if report.ok:
        canon = canonical_form(code)
        data["canonical"] = canon.text
        lines.append(f"canonical: {canon.text}" if canon.text else "canonical: (empty)")
        lines.append("valid: yes")
    else:
        lines.append("valid: no")
        lines.extend(f"violation: {v}" for v in report.violations)
    _emit(data, lines, args.format)
    return 0 if report.ok else 1


def _cmd_invariant(args) -> int:
    code = _read_code(args.code)
    data: dict = {}
    lines: list[str] = []

    def add(key: str, json_value, text_value: str) -> None:
        data[key] = json_value
        lines.append(f"{key}: {text_value}")

    if args.poly:
        poly = {
            "wriggle": wriggle_polynomial,
            "affine": affine_index_polynomial,
            "odd-wriggle": odd_wriggle_polynomial,
        }[args.poly](code)
        add(args.poly, _poly_json(poly), poly.to_text())
    if args.odd_writhe:
        add("odd-writhe", odd_writhe(code), str(odd_writhe(code)))
    if args.vassiliev is not None:
        value = vassiliev(code, args.vassiliev)
        add("vassiliev", {"n": args.vassiliev, "value": str(value)}, str(value))
    if args.weights:
        table = weight_table(code)
        labels = label_arcs(code, 0)
        data["weights"] = table
        data["labels"] = list(labels.labels)
        lines.append("weights: " + " ".join(f"{c}={w}" for c, w in table.items()))
        lines.append("labels: " + " ".join(str(v) for v in labels.labels))
    if args.parity:
        par = {c: parity(code, c).value for c in code.crossings()}
        add("parity", par, " ".join(f"{c}={p}" for c, p in par.items()))
    if not data:
        print("invariant: nothing requested (use --poly/--odd-writhe/...)",
              file=sys.stderr)
        return 2
    if args.cross_check:
        agreement = definitions_agree(code)
        data["cross-check"] = agreement.agree
        lines.append(f"cross-check: {'ok' if agreement.agree else agreement.message}")
        if not agreement.agree:
            _emit(data, lines, args.format)
            return 1
    if args.format == "text" and len(lines) == 1:
        # a single requested value prints bare
        print(lines[0].split(": ", 1)[1])
    else:
        _emit(data, lines, args.format)
    return 0


def _cmd_transform(args) -> int:
    code = _read_code(args.code)
    if args.mirror:
        out = mirror(code)
    elif args.reverse:
        out = reverse(code)
    elif args.connsum:
        other = _read_code(args.connsum)
        out = connected_sum(code, other, args.cut_a, args.cut_b)
    elif args.crossing_change:
        out = crossing_change(code, args.crossing_change)
    elif args.twist:
        out = twist_replace(code, args.twist)
    elif args.r1_insert:
        pos, sign, order = args.r1_insert.split(",")
        out = r1_insert(code, int(pos), int(sign), order)
    elif args.r1_delete:
        out = r1_delete(code, args.r1_delete)
    elif args.r2_insert:
        pos_a, pos_b, sign, pattern = args.r2_insert.split(",")
        out = r2_insert(code, int(pos_a), int(pos_b), int(sign), pattern)
    elif args.r2_delete:
        c1, c2 = args.r2_delete.split(",")
        out = r2_delete(code, c1, c2)
    elif args.r3 is not None:
        starts = tuple(int(s) for s in args.r3.split(","))
        out = r3_apply(code, R3Site(starts))
    elif args.r3_sites:
        sites = r3_sites(code)
        data = {"sites": [list(s.pair_starts) for s in sites]}
        lines = [("sites: " + "; ".join(",".join(map(str, s.pair_starts))
                                        for s in sites)) if sites else "sites:"]
        _emit(data, lines, args.format)
        return 0
    else:
        print("transform: no operation requested", file=sys.stderr)
        return 2
    poly = wriggle_polynomial(out)
    _emit({"code": out.text, "polynomial": _poly_json(poly)},
          [out.text if out.text else "(empty)"], args.format)
    return 0


def _cmd_mutate(args) -> int:
    code = _read_code(args.code)
    pair = BlockPair.from_text(args.blocks, len(code))
    if args.report:
        rep = mutation_detection_report(code, pair)
        data = {
            kind: {
                "before": _poly_json(row.before),
                "after": _poly_json(row.after),
                "detected": row.detected,
            }
            for kind, row in rep.rows.items()
        }
        lines = [
            f"{kind}: detected={str(row.detected).lower()}"
            f" before={row.before.to_text()} after={row.after.to_text()}"
            for kind, row in rep.rows.items()
        ]
        _emit(data, lines, args.format)
        return 0
    op = mutate_reflection if args.kind == "reflection" else mutate_rotation
    out = op(code, pair)
    poly = affine_index_polynomial(out)
    _emit({"code": out.text, "polynomial": _poly_json(poly)},
          [out.text if out.text else "(empty)"], args.format)
    return 0


def _cmd_fuzz(args) -> int:
    code = _read_code(args.code)
    if args.replay:
        with open(args.replay) as fh:
            log = fh.read().splitlines()
        out = replay(code, log)
        _emit({"code": out.text}, [out.text if out.text else "(empty)"], args.format)
        return 0
    reference = (
        wriggle_polynomial(code),
        affine_index_polynomial(code),
        odd_wriggle_polynomial(code),
    )
    for trial in range(args.trials):
        cfg = RandomWalkConfig(steps=args.steps, seed=args.seed + trial,
                               max_crossings=args.max_crossings)
        result = random_move_walk(code, cfg)
        final = (
            wriggle_polynomial(result.code),
            affine_index_polynomial(result.code),
            odd_wriggle_polynomial(result.code),
        )
        if final != reference:
            print(f"violation at trial {trial} (seed {args.seed + trial});"
                  " replay log follows", file=sys.stderr)
            for line in result.log:
                print(line, file=sys.stderr)
            return 1
    _emit(
        {"trials": args.trials, "steps": args.steps, "seed": args.seed, "ok": True},
        [f"trials={args.trials} steps={args.steps} seed={args.seed}: ok"],
        args.format,
    )
    return 0


def _cmd_family(args) -> int:
    code = family(args.base, args.n)
    poly = wriggle_polynomial(code)
    _emit(
        {"base": args.base, "n": args.n, "code": code.text,
         "polynomial": _poly_json(poly)},
        [f"code: {code.text}", f"polynomial: {poly.to_text()}"],
        args.format,
    )
    return 0


def _cmd_report(args) -> int:
    rows = []
    for base_pair, start in ((("K1", "MK1"), 1), (("K2", "MK2"), 2)):
        for n in range(start, args.max_n + 1, 2):
            kn = wriggle_polynomial(family(base_pair[0], n))
            mkn = wriggle_polynomial(family(base_pair[1], n))
            rows.append({
                "n": n,
                "family": base_pair[0],
                "Kn": _poly_json(kn),
                "MKn": _poly_json(mkn),
                "Kn_text": kn.to_text(),
                "MKn_text": mkn.to_text(),
                "detected": kn != mkn,
            })
    lines = [
        f"n={row['n']:<3d} [{row['family']}]  Kn: {row['Kn_text']:34s}"
        f" MKn: {row['MKn_text']:36s} detected={str(row['detected']).lower()}"
        for row in rows
    ]
    _emit({"rows": rows}, lines, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vkt",
        description="Virtual knot invariants on signed Gauss codes, exactly.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, with_code=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_code:
            p.add_argument("code", help="Gauss code text, @file, -, or fixture name")

    p = sub.add_parser("parse", help="echo canonical form and validation report")
    add_common(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("invariant", help="compute polynomial and numeric invariants")
    p.add_argument("--poly", choices=("affine", "wriggle", "odd-wriggle"))
    p.add_argument("--odd-writhe", action="store_true")
    p.add_argument("--vassiliev", type=int, metavar="N")
    p.add_argument("--weights", action="store_true")
    p.add_argument("--parity", action="store_true")
    p.add_argument("--cross-check", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("transform", help="apply a rewrite and print the result")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mirror", action="store_true")
    g.add_argument("--reverse", action="store_true")
    g.add_argument("--connsum", metavar="CODE2")
    g.add_argument("--crossing-change", metavar="C")
    g.add_argument("--twist", metavar="C")
    g.add_argument("--r1-insert", metavar="POS,SIGN,ORDER")
    g.add_argument("--r1-delete", metavar="C")
    g.add_argument("--r2-insert", metavar="A,B,SIGN,PATTERN")
    g.add_argument("--r2-delete", metavar="C1,C2")
    g.add_argument("--r3", metavar="I,J,K")
    g.add_argument("--r3-sites", action="store_true")
    p.add_argument("--cut-a", type=int, default=0)
    p.add_argument("--cut-b", type=int, default=0)
    add_common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("mutate", help="Conway mutation on a designated tangle")
    p.add_argument("--blocks", required=True, metavar="a..b,c..d")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--kind", choices=("reflection", "rotation"))
    g.add_argument("--report", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("fuzz", help="seeded move walks checking invariance")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-crossings", type=int, default=24)
    p.add_argument("--replay", metavar="LOGFILE")
    add_common(p)
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("family", help="iterated twist families")
    p.add_argument("--base", required=True, choices=("K1", "MK1", "K2", "MK2"))
    p.add_argument("--n", required=True, type=int)
    add_common(p, with_code=False)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("report", help="regenerate the twist-family tables")
    p.add_argument("--max-n", type=int, default=15)
    add_common(p, with_code=False)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GaussError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
