"""Command-line front end: expand, path, oracle, verify."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from multiprocessing import Pool

from . import llt
from .paths import (
    WordError,
    count_paths_reference,
    iter_paths,
    parse_word,
    render_word,
    semilength,
)
from .dyckalgebra import eval_word
from .qpoly import render_qpoly
from .rewrite import e_positivity_report, expand_word
from .symfunc import GradedSym, e_mu_in_p


def _partition_key(mu) -> str:
    return json.dumps(list(mu))


def _coeff_vector_json(vec: tuple[Fraction, ...]) -> list:
    return [int(c) if c.denominator == 1 else str(c) for c in vec]


def _sorted_partitions(expansion):
    return sorted(expansion, reverse=True)


def _expansion_lines(expansion) -> list[str]:
    if not expansion:
        return ["  0"]
    return [
        f"  e{list(mu)}: {render_qpoly(expansion[mu])}"
        for mu in _sorted_partitions(expansion)
    ]


def cmd_expand(args) -> int:
    if (args.word is None) == (args.strips is None):
        print("expand: give exactly one of --word or --strips", file=sys.stderr)
        return 2
    if args.word is not None:
        word = parse_word(args.word)
        strips = None
    else:
        strips = llt.parse_strips(args.strips)
        word = llt.to_schroeder_word(strips)
    expansion = expand_word(word)
    report = e_positivity_report(expansion)
    n = semilength(word)
    if args.json:
        doc = {
            "word": render_word(word),
            "n": n,
            "e": {_partition_key(mu): render_qpoly(c) for mu, c in report["e"].items()},
            "e_at_q_plus_1": {
                _partition_key(mu): render_qpoly(c)
                for mu, c in report["e_at_q_plus_1"].items()
            },
            "qminus1": {
                _partition_key(mu): _coeff_vector_json(v)
                for mu, v in report["qminus1"].items()
            },
            "e_positive": report["e_positive"],
        }
        if strips is not None:
            doc["strips"] = llt.render_strips(strips)
        print(json.dumps(doc, indent=2))
        return 0
    if strips is not None:
        print(f"strips: {llt.render_strips(strips)}")
    print(f"word: {render_word(word)}")
    print(f"e-expansion (n = {n}):")
    print("\n".join(_expansion_lines(report["e"])))
    print("at q+1:")
    print("\n".join(_expansion_lines(report["e_at_q_plus_1"])))
    print("(q-1)-basis coefficients:")
    for mu in _sorted_partitions(report["qminus1"]):
        print(f"  e{list(mu)}: {_coeff_vector_json(report['qminus1'][mu])}")
    print(f"e-positive at q+1: {'yes' if report['e_positive'] else 'NO'}")
    return 0


def cmd_path(args) -> int:
    strips = llt.parse_strips(args.strips)
    word = llt.to_schroeder_word(strips)
    area, crosses = llt.area_and_crosses(strips)
    cross_pairs = sorted((p, r) for r, p in crosses.items())
    if args.json:
        print(
            json.dumps(
                {
                    "strips": llt.render_strips(strips),
                    "word": render_word(word, compact=False),
                    "compact": render_word(word),
                    "area": list(area),
                    "crosses": [list(c) for c in cross_pairs],
                },
                indent=2,
            )
        )
        return 0
    print(f"strips: {llt.render_strips(strips)}")
    print(f"word: {render_word(word, compact=False)}")
    print(f"compact: {render_word(word)}")
    print(f"area: {area}")
    print(f"crosses: {len(cross_pairs)} {cross_pairs}")
    return 0


def _xpoly_json(poly) -> dict:
    return {
        json.dumps(list(e)): render_qpoly(c)
        for e, c in sorted(poly.items(), reverse=True)
    }


def _xpoly_lines(poly) -> list[str]:
    if not poly:
        return ["  0"]
    lines = []
    for e, c in sorted(poly.items(), reverse=True):
        mono = "*".join(
            f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}" for i, p in enumerate(e) if p
        )
        lines.append(f"  {mono or '1'}: {render_qpoly(c)}")
    return lines


def cmd_oracle(args) -> int:
    strips = llt.parse_strips(args.strips)
    nvars = args.nvars if args.nvars is not None else max(llt.cell_count(strips), 1)
    tableau_side = llt.ssyt_generating_function(strips, nvars)
    operator_side = llt.llt_in_vars(strips, nvars)
    match = tableau_side == operator_side
    if args.json:
        print(
            json.dumps(
                {
                    "strips": llt.render_strips(strips),
                    "nvars": nvars,
                    "tableau_side": _xpoly_json(tableau_side),
                    "operator_side": _xpoly_json(operator_side),
                    "match": match,
                },
                indent=2,
            )
        )
        return 0 if match else 1
    print(f"strips: {llt.render_strips(strips)}")
    print(f"variables: {nvars}")
    print("tableau sum:")
    print("\n".join(_xpoly_lines(tableau_side)))
    print("operator expansion:")
    print("\n".join(_xpoly_lines(operator_side)))
    print(f"match: {'yes' if match else 'NO'}")
    return 0 if match else 1


def _verify_one(word):
    """All three checks for one path word; returns (compact word, flags)."""
    n = max(semilength(word), 1)
    expansion = expand_word(word)
    in_p = GradedSym.zero(n)
    for mu, c in expansion.items():
        in_p = in_p + e_mu_in_p(mu, n).scale(c)
    agrees = in_p == eval_word(word, n)
    rebased_ok = all(
        all(x >= 0 and x.denominator == 1 for x in c.rebase_qminus1())
        for c in expansion.values()
    )
    positive = all(c.shift_plus_one().is_nonneg() for c in expansion.values())
    return render_word(word), agrees, rebased_ok, positive


def cmd_verify(args) -> int:
    if args.max_semilength < 1:
        print("verify: --max-semilength must be >= 1", file=sys.stderr)
        return 2
    t0 = time.time()
    all_ok = True
    total = 0
    for n in range(1, args.max_semilength + 1):
        words = list(iter_paths(n))
        expected = count_paths_reference(n)
        if len(words) != expected:
            print(f"semilength {n}: enumerator gave {len(words)} paths, reference recurrence {expected}")
            all_ok = False
        if args.jobs > 1:
            with Pool(args.jobs) as pool:
                results = pool.map(_verify_one, words, chunksize=8)
        else:
            results = [_verify_one(w) for w in words]
        results.sort()
        failures = [r for r in results if not all(r[1:])]
        for word, agrees, rebased_ok, positive in failures:
            flags = []
            if not agrees:
                flags.append("rewrite/evaluation mismatch")
            if not rebased_ok:
                flags.append("negative or fractional (q-1)-coefficient")
            if not positive:
                flags.append("not e-positive at q+1")
            print(f"FAIL {word}: {', '.join(flags)}")
        status = "ok" if not failures else f"{len(failures)} FAILURES"
        print(f"semilength {n}: {len(words)} paths, {len(words) - len(failures)}/{len(words)} pass ({status})")
        total += len(words)
        all_ok = all_ok and not failures
    dt = time.time() - t0
    print(f"checked {total} paths up to semilength {args.max_semilength} in {dt:.1f}s: "
          + ("all checks pass" if all_ok else "FAILURES FOUND"))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vsllt",
        description="Exact e-expansion and positivity certification for vertical strip LLT polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="e-expansion and positivity certificate")
    p_expand.add_argument("--word", help="path word, compact (-0-0++) or comma-separated")
    p_expand.add_argument("--strips", help="strip tuple, 'd:h;d:h;...'")
    p_expand.add_argument("--json", action="store_true")
    p_expand.set_defaults(func=cmd_expand)

    p_path = sub.add_parser("path", help="Schröder path of a strip tuple")
    p_path.add_argument("--strips", required=True)
    p_path.add_argument("--json", action="store_true")
    p_path.set_defaults(func=cmd_path)

    p_oracle = sub.add_parser("oracle", help="tableau sum vs operator expansion")
    p_oracle.add_argument("--strips", required=True)
    p_oracle.add_argument("--nvars", type=int)
    p_oracle.add_argument("--json", action="store_true")
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="exhaustive checks over all paths")
    p_verify.add_argument("--max-semilength", type=int, required=True)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def _glue_dash_values(argv: list[str]) -> list[str]:
    """Join '--word -0-0++' into '--word=-0-0++' so argparse does not read
    the leading-dash value as an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--word", "--strips") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_glue_dash_values(list(argv)))
    try:
        return args.func(args)
    except (WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
