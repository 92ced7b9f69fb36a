"""Command-line interface.

Subcommands: resolve, verify, polarize, poset, compare, paper-suite.
Exit codes: 0 success, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .ek import ek_complex
from .ideals import random_borel_ideal, read_ideal
from .modified import modified_complex
from .polarization import bpol_ideal, sigma_ideal, stairs_diagram
from .posets import build_gamma, poset_isomorphic, poset_to_dot
from .shelling import ball_check, is_cw_poset, verify_el_all
from .suite import named_ideal, run_suite
from .topology import frame_complex, homology_ranks, strand_exactness
from .verification import (
    VerificationError,
    check_d2,
    check_minimality,
    check_multidegrees,
)


def _add_input_flags(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", metavar="FILE", help="ideal file to read")
    src.add_argument("--named", metavar="NAME", help="one of the bundled example ideals")
    src.add_argument(
        "--random-borel",
        action="store_true",
        help="generate a random Borel fixed ideal instead of reading a file",
    )
    p.add_argument("--seed", type=int, default=0, help="random generator seed")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--max-gens", type=int, default=12)


def _add_common_flags(p, kinds=("ek", "modified", "both")):
    p.add_argument("--kind", choices=kinds, default="both")
    p.add_argument("--d", type=int, default=None, help="column bound override")
    p.add_argument("--max-facets", type=int, default=20,
                   help="facet budget for exhaustive shelling search")
    p.add_argument("--export", choices=("json", "dot", "diagram"), default=None)
    p.add_argument("--out", metavar="DIR", default=None, help="output directory")


def _load_ideal(args):
    if args.ideal:
        return read_ideal(args.ideal)
    if getattr(args, "named", None):
        return named_ideal(args.named)
    rng = random.Random(args.seed)
    return random_borel_ideal(
        rng, max_n=args.max_n, max_deg=args.max_deg, max_gens=args.max_gens
    )


def _kinds(args):
    return ("ek", "modified") if args.kind == "both" else (args.kind,)


def _complex_for(kind, ideal, d):
    return ek_complex(ideal) if kind == "ek" else modified_complex(ideal, d)


def _write_or_print(args, name, text):
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text, encoding="utf-8")
        print(f"wrote {out / name}")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_resolve(args) -> int:
    ideal = _load_ideal(args)
    for kind in _kinds(args):
        cplx = _complex_for(kind, ideal, args.d)
        print(f"{kind}: ranks {list(cplx.ranks)}")
        if args.export == "json":
            _write_or_print(args, f"{kind}.complex.json", _json_dump(cplx.to_json_dict()))
        elif args.export == "dot":
            _write_or_print(args, f"{kind}.hasse.dot", poset_to_dot(build_gamma(kind, ideal, args.d)))
    return 0


def cmd_verify(args) -> int:
    ideal = _load_ideal(args)
    bundle = {"ideal": [str(m) for m in ideal.gens], "n": ideal.n, "kinds": {}}
    failed = False
    for kind in _kinds(args):
        cplx = _complex_for(kind, ideal, args.d)
        checks = {}
        try:
            check_d2(cplx)
            check_minimality(cplx)
            check_multidegrees(cplx)
            checks["d2"] = checks["minimal"] = checks["multidegree"] = True
        except VerificationError as exc:
            checks["structure_error"] = str(exc)
            failed = True
        if kind == "ek":
            gens = list(ideal.gens)
        else:
            gens = bpol_ideal(ideal)
        strands = strand_exactness(cplx, gens, primes=(2, 3))
        checks["strands"] = {
            "ok": strands.ok,
            "checked": strands.strands_checked,
            "first_failure": strands.first_failure(),
        }
        failed = failed or not strands.ok
        poset = build_gamma(kind, ideal, args.d)
        if args.check in ("el", "cw", "ball", "all"):
            checks["thin"] = poset.is_thin()
            failed = failed or not checks["thin"]
        if args.check in ("el", "all"):
            reports = verify_el_all(kind, poset.dual(), ideal)
            bad = [r for r in reports if not r.passed]
            checks["el"] = {"intervals": len(reports), "failures": len(bad)}
            failed = failed or bool(bad)
        if args.check in ("cw", "ball", "all"):
            cw = is_cw_poset(poset, kind, ideal)
            checks["cw"] = cw[0]
            failed = failed or not cw[0]
            if args.check in ("ball", "all"):
                verdict = ball_check(
                    poset, kind, ideal, facet_budget=args.max_facets, cw_result=cw
                )
                checks["ball"] = {
                    "verdict": verdict.verdict,
                    "cond2": verdict.cond2,
                    "cond3": verdict.cond3,
                    "homology_trivial": verdict.homology_trivial,
                    "detail": verdict.detail,
                }
                if args.expect_ball and verdict.verdict != {
                    "certified": "ball-certified",
                    "refuted": "refuted",
                }[args.expect_ball]:
                    failed = True
        hom = homology_ranks(frame_complex(cplx, augmented=True))
        checks["reduced_homology_trivial"] = all(b == 0 and not t for b, t in hom)
        bundle["kinds"][kind] = checks
    if args.compare_posets:
        iso = poset_isomorphic(
            build_gamma("ek", ideal, args.d), build_gamma("modified", ideal, args.d)
        )
        bundle["posets_isomorphic"] = iso
    print(_json_dump(bundle), end="")
    return 1 if failed else 0


def cmd_polarize(args) -> int:
    ideal = _load_ideal(args)
    pol = bpol_ideal(ideal)
    shifted = sigma_ideal(ideal, args.d)
    print("bpol generators:")
    for b in pol:
        print(f"  {b}")
    print(f"squarefree shift (in {shifted.n} variables):")
    for m in shifted.gens:
        print(f"  {m}")
    if args.diagram or args.export == "diagram":
        from .modified import AdmissiblePairTilde

        blocks = []
        for m in ideal.gens:
            full = AdmissiblePairTilde(tuple(range(1, m.max_var())), m)
            blocks.append(f"{m}:\n{stairs_diagram(full.pairs, full.bimonomial())}")
        _write_or_print(args, "stairs.txt", "\n\n".join(blocks) + "\n")
    return 0


def cmd_poset(args) -> int:
    ideal = _load_ideal(args)
    for kind in _kinds(args):
        poset = build_gamma(kind, ideal, args.d)
        print(f"{kind}: {len(poset)} elements, {len(poset.covers)} covers")
        if args.export == "dot" or args.export is None:
            _write_or_print(args, f"{kind}.hasse.dot", poset_to_dot(poset, name=kind))
    return 0


def cmd_compare(args) -> int:
    ideal = _load_ideal(args)
    g_ek = build_gamma("ek", ideal, args.d)
    g_mod = build_gamma("modified", ideal, args.d)
    iso = poset_isomorphic(g_ek, g_mod)
    print(f"cell posets isomorphic: {iso}")
    if args.expect:
        want = args.expect == "isomorphic"
        return 0 if iso == want else 1
    return 0


def cmd_paper_suite(args) -> int:
    def progress(done, total):
        if args.progress and (done % 25 == 0 or done == total):
            print(f"  ... {done}/{total}", file=sys.stderr)

    results = run_suite(
        random_count=args.random_count,
        cm_count=args.cm_count,
        seed=args.seed,
        progress=progress if args.progress else None,
    )
    width = max(len(r.description) for r in results)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        all_ok = all_ok and r.passed
        print(f"  {r.number}  {r.description:<{width}}  {status}  {r.detail}")
    print("all criteria passed" if all_ok else "SOME CRITERIA FAILED")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekcells",
        description=(
            "Construct Eliahou-Kervaire type resolutions of stable/Borel fixed "
            "monomial ideals and certify the structure of their cell posets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", help="build a resolution and export it")
    _add_input_flags(p)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("verify", help="run structural checks and certifications")
    _add_input_flags(p)
    _add_common_flags(p)
    p.add_argument("--check", choices=("el", "cw", "ball", "all"), default="all")
    p.add_argument("--compare-posets", action="store_true")
    p.add_argument("--expect-ball", choices=("certified", "refuted"), default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("polarize", help="print bpol(I) and the squarefree shift")
    _add_input_flags(p)
    _add_common_flags(p, kinds=("modified",))
    p.add_argument("--diagram", action="store_true", help="print stairs diagrams")
    p.set_defaults(fn=cmd_polarize)

    p = sub.add_parser("poset", help="build a cell poset and export its Hasse diagram")
    _add_input_flags(p)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("compare", help="compare the classical and modified cell posets")
    _add_input_flags(p)
    _add_common_flags(p)
    p.add_argument("--expect", choices=("isomorphic", "different"), default=None)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("paper-suite", help="run the bundled acceptance suite")
    p.add_argument("--random-count", type=int, default=200)
    p.add_argument("--cm-count", type=int, default=50)
    p.add_argument("--seed", type=int, default=20260810)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(fn=cmd_paper_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
