"""Command-line interface.

Subcommands: ``construct`` emits named matroids in the text format,
``minor`` runs minor searches, ``positroid`` checks or enumerates,
``oriented`` analyzes chirotopes from exact matrices, and ``verify`` runs
the paper-claim harness and writes reports (JSON + CSV + PNG overview).

Exit codes: 0 on success, 1 when a verification finds a counterexample,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .core import MatroidError, mask_of, read_matroid, to_text
from .constructions import CATALOG_IDS, catalog, extremal_family, uniform, whirl_like, whirl_like_plus
from .minors import find_catalog_minor, has_minor, has_uniform_line_minor
from .oriented import chirotope_from_matrix, monochromatic_line_minor, ramsey_scan
from .positroid import bonin_check, enumerate_positroids, is_positroid
from . import verify as verify_mod

THREADS_ENV = "POSITROIDS_THREADS"


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="positroids", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named family or catalog matroid")
    c.add_argument("--family", choices=["uniform", "extremal", "whirl"])
    c.add_argument("--catalog", choices=list(CATALOG_IDS))
    c.add_argument("--r", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--plus", action="store_true", help="the whirl variant with one extra point")
    c.add_argument("--out", help="write to a file instead of stdout")

    m = sub.add_parser("minor", help="minor searches against a host matroid file")
    m.add_argument("--host", required=True)
    m.add_argument("--target", help="matroid file to search for as a minor")
    m.add_argument("--uniform-line", type=int, help="test for a U_{2,k} minor")
    m.add_argument("--catalog", action="store_true", help="search the excluded-minor catalog")

    p = sub.add_parser("positroid", help="Bonin check or exhaustive enumeration")
    p.add_argument("--check", help="matroid file to test")
    p.add_argument("--enumerate", type=int, metavar="N")
    p.add_argument("--rank", type=int)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--3connected", dest="three_connected", action="store_true")
    p.add_argument("--no-line-minor", type=int, metavar="K")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--threads", type=int, default=_default_threads())

    o = sub.add_parser("oriented", help="chirotope analysis of an exact matrix")
    o.add_argument("--matrix", required=True, help="CSV of ints or p/q rationals, one row per line")
    o.add_argument("--mono", type=int, metavar="K", help="search a monochromatic rank-2 minor")
    o.add_argument("--polarity", choices=["plus", "minus"], default="plus")
    o.add_argument("--ramsey", type=int, metavar="L", help="run the monochromatic scan report")

    v = sub.add_parser("verify", help="run paper-claim verifications")
    v.add_argument(
        "claim",
        choices=["all", "theorem-main", "excluded-catalog", "prop31", "prop32",
                 "lemma43", "conj61", "oracle"],
    )
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--l", type=int, default=2)
    v.add_argument("--max-n", type=int)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--seed", type=int, default=2024)
    v.add_argument("--threads", type=int, default=_default_threads())
    v.add_argument("--allow-n9", action="store_true", help="unlock the slow n = 9 scan for prop31")
    v.add_argument("--out", help="report path (JSON); CSV, PNG and manifest go next to it")
    v.add_argument("--no-figures", action="store_true")
    return parser


def _cmd_construct(args) -> int:
    if (args.family is None) == (args.catalog is None):
        raise MatroidError("pick exactly one of --family or --catalog")
    if args.catalog:
        m = catalog(args.catalog)
    elif args.family == "uniform":
        if args.r is None or args.n is None:
            raise MatroidError("uniform needs --r and --n")
        m = uniform(args.r, args.n)
    elif args.family == "extremal":
        if args.r is None or args.l is None:
            raise MatroidError("extremal needs --r and --l")
        m = extremal_family(args.r, args.l)
    else:
        if args.r is None or args.l is None:
            raise MatroidError("whirl needs --r and --l")
        m = whirl_like_plus(args.r, args.l) if args.plus else whirl_like(args.r, args.l)
    text = to_text(m)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_minor(args) -> int:
    host = read_matroid(args.host)
    chosen = [x is not None and x is not False for x in (args.target, args.uniform_line, args.catalog)]
    if sum(chosen) != 1:
        raise MatroidError("pick exactly one of --target, --uniform-line, --catalog")
    if args.uniform_line is not None:
        print("yes" if has_uniform_line_minor(host, args.uniform_line) else "none")
        return 0
    if args.catalog:
        found = find_catalog_minor(host)
        if found is None:
            print("none")
        else:
            cid, w = found
            print(f"catalog {cid}")
            _print_witness(w)
        return 0
    target = read_matroid(args.target)
    w = has_minor(host, target)
    if w is None:
        print("none")
    else:
        _print_witness(w)
    return 0


def _print_witness(w) -> None:
    print("contract", " ".join(str(e) for e in sorted(w.contracted)) or "-")
    print("delete", " ".join(str(e) for e in sorted(w.deleted)) or "-")
    print("map", " ".join(f"{a}->{b}" for a, b in sorted(w.iso.items())))


def _cmd_positroid(args) -> int:
    if (args.check is None) == (args.enumerate is None):
        raise MatroidError("pick exactly one of --check or --enumerate")
    if args.check:
        m = read_matroid(args.check)
        if not m.is_connected():
            print("POSITROID" if is_positroid(m) else "NOT_POSITROID")
            print("# disconnected input judged componentwise")
            return 0
        witness = bonin_check(m)
        if witness is None:
            print("NOT_POSITROID")
        else:
            print("POSITROID order " + " ".join(str(e) for e in witness))
        return 0
    result = enumerate_positroids(
        args.enumerate,
        rank=args.rank,
        simple=args.simple,
        connected=args.connected,
        three_connected=args.three_connected,
        no_uniform_line_minor=args.no_line_minor,
        threads=args.threads,
    )
    print(f"# scanned {result.scanned} decorated permutations; "
          f"{result.matched} matched filters; {len(result.classes)} classes")
    if not args.count_only:
        for m in result.classes:
            sys.stdout.write(to_text(m) + "\n")
    return 0


def _parse_matrix(path):
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append([Fraction(tok.strip()) for tok in line.split(",")])
            except (ValueError, ZeroDivisionError):
                raise MatroidError(f"{path}:{lineno}: cannot parse matrix row {raw!r}") from None
    if not rows:
        raise MatroidError(f"{path}: empty matrix")
    return rows


def _cmd_oriented(args) -> int:
    chi = chirotope_from_matrix(_parse_matrix(args.matrix))
    if (args.mono is None) == (args.ramsey is None):
        raise MatroidError("pick exactly one of --mono or --ramsey")
    if args.mono is not None:
        polarity = 1 if args.polarity == "plus" else -1
        found = monochromatic_line_minor(chi, args.mono, polarity)
        if found is None:
            print("none")
        else:
            flat, ordered = found
            print("flat", " ".join(str(e) for e in sorted(flat)) or "-")
            print("order", " ".join(str(e) for e in ordered))
        return 0
    report = ramsey_scan(chi, args.ramsey)
    print("\n".join(report.summary_lines()))
    return 0


def _cmd_verify(args) -> int:
    threads = args.threads
    opts = verify_mod.VerifyOptions(
        prop31_max_n=args.max_n or 8,
        allow_n9=args.allow_n9,
        prop32_samples=args.samples,
        seed=args.seed,
        threads=threads,
    )
    if args.claim == "all":
        reports = verify_mod.run_all(opts)
    elif args.claim == "theorem-main":
        reports = [verify_mod.verify_theorem_main(args.r, args.l, threads=threads)]
    elif args.claim == "excluded-catalog":
        reports = [verify_mod.verify_excluded_catalog()]
    elif args.claim == "prop31":
        reports = [verify_mod.verify_prop31(args.max_n or 8, args.allow_n9)]
    elif args.claim == "prop32":
        reports = [verify_mod.verify_prop32(args.samples, args.seed)]
    elif args.claim == "lemma43":
        reports = [verify_mod.verify_lemma43()]
    elif args.claim == "conj61":
        reports = [verify_mod.verify_conjecture61_rank3(args.l, threads=threads)]
    else:
        reports = [verify_mod.verify_oracle_agreement(args.max_n or 7, threads=threads)]

    for r in reports:
        print(f"{r.claim_id} {r.params}: {r.outcome} ({r.elapsed_ms} ms)")
        for w in r.counterexamples():
            print(f"  counterexample: {w['context']}")
    if args.out:
        written = verify_mod.write_reports(reports, args.out, opts, figures=not args.no_figures)
        for path in written:
            print(f"wrote {path}")
    return 1 if any(r.outcome == "counterexample" for r in reports) else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "minor": _cmd_minor,
        "positroid": _cmd_positroid,
        "oriented": _cmd_oriented,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
