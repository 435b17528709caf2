"""Command-line interface.

Exit codes: 0 success (property holds / consistent / all laws hold),
1 computation succeeded but found a violation or inconsistency,
2 usage, I/O or document error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import kernels
from .consistency import MODES, classify, compress
from .errors import DocumentError, FuzzyError
from .grades import DIGITS_ENV, DEFAULT_DIGITS
from .infosystem import FuzzyInformationSystem, compress_system
from .lawcheck import CATALOG, FULL_LAWS, get_law, known_witnesses, check_law, search_counterexample, verify_law
from .mappings import image_relation, preimage_relation
from .neighborhoods import neighborhood
from .serialize import (
    dump_json,
    emit_relations,
    emit_zadeh,
    mapping_to_dict,
    read_mapping,
    read_relations,
    relations_to_dict,
    set_to_zadeh,
)

EXIT_OK, EXIT_FOUND, EXIT_ERROR = 0, 1, 2


class UsageError(FuzzyError):
    pass


def _select(relations, name, path):
    if name is None:
        if len(relations) != 1:
            raise UsageError(f"{path} holds {len(relations)} relations ({', '.join(relations)}); pick one with --name")
        return next(iter(relations.values()))
    if name not in relations:
        raise UsageError(f"{path} has no relation named {name!r}")
    return relations[name]


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit(relations, fmt):
    return emit_zadeh(relations) if fmt == "zadeh" else emit_relations(relations)


def cmd_classify(args):
    _, rels = read_relations(args.relation, args.digits)
    r = _select(rels, args.name, args.relation)
    f = read_mapping(args.mapping)
    rep = classify(f, r, args.tol)
    print(rep.format())
    return EXIT_OK if rep.consistent else EXIT_FOUND


def cmd_image(args):
    _, rels = read_relations(args.relation, args.digits)
    f = read_mapping(args.mapping)
    _write(_emit({n: image_relation(f, r) for n, r in rels.items()}, args.format), args.output)
    return EXIT_OK


def cmd_preimage(args):
    _, rels = read_relations(args.relation, args.digits)
    f = read_mapping(args.mapping)
    _write(_emit({n: preimage_relation(f, q) for n, q in rels.items()}, args.format), args.output)
    return EXIT_OK


def cmd_neighborhood(args):
    _, rels = read_relations(args.relation, args.digits)
    r = _select(rels, args.name, args.relation)
    print(set_to_zadeh(neighborhood(r, args.element, args.kind)))
    return EXIT_OK


def _compression_doc(name, projection, quotients):
    doc = relations_to_dict(quotients)
    doc["projection"] = mapping_to_dict(projection)
    return dump_json(doc)


def cmd_compress(args):
    _, rels = read_relations(args.relation, args.digits)
    r = _select(rels, args.name, args.relation)
    name = args.name or next(iter(rels))
    res = compress(r, args.mode, args.tol)
    print(f"mode={res.mode} classes={len(res.partition)} of {len(r.universe)}")
    print(f"partition: {res.partition}")
    if res.approximate:
        print("round-trip: not checked (approximate grouping)")
        status = EXIT_OK
    elif res.roundtrip.equal:
        print("round-trip: exact")
        status = EXIT_OK
    else:
        print(f"round-trip: lossy ({len(res.roundtrip.differences)} entries differ)")
        for d in res.roundtrip.differences:
            print(f"  {d}")
        status = EXIT_FOUND
    if args.output:
        _write(_compression_doc(name, res.projection, {name: res.quotient}), args.output)
    return status


def cmd_compress_system(args):
    universe, rels = read_relations(args.system, args.digits)
    res = compress_system(FuzzyInformationSystem(rels, universe))
    print(f"attributes={len(rels)} classes={len(res.partition)} of {len(universe)}")
    print(f"partition: {res.partition}")
    for name, rt in res.roundtrips.items():
        print(f"{name}: round-trip {'exact' if rt.equal else 'lossy'}")
    if args.output:
        _write(_compression_doc(None, res.projection, dict(res.image.items())), args.output)
    return EXIT_OK if res.lossless else EXIT_FOUND


def cmd_verify_laws(args):
    ids = args.law or list(FULL_LAWS)
    failed = False
    start = time.perf_counter()
    for law_id in ids:
        s = verify_law(get_law(law_id), args.trials, args.seed, args.max_size)
        print(s.line())
        if s.first_violation is not None:
            cx = s.first_violation
            print(f"  first violation at trial {cx.trial}: {cx.verdict.witness}")
            print("  " + cx.instance.describe().replace("\n", "\n  "))
            failed = True
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.1f}s (backend {kernels.BACKEND})")
    print("all laws hold" if not failed else "violations found")
    return EXIT_FOUND if failed else EXIT_OK


def cmd_counterexample(args):
    law = get_law(args.law)
    for inst in known_witnesses(law.id) if args.known else ():
        v = check_law(law, inst)
        print(f"known witness: {v.status} {v.witness or ''}".rstrip())
    cx = search_counterexample(law, args.trials, args.seed, args.max_size)
    if cx is None:
        print(f"no counterexample for {law.id} in {args.trials} trials (seed {args.seed})")
        return EXIT_OK
    print(f"counterexample for {law.id} at trial {cx.trial}: {cx.verdict.witness}")
    print(cx.instance.describe())
    return EXIT_FOUND


def cmd_list_laws(args):
    for law in CATALOG.values():
        tag = f" (weakens {law.weakens})" if law.weakened else ""
        print(f"{law.id}: {law.statement}{tag}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="fuzzyhom",
        description="Fuzzy relations, consistent functions and lossless homomorphic compression.",
        epilog=f"Grades are exact decimals. The default scale ({DEFAULT_DIGITS} digits) can be set with {DIGITS_ENV}.",
    )
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="decimal digits of grade precision")
    sub = p.add_subparsers(dest="command", required=True)

    def rel_args(sp, flag="-r", dest="relation"):
        sp.add_argument(flag, dest=dest, required=True, metavar="FILE", help="relation document (JSON or Zadeh text)")
        sp.add_argument("--name", help="relation to use when the document holds several")

    sp = sub.add_parser("classify", help="pred/succ/blockwise consistency of a mapping")
    rel_args(sp)
    sp.add_argument("-m", dest="mapping", required=True, metavar="FILE")
    sp.add_argument("--tol", default="0", help="grade tolerance for equality (default 0: exact)")
    sp.set_defaults(func=cmd_classify)

    for cmd, flag, helptext, func in (
        ("image", "-r", "write f(R) for every relation", cmd_image),
        ("preimage", "-q", "write f^-1(Q) for every relation", cmd_preimage),
    ):
        sp = sub.add_parser(cmd, help=helptext)
        rel_args(sp, flag)
        sp.add_argument("-m", dest="mapping", required=True, metavar="FILE")
        sp.add_argument("-o", dest="output", metavar="FILE")
        sp.add_argument("--format", choices=("json", "zadeh"), default="json")
        sp.set_defaults(func=func)

    sp = sub.add_parser("neighborhood", help="print a neighborhood in Zadeh notation")
    rel_args(sp)
    sp.add_argument("-x", dest="element", required=True)
    sp.add_argument("--kind", choices=("pred", "succ", "meet", "join"), default="pred")
    sp.set_defaults(func=cmd_neighborhood)

    sp = sub.add_parser("compress", help="quotient by the coarsest consistent partition")
    rel_args(sp)
    sp.add_argument("--mode", choices=MODES, default="both")
    sp.add_argument("--tol", default="0", help="grade tolerance for grouping (nonzero: approximate)")
    sp.add_argument("-o", dest="output", metavar="FILE")
    sp.set_defaults(func=cmd_compress)

    sp = sub.add_parser("compress-system", help="compress every attribute of an information system")
    sp.add_argument("-s", dest="system", required=True, metavar="FILE")
    sp.add_argument("-o", dest="output", metavar="FILE")
    sp.set_defaults(func=cmd_compress_system)

    sp = sub.add_parser("verify-laws", help="run the randomized law suite")
    sp.add_argument("--law", action="append", metavar="ID", help="law id (repeatable); default all full laws")
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-size", type=int, default=6)
    sp.add_argument("--timing", action="store_true", help="print elapsed time (breaks byte-identical output)")
    sp.set_defaults(func=cmd_verify_laws)

    sp = sub.add_parser("counterexample", help="search for a violation of a (weakened) law")
    sp.add_argument("--law", required=True, metavar="ID")
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--known", action="store_true", help="also evaluate the stored hand-checked witnesses")
    sp.set_defaults(func=cmd_counterexample)

    sp = sub.add_parser("list-laws", help="print the law catalog")
    sp.set_defaults(func=cmd_list_laws)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (DocumentError, FuzzyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
