"""Command-line interface: parse/reduce words, dump presentations, apply
and verify homomorphisms, run the triviality oracles and the suites.

Exit codes: 0 for success / trivial / pass, 1 for nontrivial / fail,
2 for usage or input errors.  All randomness is seeded; the seed comes
from --seed or the BRAIDLAB_SEED environment variable, so every run is
reproducible from its argument vector.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .homs import psi_map, permutation_of, theta_hat, theta_map, \
    verify_well_defined
from .lab import SuiteConfig, run_all
from .pi1 import Verdict, is_trivial_pi1
from .presentations import LHSampler, build_presentation, enumerate_relators
from .reduced_free import lh_trivial_disk
from .words import (
    Family,
    GroupContext,
    Word,
    WordError,
    format_word,
    parse_word,
)

GRAMMAR_HELP = """\
word grammar (whitespace-separated tokens):
  token := gen exp?
  gen   := "s"INT | "a"INT"."INT | "t"INT"."INT | "T"INT"."INT
         | "A"INT"."INT | "x"INT
  exp   := "^" SIGNED_INT
  sugar := "[" word "," word "]"     commutator u v u^-1 v^-1
surface fundamental-group words use the single-index form "a"INT.
"""

_FAMILIES = {
    "free": Family.FREE, "pi1": Family.PI1, "bn": Family.BN,
    "pbn": Family.PBN, "hatbn": Family.HAT_BN, "hatpbn": Family.HAT_PBN,
}


def _default_seed() -> int:
    try:
        return int(os.environ.get("BRAIDLAB_SEED", "0"))
    except ValueError:
        return 0


def _context(args) -> GroupContext:
    family = _FAMILIES[args.family]
    if family is Family.FREE:
        rank = args.n
        if rank is None:
            indices = [int(m) for m in re.findall(r"x(\d+)", args.word)]
            rank = max(indices, default=1)
        return GroupContext.free(rank)
    if family is Family.PI1:
        if args.g is None:
            raise WordError("--g is required for pi1 words")
        return GroupContext.pi1(args.g)
    if args.n is None:
        raise WordError(f"--n is required for {args.family} words")
    return GroupContext(family, args.n, args.g or 0)


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def cmd_reduce(args) -> int:
    ctx = _context(args)
    word = parse_word(args.word, ctx)
    _emit(args, {"word": format_word(word), "length": len(word)},
          format_word(word))
    return 0


def cmd_perm(args) -> int:
    ctx = GroupContext.bn(args.n, args.g or 0)
    word = parse_word(args.word, ctx)
    image = permutation_of(word)
    _emit(args, {"n": args.n, "mapping": list(image.mapping),
                 "identity": image.is_identity}, image.describe())
    return 0 if image.is_identity else 1


def cmd_theta(args) -> int:
    family = Family.HAT_PBN if args.family == "hatpbn" else Family.PBN
    ctx = GroupContext(family, args.n, args.g)
    word = parse_word(args.word, ctx)
    image = theta_hat(word, args.g)
    trivial = image.is_free_identity
    _emit(args, {
        "n": args.n, "g": args.g,
        "components": [format_word(c) for c in image.components],
        "free_identity": trivial,
    }, image.describe())
    return 0 if trivial else 1


def cmd_pi1(args) -> int:
    ctx = GroupContext.pi1(args.g)
    word = parse_word(args.word, ctx)
    verdict = is_trivial_pi1(word, args.g)
    _emit(args, {"g": args.g, "word": format_word(word),
                 "verdict": verdict.value}, verdict.value)
    return 0 if verdict is Verdict.TRIVIAL else 1


def cmd_lh(args) -> int:
    ctx = GroupContext.pbn(args.n, 0)
    word = parse_word(args.word, ctx)
    verdict = lh_trivial_disk(word)
    _emit(args, {"n": args.n, "word": format_word(word),
                 "verdict": verdict.value}, verdict.value)
    return 0 if verdict is Verdict.TRIVIAL else 1


def cmd_presentation(args) -> int:
    presentation = build_presentation(_FAMILIES[args.family], args.n, args.g)
    sampler = LHSampler(max_h_length=args.lh_len,
                        samples_per_pair=args.lh_samples, seed=args.seed)
    relators = [
        {"tag": inst.tag, "indices": list(inst.indices),
         "conjugator": None if inst.conjugator is None
         else format_word(inst.conjugator),
         "word": format_word(inst.word)}
        for inst in enumerate_relators(presentation, sampler)
    ]
    payload = {
        "family": args.family, "n": args.n, "g": args.g,
        "generators": [format_word(Word(presentation.context, [l]))
                       for l in presentation.generators],
        "relators": relators,
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"generators: {' '.join(payload['generators'])}")
        for rel in relators:
            print(f"{rel['tag']}{tuple(rel['indices'])}: {rel['word']}")
    return 0


def cmd_hom(args) -> int:
    if args.map == "theta":
        hom = theta_map(args.n, args.g)
    else:
        hom = psi_map(args.n, args.g)
    sampler = LHSampler(max_h_length=args.lh_len,
                        samples_per_pair=args.lh_samples, seed=args.seed)
    report = verify_well_defined(hom, sampler)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        status = "pass" if report.clean else "FAIL"
        print(f"{report.map_name}: {status} checked={report.checked} "
              f"failed={len(report.failures)} unknown={len(report.unknowns)}")
        for check in report.failures:
            print(f"  {check.tag}{check.indices}: {check.relator} "
                  f"-> {check.image}")
    return 0 if report.clean else 1


def cmd_lab(args) -> int:
    cfg = SuiteConfig(n_max=args.n_max, g_max=args.g_max, length=args.len,
                      samples=args.samples, seed=args.seed,
                      lh_max_h=args.lh_len, lh_samples=args.lh_samples)
    report = run_all(cfg)
    if args.json:
        print(json.dumps(report.to_dict(timing=not args.no_timing),
                         indent=2, sort_keys=True))
    else:
        for check in report.checks:
            status = "pass" if check.passed else "FAIL"
            print(f"{check.name} n={check.n} g={check.g}: {status} "
                  f"({check.checked} checked, {check.wall_ms:.0f} ms)")
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _add_word_flags(parser, need_n=False, need_g=False):
    parser.add_argument("--word", required=True, help="word text")
    parser.add_argument("--n", type=int, required=need_n,
                        help="strand count (rank for free words)")
    parser.add_argument("--g", type=int, required=need_g, help="genus")


def _add_sampler_flags(parser):
    parser.add_argument("--lh-len", type=int, default=4,
                        help="max conjugator length for LH relators")
    parser.add_argument("--lh-samples", type=int, default=64,
                        help="sampled LH relators per index pair")
    parser.add_argument("--seed", type=int, default=_default_seed(),
                        help="RNG seed (default: $BRAIDLAB_SEED or 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidlab",
        description="Symbolic calculator for braid and string-link groups "
                    "over closed orientable surfaces.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="parse and freely reduce a word",
                       epilog=GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--family", choices=sorted(_FAMILIES), default="free")
    _add_word_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("perm", help="strand permutation of a braid word")
    _add_word_flags(p, need_n=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("theta", help="strand projection to pi1(M)^n")
    p.add_argument("--family", choices=["pbn", "hatpbn"], default="hatpbn")
    _add_word_flags(p, need_n=True, need_g=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("pi1", help="surface fundamental group oracle")
    pi1_sub = p.add_subparsers(dest="subcommand", required=True)
    q = pi1_sub.add_parser("is-trivial")
    _add_word_flags(q, need_g=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_pi1)

    p = sub.add_parser("lh", help="disk link-homotopy triviality oracle")
    lh_sub = p.add_subparsers(dest="subcommand", required=True)
    q = lh_sub.add_parser("is-trivial")
    _add_word_flags(q, need_n=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_lh)

    p = sub.add_parser("presentation", help="dump a presentation")
    pres_sub = p.add_subparsers(dest="subcommand", required=True)
    q = pres_sub.add_parser("dump")
    q.add_argument("--family", choices=["bn", "pbn", "hatbn", "hatpbn"],
                   required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    _add_sampler_flags(q)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_presentation)

    p = sub.add_parser("hom", help="verify a homomorphism on all relators")
    hom_sub = p.add_subparsers(dest="subcommand", required=True)
    q = hom_sub.add_parser("verify")
    q.add_argument("--map", choices=["theta", "psi"], required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    _add_sampler_flags(q)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_hom)

    p = sub.add_parser("lab", help="run the exactness suites")
    lab_sub = p.add_subparsers(dest="subcommand", required=True)
    q = lab_sub.add_parser("run")
    q.add_argument("--n-max", type=int, default=3)
    q.add_argument("--g-max", type=int, default=2)
    q.add_argument("--len", type=int, default=12)
    q.add_argument("--samples", type=int, default=200)
    _add_sampler_flags(q)
    q.add_argument("--no-timing", action="store_true",
                   help="omit wall times from JSON output")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_lab)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
