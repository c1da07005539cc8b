"""``sdfa`` command line: classify, verify, witness."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .classify import (
    is_sdf_bruteforce,
    is_sdf_counterexample,
    is_weakly_prime,
    is_weakly_prime_counterexample,
    is_weakly_sdf_bruteforce,
)
from .corpus import CorpusSpec, build_corpus
from .dsl import parse_elements, parse_ring, parse_spec
from .errors import ConstructionError, DefectError, DomainError, InputError, ResourceError
from .harness import run_all
from .ideals import Ideal, ideal_generated, is_prime, zero_ideal
from .report import classify_report, verify_report
from .rings import FiniteRing

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

PROPERTIES = ("sdf", "weakly-sdf", "prime", "weakly-prime")


def format_element(value) -> str:
    """Tuple-style text for a rendered element: ``[2,1,0]`` becomes ``(2,1,0)``."""
    if isinstance(value, list):
        return "(" + ",".join(format_element(v) for v in value) + ")"
    return str(value)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from exc


def cmd_classify(args) -> int:
    spec = parse_spec(args.spec)
    if isinstance(spec, Ideal):
        doc = classify_report(spec.ring, [spec], raw=args.raw)
    else:
        doc = classify_report(spec, raw=args.raw)
    _emit(doc.render(args.format), args.out)
    if doc.disagreements:
        print(f"error: fast criteria disagree with brute force on {doc.disagreements}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = CorpusSpec.from_file(args.corpus) if args.corpus else CorpusSpec()
    overrides = {}
    if args.zn_max is not None:
        overrides["zn_max"] = args.zn_max
    if args.seed is not None:
        overrides["seed"] = args.seed
    spec = replace(spec, **overrides)
    corpus = build_corpus(spec)
    results = run_all(corpus, seed=spec.seed, only=args.only)
    doc = verify_report(results, spec, len(corpus))
    _emit(doc.render(args.format), args.out)
    return EXIT_FAIL if doc.failed else EXIT_OK


def _decide(R: FiniteRing, I: Ideal, prop: str):
    if prop == "sdf":
        return is_sdf_bruteforce(R, I)
    if prop == "weakly-sdf":
        return is_weakly_sdf_bruteforce(R, I)
    if prop == "prime":
        return is_prime(I)
    return is_weakly_prime(R, I)


def _certify(R: FiniteRing, I: Ideal, prop: str, a: int, b: int) -> bool:
    if prop in ("sdf", "weakly-sdf"):
        return is_sdf_counterexample(R, I, a, b, weak=prop == "weakly-sdf")
    if prop == "weakly-prime":
        return is_weakly_prime_counterexample(R, I, a, b)
    prod = int(R.mul[a, b])
    return I.mask[prod] and not I.mask[a] and not I.mask[b]


def cmd_witness(args) -> int:
    R = parse_ring(args.spec)
    gens = parse_elements(R, args.gens)
    I = ideal_generated(R, gens) if gens else zero_ideal(R)
    if args.check is not None:
        pair = parse_elements(R, args.check)
        if len(pair) != 2:
            raise InputError("--check takes exactly two elements, e.g. [(2,1,0),(1,1,0)]")
        a, b = pair
        ok = _certify(R, I, args.property, a, b)
        shown = f"a={format_element(R.render(a))}, b={format_element(R.render(b))}"
        print(f"certified {shown}" if ok else f"not a witness: {shown}")
        return EXIT_OK if ok else EXIT_FAIL
    verdict = _decide(R, I, args.property)
    if verdict.holds:
        print("holds")
        return EXIT_OK
    a, b = verdict.witness
    if not _certify(R, I, args.property, a, b):
        raise DefectError(f"witness ({a},{b}) does not certify {args.property}")
    if args.raw:
        print(f"witness a=#{a}, b=#{b}")
    else:
        print(f"witness a={format_element(R.render(a))}, b={format_element(R.render(b))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdfa", description="Classify sdf-absorbing ideals of finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every ideal of a ring (or one ideal)")
    p.add_argument("spec", help="ring or ideal in the ring-spec language")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--raw", action="store_true", help="show raw element indices")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the property harness over the corpus")
    p.add_argument("--zn-max", type=int, metavar="N")
    p.add_argument("--only", nargs="+", metavar="ID")
    p.add_argument("--seed", type=int)
    p.add_argument("--corpus", metavar="FILE", help="JSON corpus spec")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="print a certified witness, or 'holds'")
    p.add_argument("spec", help="ring in the ring-spec language")
    p.add_argument("--gens", required=True, help="ideal generators, e.g. '[(0,0,1)]'")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--check", metavar="PAIR", help="certify a given pair '[a,b]' instead of searching")
    p.add_argument("--raw", action="store_true")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, DomainError, ConstructionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DefectError as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
