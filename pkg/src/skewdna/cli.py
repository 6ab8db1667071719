"""Command-line front end.

    skewdna table1
    skewdna divisors --n 10 --degree 4 [--leading unit|v|v1|any]
    skewdna build    --n 6 --gen "v(x^4+x^2+1)"
    skewdna check    --n 6 --gen "v(x^4+x^2+1)" --property reversible [--assert]
    skewdna dna      --n 6 --gen "v(x^4+x^2+1)" [--fasta]
    skewdna distance --n 6 --gen "v(x^4+x^2+1)" [--metric lee|hamming]
    skewdna verify-paper [--seed N]

Generators are written either as polynomial text in x over the ring
(tokens 0, 1, w, w2, v, products like w2*v, parentheses, ^ for powers)
or as an ascending coefficient list such as "[1, w+v, 1]".

Exit codes: 0 success; 1 a requested property or verification check
failed; 2 input could not be parsed; 3 a size or search cap was hit.
Every subcommand takes --format structured to emit JSON instead of text.
All output is deterministic; the one randomized sweep takes --seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis as an
from . import codes as cd
from . import dna
from . import skewpoly as sp
from . import verify
from .algebra import ELEMENTS, gf4_token, gray, parse_element, r_token


def _parse_generator(text: str) -> sp.Poly:
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError("coefficient list must end with ']'")
        inner = s[1:-1].strip()
        items = [tok.strip() for tok in inner.split(",")] if inner else []
        return sp.normalize(tuple(parse_element(tok) for tok in items))
    return sp.parse_poly(s)


def _coeff_tokens(f: sp.Poly) -> list[str]:
    return [r_token(c) for c in f]


def _emit(args, doc: dict, text: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_table1(args) -> int:
    rows = []
    text = [f"{'element':<12} {'gray':<10} dna"]
    for x in ELEMENTS:
        p, q = gray(x)
        block = dna.encode_element(x)
        rows.append({
            "index": x,
            "element": r_token(x),
            "gray": [gf4_token(p), gf4_token(q)],
            "dna": block,
        })
        pair = f"({gf4_token(p)}, {gf4_token(q)})"
        text.append(f"{r_token(x):<12} {pair:<10} {block}")
    _emit(args, {"command": "table1", "rows": rows}, text)
    return 0


_SHAPES = {"unit": (cd.FORM_UNIT,), "v": (cd.FORM_V,), "v1": (cd.FORM_V1,),
           "any": (cd.FORM_UNIT, cd.FORM_V, cd.FORM_V1)}


def _cmd_divisors(args) -> int:
    rows = []
    for shape in _SHAPES[args.leading]:
        for g in cd.enumerate_right_divisors(args.n, args.degree,
                                             leading=shape, budget=args.cap):
            rows.append({
                "coeffs": _coeff_tokens(g),
                "leading": shape,
                "palindromic": sp.is_palindromic(g),
                "theta_palindromic": sp.is_theta_palindromic(g),
            })
    text = [f"{len(rows)} right divisors of x^{args.n} - 1, degree {args.degree}, "
            f"leading {args.leading}"]
    for row in rows:
        flags = [name for name in ("palindromic", "theta_palindromic") if row[name]]
        tag = ", ".join(f.replace("_", "-") for f in flags) if flags else "-"
        text.append(f"[{', '.join(row['coeffs'])}]  ({row['leading']})  {tag}")
    doc = {"command": "divisors", "n": args.n, "degree": args.degree,
           "leading": args.leading, "divisors": rows}
    _emit(args, doc, text)
    return 0


def _cmd_build(args) -> int:
    g = _parse_generator(args.gen)
    code = cd.code_from_generator(args.n, g)
    k = cd.dimension(code)  # F2 dimension; no materialization needed
    info = dna.classify(code)
    doc = {
        "command": "build",
        "n": args.n,
        "generator": _coeff_tokens(g),
        "polynomial": sp.format_poly(g),
        "leading_form": info.form,
        "size": 1 << k,
        "log2_size": k,
        "palindromic": info.palindromic,
        "theta_palindromic": info.theta_palindromic,
        "predicted_reversible": info.predicted_reversible,
        "predicted_reverse_complement": info.predicted_reverse_complement,
    }
    text = [
        f"length:            {args.n}",
        f"generator:         {sp.coeff_list_str(g)} = {sp.format_poly(g)}",
        f"leading form:      {info.form}",
        f"code size:         {1 << k} (2^{k})",
        f"palindromic:       {'yes' if info.palindromic else 'no'}",
        f"theta-palindromic: {'yes' if info.theta_palindromic else 'no'}",
        f"predicted reversible:         {info.predicted_reversible}",
        f"predicted reverse-complement: {info.predicted_reverse_complement}",
    ]
    _emit(args, doc, text)
    return 0


def _check_by_remainder(code: cd.SkewCyclicCode, prop: str) -> bool | None:
    """Cap-free fallback for single unit-form generators.

    Complement closure of an additive code is equivalent to containing the
    all-ones word, and reverse-complement closure to that plus
    reversibility, so everything reduces to remainder membership.
    """
    if code.forms != (cd.FORM_UNIT,):
        return None
    ones = (1,) * code.n
    if prop == "reversible":
        return dna.reversible_by_remainder(code)
    if prop == "complement":
        return cd.remainder_membership(code, ones)
    if prop == "reverse-complement":
        return dna.reversible_by_remainder(code) and cd.remainder_membership(code, ones)
    return None


def _cmd_check(args) -> int:
    g = _parse_generator(args.gen)
    code = cd.code_from_generator(args.n, g)
    prop = args.property
    via = "materialized"
    size = None
    try:
        cs = cd.materialize(code, cap=args.cap)
    except cd.SizeCapExceeded:
        holds = _check_by_remainder(code, prop)
        if holds is None:
            raise
        via = "remainder"
    else:
        size = cs.size
        if prop == "reversible":
            holds = dna.is_reversible(cs)
        elif prop == "complement":
            holds = dna.is_complement_closed(cs)
        elif prop == "reverse-complement":
            holds = dna.is_reverse_complement_closed(cs)
        else:  # quasi-cyclic: the image identity plus image closure
            report = an.gray_image_report(cs)
            holds = report.identity_holds and report.image_closed
    doc = {"command": "check", "n": args.n, "generator": _coeff_tokens(g),
           "property": prop, "holds": holds, "via": via, "size": size}
    verdict = "holds" if holds else "fails"
    text = [f"{prop} {verdict} for <{sp.format_poly(g)}> at length {args.n} ({via})"]
    _emit(args, doc, text)
    if getattr(args, "assert_") and not holds:
        return 1
    return 0


def _cmd_dna(args) -> int:
    g = _parse_generator(args.gen)
    cs = cd.materialize(cd.code_from_generator(args.n, g), cap=args.cap)
    strings = dna.encode_codeset(cs)
    if args.fasta:
        text = []
        for i, s in enumerate(strings):
            text.append(f">w{i}")
            text.append(s)
    else:
        text = list(strings)
    doc = {"command": "dna", "n": args.n, "generator": _coeff_tokens(g),
           "size": len(strings), "strings": strings}
    _emit(args, doc, text)
    return 0


def _cmd_distance(args) -> int:
    g = _parse_generator(args.gen)
    cs = cd.materialize(cd.code_from_generator(args.n, g), cap=args.cap)
    d = an.min_distance(cs, args.metric)
    doc = {"command": "distance", "n": args.n, "generator": _coeff_tokens(g),
           "metric": args.metric, "min_distance": d, "size": cs.size}
    if args.metric == "lee":
        note = "equals Hamming distance on the DNA strings"
    else:
        note = "over the 16-element alphabet"
    text = [f"minimum {args.metric} distance: {d} ({note}; {cs.size} codewords)"]
    _emit(args, doc, text)
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_all(seed=args.seed)
    rows = []
    text = []
    for r in results:
        rows.append({"name": r.name, "passed": r.passed, "seconds": round(r.seconds, 3),
                     "summary": r.summary, "details": r.details})
        mark = "ok  " if r.passed else "FAIL"
        text.append(f"{mark}  {r.name:<40} ({r.seconds:5.2f}s)  {r.summary}")
        if not r.passed:
            for line in r.details:
                text.append(f"        {line}")
    passed = sum(1 for r in results if r.passed)
    failing = [r.name for r in results if not r.passed]
    text.append(f"{passed} of {len(results)} checks passed")
    if failing:
        text.append(f"failing checks: {', '.join(failing)}")
    doc = {"command": "verify-paper", "seed": args.seed, "passed": passed,
           "total": len(results), "all_passed": not failing, "results": rows}
    _emit(args, doc, text)
    return 0 if not failing else 1


# ---------------------------------------------------------------------------
# parser


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--gen", required=True,
                   help="generator polynomial text or ascending coefficient list")
    p.add_argument("--cap", type=int, default=cd.DEFAULT_CAP,
                   help="largest code size to materialize")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewdna",
        description="skew cyclic DNA codes over the 16-element ring F4 + vF4",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "structured"), default="text",
                       help="output format (structured = JSON)")
        return p

    add("table1", "print the 16-row element / Gray pair / DNA 2-base table")

    p = add("divisors", "list right divisors of x^n - 1 of a given degree")
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--degree", type=int, required=True, help="divisor degree")
    p.add_argument("--leading", choices=("unit", "v", "v1", "any"), default="unit",
                   help="leading coefficient shape")
    p.add_argument("--cap", type=int, default=cd.DEFAULT_CAP,
                   help="largest candidate count to search")

    p = add("build", "construct a code and report its shape and size")
    _add_code_args(p)

    p = add("check", "test a DNA property of a code")
    _add_code_args(p)
    p.add_argument("--property", required=True, dest="property",
                   choices=("reversible", "complement", "reverse-complement",
                            "quasi-cyclic"))
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 when the property fails")

    p = add("dna", "print the code as DNA strings, one per line")
    _add_code_args(p)
    p.add_argument("--fasta", action="store_true", help="FASTA headers >w<index>")

    p = add("distance", "minimum distance of the materialized code")
    _add_code_args(p)
    p.add_argument("--metric", choices=("hamming", "lee"), default="lee")

    p = add("verify-paper", "run the built-in reproduction and verification suite")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED,
                   help="seed for the randomized sweeps")

    return parser


_DISPATCH = {
    "table1": _cmd_table1,
    "divisors": _cmd_divisors,
    "build": _cmd_build,
    "check": _cmd_check,
    "dna": _cmd_dna,
    "distance": _cmd_distance,
    "verify-paper": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.subcommand](args)
    except cd.SizeCapExceeded as exc:
        print(f"skewdna: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"skewdna: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
