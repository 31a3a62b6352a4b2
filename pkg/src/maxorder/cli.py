"""Command line front end.

Subcommands: ``check`` (is R[alpha] integrally closed), ``split``
(splitting of the place on an affirmative check), ``verify`` (valuation
identities recomputed from lifted branches), ``count-extensions``
(number of extensions of the valuation, when decidable), and ``corpus``
(randomized cross-validation).

Polynomials are written in the variables ``x`` (always), ``t`` (over
function field bases), and ``u`` (the coefficient field generator when
e > 1), with integer literals, ``+ - * ^`` and parentheses; there is no
implicit multiplication. Output is plain text or, with ``--json``, one
canonical JSON document on stdout. For a fixed invocation and seed the
output is byte-identical across runs.

Exit status: 0 on success (and on an affirmative check), 1 on a
negative check, 2 on unusable input (syntax errors, composite
characteristic, a reducible polynomial, refusals on a negative verdict,
exhausted precision), 3 on an internal invariant violation.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__, corpus as corpus_mod, ffpoly, rings
from .criterion import count_extensions, dedekind_verdict, split_prime
from .errors import (
    EngineError,
    InputError,
    InternalInvariantError,
    PolyParseError,
    PrecisionExhaustedError,
)
from .fields import extension_field
from .hensel import verify_valuation_identities
from .rings import ValuedBase, poly_to_text

EXPONENT_CAP = 4096
DEFAULT_CORPUS_PRIMES = "2,3,5,7,11,13"


# ---------------------------------------------------------------------------
# polynomial expressions


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c in "xtu":
            if i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_"):
                raise PolyParseError(
                    "names are single letters and multiplication needs an "
                    "explicit '*'",
                    i,
                )
            toks.append(("name", c, i))
            i += 1
            continue
        if c in "+-*^()":
            toks.append((c, c, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {c!r}", i)
    toks.append(("end", None, n))
    return toks


@dataclass(frozen=True)
class _Algebra:
    add: object
    sub: object
    neg: object
    mul: object
    pow: object
    from_int: object
    atoms: dict
    missing: object


class _Parser:
    """expr := ['-'] term (('+'|'-') term)*
    term := factor ('*' factor)*
    factor := atom ['^' INT]
    atom := INT | NAME | '(' expr ')'
    """

    def __init__(self, toks, algebra):
        self.toks = toks
        self.pos = 0
        self.alg = algebra

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        kind, _, at = self.peek()
        if kind != "end":
            raise PolyParseError("unexpected trailing input", at)
        return value

    def expr(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = self.alg.neg(value)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = self.alg.add(value, rhs) if op == "+" else self.alg.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = self.alg.mul(value, self.factor())
        return value

    def factor(self):
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, n, at = self.take()
            if kind != "int":
                raise PolyParseError("an integer exponent must follow '^'", at)
            if n > EXPONENT_CAP:
                raise PolyParseError(f"exponent exceeds the cap of {EXPONENT_CAP}", at)
            value = self.alg.pow(value, n)
        return value

    def atom(self):
        kind, val, at = self.take()
        if kind == "int":
            return self.alg.from_int(val)
        if kind == "name":
            if val not in self.alg.atoms:
                raise PolyParseError(self.alg.missing(val), at)
            return self.alg.atoms[val]
        if kind == "(":
            value = self.expr()
            kind2, _, at2 = self.take()
            if kind2 != ")":
                raise PolyParseError("missing closing parenthesis", at2)
            return value
        raise PolyParseError(
            "a number, a variable, or a parenthesized expression is required", at
        )


def _missing_name(base_kind, e):
    def missing(name):
        if name == "t":
            return "the variable 't' is only available over function field bases"
        if name == "u":
            if base_kind == "Q":
                return "the generator 'u' is only available over function field bases"
            return "the generator 'u' requires a proper coefficient extension (e > 1)"
        return f"the variable {name!r} is not available here"

    return missing


def _poly_algebra(base):
    ring = base.ring
    atoms = {"x": rings.poly_x(ring)}
    e = getattr(base, "e", 1)
    if base.kind == "Fq":
        field = ring.field
        atoms["t"] = ((field.zero, field.one),)
        if e > 1:
            atoms["u"] = ((field.element(field.base.p),),)
    return _Algebra(
        add=lambda a, b: rings.poly_add(a, b, ring),
        sub=lambda a, b: rings.poly_sub(a, b, ring),
        neg=lambda a: rings.poly_neg(a, ring),
        mul=lambda a, b: rings.poly_mul(a, b, ring),
        pow=lambda a, n: rings.poly_pow(a, n, ring),
        from_int=lambda n: rings.poly_const(ring.from_int(n), ring),
        atoms=atoms,
        missing=_missing_name(base.kind, e),
    )


def _place_algebra(field, e):
    atoms = {"t": (field.zero, field.one)}
    if e > 1:
        atoms["u"] = (field.element(field.base.p),)

    def missing(name):
        if name == "x":
            return "the variable 'x' cannot appear in the place polynomial pi(t)"
        if name == "u":
            return "the generator 'u' requires a proper coefficient extension (e > 1)"
        return f"the variable {name!r} is not available here"

    return _Algebra(
        add=lambda a, b: ffpoly.add(field, a, b),
        sub=lambda a, b: ffpoly.sub(field, a, b),
        neg=lambda a: ffpoly.neg(field, a),
        mul=lambda a, b: ffpoly.mul(field, a, b),
        pow=lambda a, n: ffpoly.pow_(field, a, n),
        from_int=lambda n: ffpoly.constant(field, field.from_int(n)),
        atoms=atoms,
        missing=missing,
    )


def parse_poly(text, base):
    """Parse a polynomial in x over the base's ring of integers."""
    return _Parser(_tokenize(text), _poly_algebra(base)).parse()


def parse_place(text, field, e):
    """Parse the place polynomial pi(t) over the coefficient field."""
    return _Parser(_tokenize(text), _place_algebra(field, e)).parse()


def make_base(args):
    if args.base == "Q":
        if args.prime is None:
            raise InputError("--prime is required for base Q")
        if args.p is not None or args.pi is not None or args.e is not None:
            raise InputError("--p, --e, and --pi apply to base Fq only")
        return ValuedBase.rational(args.prime)
    if args.prime is not None:
        raise InputError("--prime applies to base Q only; use --p for base Fq")
    if args.p is None:
        raise InputError("--p is required for base Fq")
    if args.pi is None:
        raise InputError("--pi is required for base Fq")
    e = args.e if args.e is not None else 1
    if e < 1:
        raise InputError("--e must be at least 1")
    field = extension_field(args.p, e)
    pi = parse_place(args.pi, field, e)
    return ValuedBase.function_field(args.p, e, pi)


# ---------------------------------------------------------------------------
# report schema (draft-07); every --json document validates against it

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "maxorder report",
    "type": "object",
    "required": ["command", "version"],
    "additionalProperties": False,
    "properties": {
        "command": {
            "enum": ["check", "split", "verify", "count-extensions", "corpus"]
        },
        "version": {"type": "string"},
        "seed": {"type": "integer"},
        "base": {"type": "string"},
        "poly": {"type": "string"},
        "max_deg": {"type": "integer", "minimum": 1},
        "suites": {"type": "array", "items": {"type": "string"}},
        "verdict": {
            "type": "object",
            "required": ["integrally_closed", "witnesses", "classical_agrees"],
            "additionalProperties": False,
            "properties": {
                "integrally_closed": {"type": "boolean"},
                "classical_agrees": {"type": "boolean"},
                "witnesses": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["i", "phi", "l", "r", "nu_r"],
                        "additionalProperties": False,
                        "properties": {
                            "i": {"type": "integer", "minimum": 0},
                            "phi": {"type": "string"},
                            "l": {"type": "integer", "minimum": 2},
                            "r": {"type": "string"},
                            "nu_r": {
                                "oneOf": [{"type": "integer"}, {"const": "inf"}]
                            },
                        },
                    },
                },
            },
        },
        "splitting": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["gens", "e", "f"],
                "additionalProperties": False,
                "properties": {
                    "gens": {
                        "type": "array",
                        "items": {"type": "string"},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                    "e": {"type": "integer", "minimum": 1},
                    "f": {"type": "integer", "minimum": 1},
                },
            },
        },
        "defectless": {"type": "boolean"},
        "verify": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "lhs", "rhs", "pass"],
                "additionalProperties": False,
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "l": {"type": "integer", "minimum": 2},
                    "deg_phi": {"type": "integer", "minimum": 1},
                    "nu_res": {"type": "integer", "minimum": 0},
                    "omega": {"type": "string"},
                    "lhs": {"type": "string"},
                    "rhs": {"type": "string"},
                    "pass": {"type": "boolean"},
                },
            },
        },
        "precision": {"type": "integer", "minimum": 0},
        "count": {
            "type": "object",
            "required": ["status", "t", "certificate"],
            "additionalProperties": False,
            "properties": {
                "status": {"enum": ["known", "unknown"]},
                "t": {"type": ["integer", "null"]},
                "descent_depth": {"type": "integer", "minimum": 0},
                "certificate": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["i", "phi", "l", "rule", "certified"],
                        "additionalProperties": False,
                        "properties": {
                            "i": {"type": "integer", "minimum": 0},
                            "phi": {"type": "string"},
                            "l": {"type": "integer", "minimum": 1},
                            "degree": {"type": "integer", "minimum": 1},
                            "rule": {
                                "enum": [
                                    "multiplicity-one",
                                    "remainder-valuation-one",
                                    "none",
                                ]
                            },
                            "certified": {"type": "boolean"},
                            "nu_r": {
                                "oneOf": [
                                    {"type": "integer"},
                                    {"const": "inf"},
                                    {"type": "null"},
                                ]
                            },
                        },
                    },
                },
            },
        },
        "corpus": {
            "type": "object",
            "required": ["instances", "disagreements"],
            "additionalProperties": False,
            "properties": {
                "instances": {"type": "integer", "minimum": 0},
                "verdict_true": {"type": "integer", "minimum": 0},
                "verdict_false": {"type": "integer", "minimum": 0},
                "repeated": {"type": "integer", "minimum": 0},
                "lift_checks": {"type": "integer", "minimum": 0},
                "splits_checked": {"type": "integer", "minimum": 0},
                "identities_checked": {"type": "integer", "minimum": 0},
                "disagreements": {"type": "integer", "minimum": 0, "maximum": 0},
                "bases": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["base", "instances"],
                        "additionalProperties": False,
                        "properties": {
                            "base": {"type": "string"},
                            "instances": {"type": "integer", "minimum": 0},
                            "verdict_true": {"type": "integer", "minimum": 0},
                            "verdict_false": {"type": "integer", "minimum": 0},
                            "repeated": {"type": "integer", "minimum": 0},
                            "lift_checks": {"type": "integer", "minimum": 0},
                            "splits_checked": {"type": "integer", "minimum": 0},
                            "identities_checked": {"type": "integer", "minimum": 0},
                        },
                    },
                },
            },
        },
    },
}


# ---------------------------------------------------------------------------
# rendering


def _dumps(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _nu_json(v):
    return "inf" if v == rings.INF else int(v)


def _nu_text(v):
    return "inf" if v == rings.INF else str(int(v))


def _factors_text(rf, base):
    pieces = []
    for (_, l), lift in zip(rf.factors, rf.lifts):
        text = f"({poly_to_text(lift, base)})"
        pieces.append(f"{text}^{l}" if l > 1 else text)
    return " * ".join(pieces)


def _verdict_payload(verdict, base):
    return {
        "integrally_closed": verdict.integrally_closed,
        "classical_agrees": verdict.classical_agrees,
        "witnesses": [
            {
                "i": w.index,
                "phi": poly_to_text(w.phi, base),
                "l": w.multiplicity,
                "r": poly_to_text(w.remainder, base),
                "nu_r": _nu_json(w.valuation),
            }
            for w in verdict.witnesses
        ],
    }


def _verdict_lines(verdict, base):
    lines = [f"residue factors: {_factors_text(verdict.factorization, base)}"]
    if verdict.witnesses:
        for w in verdict.witnesses:
            lines.append(
                f"witness [{w.index}]: phi = {poly_to_text(w.phi, base)}, "
                f"l = {w.multiplicity}, r = {poly_to_text(w.remainder, base)}, "
                f"nu(r) = {_nu_text(w.valuation)}"
            )
    else:
        lines.append("witnesses: none (no repeated residue factor)")
    lines.append("classical cross-check: agrees")
    lines.append(
        "verdict: R[alpha] is integrally closed"
        if verdict.integrally_closed
        else "verdict: R[alpha] is NOT integrally closed"
    )
    return lines


def _header_lines(base, ptext):
    return [f"base: {base.describe()}", f"poly: {ptext}"]


# ---------------------------------------------------------------------------
# commands


def run_check(args):
    base = make_base(args)
    f = parse_poly(args.poly, base)
    verdict = dedekind_verdict(
        f, base, seed=args.seed, assume_irreducible=args.assume_irreducible
    )
    ptext = poly_to_text(f, base)
    if args.json:
        print(
            _dumps(
                {
                    "command": "check",
                    "base": base.describe(),
                    "poly": ptext,
                    "seed": args.seed,
                    "version": __version__,
                    "verdict": _verdict_payload(verdict, base),
                }
            )
        )
    else:
        print("\n".join(_header_lines(base, ptext) + _verdict_lines(verdict, base)))
    return 0 if verdict.integrally_closed else 1


def run_split(args):
    base = make_base(args)
    f = parse_poly(args.poly, base)
    verdict = dedekind_verdict(
        f, base, seed=args.seed, assume_irreducible=args.assume_irreducible
    )
    report = split_prime(f, base, _verdict=verdict)
    ptext = poly_to_text(f, base)
    if args.json:
        print(
            _dumps(
                {
                    "command": "split",
                    "base": base.describe(),
                    "poly": ptext,
                    "seed": args.seed,
                    "version": __version__,
                    "verdict": _verdict_payload(verdict, base),
                    "splitting": [
                        {
                            "gens": [
                                rings.element_to_text(ideal.prime, base),
                                poly_to_text(ideal.lift, base),
                            ],
                            "e": ideal.e,
                            "f": ideal.f,
                        }
                        for ideal in report.ideals
                    ],
                    "defectless": report.defectless,
                }
            )
        )
    else:
        lines = _header_lines(base, ptext)
        for i, ideal in enumerate(report.ideals):
            lines.append(
                f"ideal [{i}]: gens = ({rings.element_to_text(ideal.prime, base)}, "
                f"{poly_to_text(ideal.lift, base)}), e = {ideal.e}, f = {ideal.f}"
            )
        total = sum(ideal.e * ideal.f for ideal in report.ideals)
        lines.append(f"defectless: sum e*f = {total} = deg f")
        print("\n".join(lines))
    return 0


def run_verify(args):
    base = make_base(args)
    f = parse_poly(args.poly, base)
    verdict = dedekind_verdict(
        f, base, seed=args.seed, assume_irreducible=args.assume_irreducible
    )
    report = verify_valuation_identities(
        f, base, seed=args.seed, precision=args.precision, _verdict=verdict
    )
    ptext = poly_to_text(f, base)
    if args.json:
        print(
            _dumps(
                {
                    "command": "verify",
                    "base": base.describe(),
                    "poly": ptext,
                    "seed": args.seed,
                    "version": __version__,
                    "precision": report.precision,
                    "verify": [
                        {
                            "i": e.index,
                            "l": e.multiplicity,
                            "deg_phi": e.degree,
                            "nu_res": e.resultant_valuation,
                            "omega": str(e.omega),
                            "lhs": str(e.lhs),
                            "rhs": str(e.rhs),
                            "pass": e.passed,
                        }
                        for e in report.entries
                    ],
                }
            )
        )
    else:
        lines = _header_lines(base, ptext)
        lines.append(f"precision: {report.precision}")
        if report.entries:
            for e in report.entries:
                lines.append(
                    f"identity [{e.index}]: l = {e.multiplicity}, "
                    f"deg phi = {e.degree}, nu(Res) = {e.resultant_valuation}, "
                    f"omega = {e.omega}, l*omega = {e.lhs}: "
                    f"{'pass' if e.passed else 'FAIL'}"
                )
        else:
            lines.append("identities: none (no repeated residue factor)")
        lines.append(
            "verify: all identities hold" if report.passed else "verify: FAILURE"
        )
        print("\n".join(lines))
    return 0 if report.passed else 3


def run_count(args):
    base = make_base(args)
    f = parse_poly(args.poly, base)
    result = count_extensions(
        f, base, seed=args.seed, assume_irreducible=args.assume_irreducible
    )
    ptext = poly_to_text(f, base)
    if args.json:
        print(
            _dumps(
                {
                    "command": "count-extensions",
                    "base": base.describe(),
                    "poly": ptext,
                    "seed": args.seed,
                    "version": __version__,
                    "count": {
                        "status": result.status,
                        "t": result.t,
                        "descent_depth": result.descent_depth,
                        "certificate": [
                            {
                                "i": b.index,
                                "phi": poly_to_text(b.phi, base),
                                "l": b.multiplicity,
                                "degree": b.degree,
                                "rule": b.rule,
                                "certified": b.certified,
                                "nu_r": None
                                if b.remainder_valuation is None
                                else _nu_json(b.remainder_valuation),
                            }
                            for b in result.branches
                        ],
                    },
                }
            )
        )
    else:
        lines = _header_lines(base, ptext)
        lines.append(f"descent depth: {result.descent_depth}")
        for b in result.branches:
            detail = (
                "certified"
                if b.certified
                else f"undecided (nu(r) = {_nu_text(b.remainder_valuation)})"
            )
            lines.append(
                f"branch [{b.index}]: phi = {poly_to_text(b.phi, base)}, "
                f"l = {b.multiplicity}, rule = {b.rule}, {detail}"
            )
        lines.append(
            f"extensions: {result.t}" if result.status == "known" else "extensions: unknown"
        )
        print("\n".join(lines))
    return 0


def run_corpus(args):
    try:
        primes = [int(piece) for piece in args.primes.split(",") if piece.strip()]
    except ValueError as exc:
        raise InputError(f"--primes must be a comma-separated list of primes: {exc}")
    if not primes:
        raise InputError("--primes must name at least one prime")
    if args.count < 1:
        raise InputError("--count must be at least 1")
    if args.max_deg < 1:
        raise InputError("--max-deg must be at least 1")
    pairs = [(ValuedBase.rational(p), args.count) for p in primes]
    report = corpus_mod.run_corpus(pairs, max_deg=args.max_deg, seed=args.seed)
    if args.json:
        print(
            _dumps(
                {
                    "command": "corpus",
                    "seed": args.seed,
                    "version": __version__,
                    "max_deg": args.max_deg,
                    "suites": list(report.suites),
                    "corpus": {
                        "instances": report.instances,
                        "verdict_true": report.verdict_true,
                        "verdict_false": report.verdict_false,
                        "repeated": report.repeated,
                        "lift_checks": report.lift_checks,
                        "splits_checked": report.splits_checked,
                        "identities_checked": report.identities_checked,
                        "disagreements": 0,
                        "bases": [
                            {
                                "base": r.label,
                                "instances": r.instances,
                                "verdict_true": r.verdict_true,
                                "verdict_false": r.verdict_false,
                                "repeated": r.repeated,
                                "lift_checks": r.lift_checks,
                                "splits_checked": r.splits_checked,
                                "identities_checked": r.identities_checked,
                            }
                            for r in report.per_base
                        ],
                    },
                }
            )
        )
    else:
        lines = [
            f"corpus: seed = {report.seed}, max degree = {report.max_deg}, "
            f"suites = {','.join(report.suites)}"
        ]
        for r in report.per_base:
            lines.append(
                f"base {r.label}: instances = {r.instances}, "
                f"true = {r.verdict_true}, false = {r.verdict_false}, "
                f"repeated = {r.repeated}, lift checks = {r.lift_checks}, "
                f"splits = {r.splits_checked}, identities = {r.identities_checked}"
            )
        lines.append(f"total: {report.instances} instances, 0 disagreements")
        print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="maxorder",
        description=(
            "Decide whether R[alpha] is integrally closed for a monic "
            "polynomial over a valued field, split the place, verify "
            "valuation identities, and count extensions of the valuation."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    base_args = argparse.ArgumentParser(add_help=False)
    base_args.add_argument(
        "--base", choices=["Q", "Fq"], default="Q", help="ground field kind"
    )
    base_args.add_argument("--prime", type=int, help="prime p of the place (base Q)")
    base_args.add_argument("--p", type=int, help="characteristic (base Fq)")
    base_args.add_argument(
        "--e", type=int, help="coefficient field is F_{p^e} (base Fq, default 1)"
    )
    base_args.add_argument(
        "--pi", help="monic irreducible pi(t) defining the place (base Fq)"
    )
    base_args.add_argument("--seed", type=int, default=0, help="randomness seed")
    base_args.add_argument(
        "--json", action="store_true", help="emit one canonical JSON document"
    )

    poly_args = argparse.ArgumentParser(add_help=False)
    poly_args.add_argument("--poly", required=True, help="monic polynomial in x")
    poly_args.add_argument(
        "--assume-irreducible",
        action="store_true",
        help="skip the best-effort reducibility screen",
    )

    p_check = sub.add_parser(
        "check",
        parents=[base_args, poly_args],
        help="decide whether R[alpha] is integrally closed",
    )
    p_check.set_defaults(func=run_check)

    p_split = sub.add_parser(
        "split",
        parents=[base_args, poly_args],
        help="splitting of the place on an affirmative check",
    )
    p_split.set_defaults(func=run_split)

    p_verify = sub.add_parser(
        "verify",
        parents=[base_args, poly_args],
        help="recompute valuation identities from lifted branches",
    )
    p_verify.add_argument(
        "--precision",
        type=int,
        help="pin the working precision (default: automatic with retries)",
    )
    p_verify.set_defaults(func=run_verify)

    p_count = sub.add_parser(
        "count-extensions",
        parents=[base_args, poly_args],
        help="count the extensions of the valuation, when decidable",
    )
    p_count.set_defaults(func=run_count)

    p_corpus = sub.add_parser(
        "corpus", parents=[], help="randomized cross-validation over Q bases"
    )
    p_corpus.add_argument(
        "--primes",
        default=DEFAULT_CORPUS_PRIMES,
        help=f"comma-separated primes (default {DEFAULT_CORPUS_PRIMES})",
    )
    p_corpus.add_argument(
        "--count", type=int, default=200, help="instances per prime (default 200)"
    )
    p_corpus.add_argument(
        "--max-deg", type=int, default=8, help="maximum degree (default 8)"
    )
    p_corpus.add_argument("--seed", type=int, default=0, help="randomness seed")
    p_corpus.add_argument(
        "--json", action="store_true", help="emit one canonical JSON document"
    )
    p_corpus.set_defaults(func=run_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 3
    except (InputError, PrecisionExhaustedError) as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
