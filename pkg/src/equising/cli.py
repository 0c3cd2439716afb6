"""Command-line front end.

    analyze [--field q|fp:<p>] [--oracle] [--skip-squarefree-check]
            [--format text|json-like] [--no-monic-reduce] [FILE]

Exit codes: 0 success (either verdict), 1 parse error or empty input,
2 invalid input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EquisingError,
    InternalInvariant,
    InvalidInput,
    PolySyntaxError,
    UnknownVariable,
    ZeroElement,
)
from .oracle import disc_valuation, oracle_boundaries
from .pipeline import analyze
from .ring import TowerRing, field_from_spec
from .series import YPoly

# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        num, op, name = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", num, start))
        elif op is not None:
            out.append(("op", "^" if op == "**" else op, start))
        else:
            if name not in ("x", "y"):
                raise UnknownVariable(f"unknown variable {name!r} (only x and y)", start)
            out.append(("var", name, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


# sparse polynomials {(i, j): c} for c * x^j * y^i


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value or t[0] == "num":
            raise PolySyntaxError(f"expected {value!r}", t[2])
        return t

    def parse(self) -> dict:
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty input", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])
        return p

    def expr(self) -> dict:
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            acc = _add(acc, self.term(), 1 if op == "+" else -1)
        return acc

    def term(self) -> dict:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            pos = self.peek()[2]
            rhs = self.unary()
            if op == "*":
                acc = _mul(acc, rhs)
                continue
            if any(k != (0, 0) for k in rhs):
                raise PolySyntaxError("division by a non-constant", pos)
            c = rhs.get((0, 0), 0)
            if not c:
                raise PolySyntaxError("division by zero", pos)
            acc = {k: v / c for k, v in acc.items()}
        return acc

    def unary(self) -> dict:
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return p if t[1] == "+" else {k: -c for k, c in p.items()}
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                raise PolySyntaxError("exponent must be a non-negative integer", t[2])
            n = int(t[1])
            out = {(0, 0): Fraction(1)}
            for _ in range(n):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        kind, val, pos = self.take()
        if kind == "num":
            return {(0, 0): Fraction(int(val))} if int(val) else {}
        if kind == "var":
            return {(1, 0) if val == "y" else (0, 1): Fraction(1)}
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise PolySyntaxError("unexpected end of input" if kind == "end" else f"unexpected {val!r}", pos)


def parse_terms(text: str) -> dict:
    """Rational coefficients keyed by ``(deg_y, deg_x)``."""
    return _Parser(text).parse()


def parse_poly(text: str, field=None) -> YPoly:
    """Exact polynomial in ``x, y`` over ``field`` (rationals by default)."""
    ring = TowerRing(field if field is not None else field_from_spec("q"))
    terms = parse_terms(text)
    try:
        return YPoly.from_terms(ring, {k: ring.base(c) for k, c in terms.items()})
    except ZeroElement as exc:
        raise InvalidInput(str(exc)) from None


# --------------------------------------------------------------------------
# running


@dataclass
class AnalysisRequest:
    text: str
    field: str = "q"
    oracle_check: bool = False
    skip_squarefree_check: bool = False
    fmt: str = "text"
    monic_reduce: bool = True


def _report_dict(rep, an, G, oracle: dict | None) -> dict:
    out = {
        "verdict": rep.verdict,
        "stage": rep.stage,
        "data": [
            {"q": ed.q, "m": ed.m, "N": ed.N, "P": ed.P.format("Z")} for ed in rep.data
        ],
        "e": rep.e,
        "f": rep.f,
        "char_exponents": list(rep.C),
        "intersections": list(rep.Gamma),
        "disc_valuation": rep.vF,
        "branch_disc_valuation": rep.vFi,
    }
    if oracle is not None:
        out["oracle"] = oracle
    return out


def _oracle_check(rep, an, G) -> dict:
    stages = len(an.boundaries)
    theirs = oracle_boundaries(G, list(an.data), stages=stages)
    out = {
        "boundaries_agree": all(a == b for a, b in zip(an.boundaries, theirs)),
        "stages_checked": stages,
    }
    if rep.is_pseudo_irreducible:
        v = disc_valuation(G)
        out["disc_valuation"] = v
        out["disc_agrees"] = v == rep.vF
    return out


def _text(d: dict) -> str:
    lines = [f"verdict: {d['verdict']}"]
    if d["stage"] is not None:
        lines.append(f"failed at stage: {d['stage']}")
    for k, ed in enumerate(d["data"], 1):
        lines.append(f"stage {k}: q={ed['q']} m={ed['m']} N={ed['N']} P={ed['P']}")
    if d["verdict"] == "pseudo_irreducible":
        C = d["char_exponents"]
        lines.append(f"e={d['e']} f={d['f']}")
        tail = "; " + ", ".join(map(str, C[1:])) if len(C) > 1 else ""
        lines.append(f"C=({C[0]}{tail})")
        lines.append("Gamma=(" + ", ".join(map(str, d["intersections"])) + ")")
        lines.append(f"vF={d['disc_valuation']} vFi={d['branch_disc_valuation']}")
    if "oracle" in d:
        lines.append("oracle: " + " ".join(f"{k}={v}" for k, v in sorted(d["oracle"].items())))
    return "\n".join(lines) + "\n"


def run(req: AnalysisRequest) -> tuple[int, str]:
    """Exit code and the rendered report (or error message)."""
    try:
        field = field_from_spec(req.field)
    except (InvalidInput, ValueError) as exc:
        return 2, f"error: {exc}\n"
    try:
        F = parse_poly(req.text, field)
    except PolySyntaxError as exc:
        return 1, f"parse error: {exc}\n"
    except InvalidInput as exc:
        return 2, f"error: {exc}\n"
    try:
        rep, an, G, _ = analyze(F, not req.skip_squarefree_check, req.monic_reduce)
        oracle = _oracle_check(rep, an, G) if req.oracle_check else None
    except InternalInvariant as exc:
        return 3, f"internal error: {exc}\n"
    except (InvalidInput, EquisingError) as exc:
        return 2, f"error: {exc}\n"
    d = _report_dict(rep, an, G, oracle)
    if req.fmt == "text":
        return 0, _text(d)
    return 0, json.dumps(d, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="analyze",
        description="Pseudo-irreducibility test and equisingularity invariants of F(x, y).",
    )
    ap.add_argument("file", nargs="?", help="polynomial file (default: standard input)")
    ap.add_argument("--field", default="q", help="q (rationals) or fp:<p>")
    ap.add_argument("--oracle", action="store_true", help="cross-check against resultants and direct transforms")
    ap.add_argument("--skip-squarefree-check", action="store_true")
    ap.add_argument("--format", default="text", choices=["text", "json-like", "json"])
    ap.add_argument("--no-monic-reduce", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        text = sys.stdin.read()
    req = AnalysisRequest(
        text,
        args.field,
        args.oracle,
        args.skip_squarefree_check,
        args.format,
        not args.no_monic_reduce,
    )
    code, out = run(req)
    (sys.stdout if code == 0 else sys.stderr).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
