"""Command line front end: ``graal <cmd> <file> [--json] [--seed N] [--max-length L]``.

Problem files are line oriented::

    # comments start with a hash
    ring x, y, z over QQ;
    H = y^2 + x^3 - x^2*z^2;
    J = x, y;
    I = intersect([x, y], [z]);   # optional
    seed = 7;                     # optional
    max_length = 5;               # optional
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field

from .apps import (
    LiftingError,
    SopError,
    embedding_dimension,
    hilbert_samuel,
    is_regular,
    lift_resolution,
    local_dim,
    system_of_parameters,
    validate_sop,
    verify_resolution,
)
from .engine import ideal_intersection, is_standard_basis
from .graal import (
    CompressionError,
    TowerError,
    build_presentation,
    build_tower,
    check_initial_forms,
    compress_residue_field,
    gr_presentation,
)
from .orderings import DegRevLex
from .polycore import QQ, Poly, PolyRing, format_poly, mpq

COMMANDS = ("gr", "dim", "regular", "sop", "hilbert", "resolve")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("line %d, column %d: %s" % (line, col, message))
        self.line = line
        self.col = col


class VerificationError(RuntimeError):
    pass


@dataclass
class ProblemFile:
    variables: list[str]
    H: list[Poly]
    J: list[Poly]
    I: list[Poly] | None = None
    intersect: tuple[list[Poly], list[Poly]] | None = None
    seed: int | None = None
    max_length: int | None = None
    ring: PolyRing | None = field(default=None, compare=False, repr=False)

    def ideal_I(self) -> list[Poly] | None:
        if self.intersect is not None:
            a, b = self.intersect
            return ideal_intersection(a, b, DegRevLex(len(self.variables)))
        return self.I


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<num>\d+)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^(),;=\[\]])"
)
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring: PolyRing | None = None

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str):
        t = self.tok
        raise ParseError(msg, t.line, t.col)

    def next(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text:
            self.error("expected %r, found %r" % (text, self.tok.text or "end of input"))
        return self.next()

    def problem(self) -> ProblemFile:
        seen: dict = {}
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "name":
                self.error("expected a statement, found %r" % t.text)
            key = t.text
            if key in seen:
                self.error("duplicate statement %r" % key)
            if key == "ring":
                seen[key] = self.ring_decl()
            elif key in ("H", "J", "I", "seed", "max_length"):
                if self.ring is None and key in ("H", "J", "I"):
                    self.error("the ring must be declared first")
                self.next()
                self.expect("=")
                if key in ("seed", "max_length"):
                    n = self.tok
                    if n.kind != "num":
                        self.error("expected an integer")
                    self.next()
                    seen[key] = int(n.text)
                elif key == "I" and self.tok.text == "intersect":
                    seen["I*"] = self.intersect()
                else:
                    seen[key] = self.poly_list()
                self.expect(";")
            else:
                self.error("unknown statement %r" % key)
        for req in ("ring", "H", "J"):
            if req not in seen:
                t = self.tok
                raise ParseError("missing %r statement" % req, t.line, t.col)
        H = [f for f in seen["H"] if f]
        I = [f for f in seen["I"] if f] if "I" in seen else None
        return ProblemFile(
            list(self.ring.names), H, seen["J"], I, seen.get("I*"),
            seen.get("seed"), seen.get("max_length"), self.ring,
        )

    def ring_decl(self) -> list[str]:
        self.next()
        names = []
        while True:
            t = self.tok
            if t.kind != "name" or t.text in ("over",):
                self.error("expected a variable name")
            if t.text in names:
                self.error("duplicate variable %r" % t.text)
            names.append(self.next().text)
            if self.tok.text == ",":
                self.next()
                continue
            break
        self.expect("over")
        self.expect("QQ")
        self.expect(";")
        self.ring = PolyRing(names, QQ)
        return names

    def intersect(self):
        self.next()
        self.expect("(")
        self.expect("[")
        a = self.poly_list()
        self.expect("]")
        self.expect(",")
        self.expect("[")
        b = self.poly_list()
        self.expect("]")
        self.expect(")")
        return ([f for f in a if f], [f for f in b if f])

    def poly_list(self) -> list[Poly]:
        out = [self.poly()]
        while self.tok.text == ",":
            self.next()
            out.append(self.poly())
        return out

    def poly(self) -> Poly:
        acc = self.term()
        while self.tok.text in ("+", "-"):
            op = self.next().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            t = self.tok
            if t.text == "*":
                self.next()
                acc = acc * self.factor()
            elif t.kind in ("num", "name") or t.text == "(":
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        if self.tok.text in ("+", "-"):
            neg = self.next().text == "-"
            f = self.factor()
            return -f if neg else f
        base = self.atom()
        if self.tok.text == "^":
            self.next()
            n = self.tok
            if n.kind != "num":
                self.error("expected a non-negative integer exponent")
            self.next()
            base = base ** int(n.text)
        return base

    def atom(self) -> Poly:
        t = self.tok
        ring = self.ring
        if t.kind == "num":
            self.next()
            value = mpq(int(t.text))
            if self.tok.text == "/":
                self.next()
                d = self.tok
                if d.kind != "num":
                    self.error("expected an integer denominator")
                if int(d.text) == 0:
                    self.error("zero denominator")
                self.next()
                value = mpq(int(t.text), int(d.text))
            return ring.const(value)
        if t.kind == "name":
            if t.text not in ring._index:
                self.error("unknown variable %r" % t.text)
            self.next()
            return ring.gen(t.text)
        if t.text == "(":
            self.next()
            p = self.poly()
            self.expect(")")
            return p
        self.error("expected a number, variable or '(' but found %r" % (t.text or "end of input"))


def parse_problem(text: str) -> ProblemFile:
    return _Parser(text).problem()


def format_problem(pf: ProblemFile) -> str:
    """Inverse of :func:`parse_problem` (up to layout)."""

    def plist(ps):
        return ", ".join(format_poly(p) for p in ps) if ps else "0"

    lines = ["ring %s over QQ;" % ", ".join(pf.variables), "H = %s;" % plist(pf.H), "J = %s;" % plist(pf.J)]
    if pf.intersect is not None:
        a, b = pf.intersect
        lines.append("I = intersect([%s], [%s]);" % (plist(a), plist(b)))
    elif pf.I is not None:
        lines.append("I = %s;" % plist(pf.I))
    if pf.seed is not None:
        lines.append("seed = %d;" % pf.seed)
    if pf.max_length is not None:
        lines.append("max_length = %d;" % pf.max_length)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _strs(ps) -> list[str]:
    return [format_poly(p) for p in ps]


def _matrix(columns) -> list[list[str]]:
    return [[format_poly(c) for c in col.components()] for col in columns]


def run_command(cmd: str, pf: ProblemFile, seed: int = 0, max_length: int = 10,
                verify: bool = False) -> dict:
    """Run one command and return the report dictionary."""
    if cmd not in COMMANDS:
        raise ValueError("unknown command %r" % cmd)
    timings: dict = {}
    t0 = time.perf_counter()
    tower = build_tower(pf.variables, pf.H, pf.J)
    p = build_presentation(tower)
    gp = gr_presentation(p)
    timings["presentation"] = time.perf_counter() - t0
    if verify:
        if not is_standard_basis(p.basis, p.order):
            raise VerificationError("standard basis check failed")
        if not check_initial_forms(gp):
            raise VerificationError("initial forms do not form a Groebner basis")
    I = None
    if cmd in ("hilbert", "resolve"):
        I = pf.ideal_I()
        if I is None:
            raise ValueError("command %r needs an I statement" % cmd)
    t1 = time.perf_counter()
    if cmd == "gr":
        result = {
            "I_in": _strs(gp.I_in_gb),
            "residue_ideal": _strs(tower.J0_gb),
            "coefficient_field": "QQ(%s)" % ", ".join(tower.U) if tower.U else "QQ",
            "initial_forms_ok": check_initial_forms(gp),
        }
        try:
            cf = compress_residue_field(tower, seed)
            result["minpoly"] = format_poly(cf.minpoly)
            result["transform"] = list(cf.transform)
        except CompressionError:
            result["minpoly"] = None
            result["transform"] = None
    elif cmd == "dim":
        result = {"dim": local_dim(gp)}
    elif cmd == "regular":
        result = {
            "regular": is_regular(gp),
            "dim": local_dim(gp),
            "embedding_dimension": embedding_dimension(gp),
        }
    elif cmd == "sop":
        sop = system_of_parameters(gp, seed=seed)
        if verify and not validate_sop(gp, sop.linear_forms):
            raise VerificationError("system of parameters failed re-validation")
        result = {
            "elements": _strs(sop.elements),
            "linear_forms": _strs(sop.linear_forms),
            "coeff_matrix": sop.coeff_matrix,
            "regular": sop.regular,
            "attempts": sop.attempts,
        }
    elif cmd == "hilbert":
        hd = hilbert_samuel(p, gp, I)
        if not hd.window_ok():
            raise VerificationError("Hilbert-Samuel window check failed")
        result = {
            "dimension": hd.dimension,
            "a_coeffs": hd.a_coeffs,
            "constant_c": hd.constant_c,
            "threshold_l": hd.threshold_l,
            "degree_d": hd.degree_d,
            "hilbert_values": hd.hilbert_values,
            "hs_values": [hd.hs_values[n] for n in sorted(hd.hs_values)],
        }
    else:
        res = lift_resolution(p, gp, I, max_length=max_length)
        checks = verify_resolution(p, gp, res)
        if not all(checks.values()):
            raise VerificationError("resolution invariants failed: %s" % checks)
        result = {
            "ranks": res.ranks,
            "shifts": [list(s) for s in res.shifts],
            "complete": res.complete,
            "gr_maps": [_matrix(m) for m in res.gr_maps],
            "al_maps": [_matrix(m) for m in res.al_maps],
            "checks": checks,
        }
    timings["command"] = time.perf_counter() - t1
    timings["total"] = time.perf_counter() - t0
    return {
        "command": cmd,
        "tower": {"U": list(tower.U), "V": list(tower.V), "s": tower.s},
        "result": result,
        "timings": timings,
    }


def format_text(report: dict) -> str:
    t = report["tower"]
    lines = [
        "command: %s" % report["command"],
        "U = {%s}, V = {%s}, s = %d" % (", ".join(t["U"]), ", ".join(t["V"]), t["s"]),
    ]
    for k, v in report["result"].items():
        if isinstance(v, list) and v and isinstance(v[0], list) and k.endswith("maps"):
            lines.append("%s:" % k)
            for i, m in enumerate(v, 1):
                lines.append("  step %d:" % i)
                for col in m:
                    lines.append("    [%s]" % ", ".join(col))
        else:
            lines.append("%s: %s" % (k, v))
    lines.append("time: %.3fs" % report["timings"]["total"])
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="graal", description="Local rings at primes and their graded rings.")
    ap.add_argument("cmd", choices=COMMANDS)
    ap.add_argument("file")
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--max-length", type=int, default=None)
    args = ap.parse_args(argv)
    verify = os.environ.get("GRAAL_VERIFY") == "1"
    try:
        with open(args.file, encoding="utf-8") as fh:
            pf = parse_problem(fh.read())
        seed = args.seed if args.seed is not None else (pf.seed if pf.seed is not None else 0)
        max_length = args.max_length or pf.max_length or 10
        report = run_command(args.cmd, pf, seed=seed, max_length=max_length, verify=verify)
    except (OSError, ParseError, TowerError, ValueError, SopError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (VerificationError, LiftingError, AssertionError) as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(format_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
