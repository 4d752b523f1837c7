"""A small line-oriented language for driving the library.

Declarations introduce groups, structured groups and words; commands
compute spectra, varieties, sections, morphisms, gluings, run audit
suites, and export results.  Parse errors carry line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from . import export as export_mod
from .fingroup import (
    GroupError,
    GroupTable,
    Homomorphism,
    Subgroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_permutations,
    parse_cayley_text,
    quaternion8,
    symmetric,
)
from .freeprod import WordContext, WordError, parse_word
from .gobject import GGroup, GMorphism, identity_object
from .spectrum import spectrum
from .variety import VarietyError, coordinate_group, variety_of

__all__ = ["DslError", "Program", "parse_program", "Interpreter", "run_program"]


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<flag>--[a-z-]+)|(?P<num>-?\d+)|(?P<name>[A-Za-z_/.][\w./^*-]*)"
    r"|(?P<lit>\*|\^|[()\[\],;:=]|->)|(?P<bad>\S))"
)


@dataclass
class Token:
    kind: str
    text: str
    col: int


def _tokenize(line: str, lineno: int) -> list[Token]:
    out = []
    pos = 0
    while pos < len(line):
        m = _TOKEN_RE.match(line, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        for kind in ("flag", "num", "name", "lit"):
            if m.group(kind) is not None:
                out.append(Token(kind, m.group(kind), m.start(kind) + 1))
                break
        else:
            raise DslError(f"bad character {m.group('bad')!r}", lineno, m.start("bad") + 1)
    return out


class _LineParser:
    def __init__(self, tokens: list[Token], lineno: int, raw: str):
        self.tokens = tokens
        self.lineno = lineno
        self.raw = raw
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            raise DslError("unexpected end of line", self.lineno, len(self.raw) + 1)
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t is None or t.text != text:
            col = t.col if t else len(self.raw) + 1
            got = repr(t.text) if t else "end of line"
            raise DslError(f"expected {text!r}, got {got}", self.lineno, col)
        return self.next()

    def accept(self, text: str) -> bool:
        t = self.peek()
        if t is not None and t.text == text:
            self.next()
            return True
        return False

    def name(self, what: str = "name") -> str:
        t = self.peek()
        if t is None or t.kind != "name":
            col = t.col if t else len(self.raw) + 1
            raise DslError(f"expected {what}", self.lineno, col)
        return self.next().text

    def number(self, what: str = "integer") -> int:
        t = self.peek()
        if t is None or t.kind != "num":
            col = t.col if t else len(self.raw) + 1
            raise DslError(f"expected {what}", self.lineno, col)
        return int(self.next().text)

    def flags(self) -> dict:
        out = {}
        while True:
            t = self.peek()
            if t is None or t.kind != "flag":
                break
            key = self.next().text[2:]
            val = self.peek()
            if val is not None and val.kind in ("name", "num"):
                out[key] = self.next().text
            else:
                out[key] = "true"
        return out

    def rest_text(self) -> str:
        """The raw remainder of the line (used for word literals)."""
        t = self.peek()
        if t is None:
            return ""
        start = self.raw.index(t.text, t.col - 1)
        self.pos = len(self.tokens)
        return self.raw[start:].strip()


@dataclass
class Statement:
    kind: str
    lineno: int
    data: dict


@dataclass
class Program:
    statements: list[Statement]
    source: str = ""


_GROUP_MAKERS = {
    "cyclic": (cyclic, 1),
    "sym": (symmetric, 1),
    "alt": (alternating, 1),
    "dihedral": (dihedral, 1),
}


def _parse_group_decl(p: _LineParser) -> dict:
    name = p.name("group name")
    p.expect("=")
    head = p.name("group constructor")
    if head in _GROUP_MAKERS:
        p.expect("(")
        n = p.number()
        p.expect(")")
        return {"name": name, "ctor": head, "args": [n]}
    if head == "quaternion8":
        return {"name": name, "ctor": "quaternion8", "args": []}
    if head == "product":
        p.expect("(")
        a = p.name()
        p.expect(",")
        b = p.name()
        p.expect(")")
        return {"name": name, "ctor": "product", "args": [a, b]}
    if head == "perm":
        n = p.number("degree")
        p.expect(":")
        return {"name": name, "ctor": "perm", "args": [n, p.rest_text()]}
    if head == "table":
        return {"name": name, "ctor": "table", "args": [p.rest_text() or p.name("file path")]}
    raise DslError(f"unknown group constructor {head!r}", p.lineno, p.tokens[p.pos - 1].col)


def _parse_ggroup_decl(p: _LineParser) -> dict:
    name = p.name("ggroup name")
    p.expect("=")
    p.expect("(")
    base = p.name("base group")
    p.expect("->")
    carrier = p.name("carrier group")
    p.expect(")")
    via = p.name("'via'")
    if via != "via":
        raise DslError("expected 'via'", p.lineno, p.tokens[p.pos - 1].col)
    if p.accept("["):
        images = [p.number("element index")]
        while p.accept(","):
            images.append(p.number("element index"))
        p.expect("]")
        return {"name": name, "base": base, "carrier": carrier, "images": images}
    tag = p.name("'id' or image list")
    if tag != "id":
        raise DslError("expected 'id' or '[images]'", p.lineno, p.tokens[p.pos - 1].col)
    return {"name": name, "base": base, "carrier": carrier, "images": None}


def _parse_word_decl(p: _LineParser) -> dict:
    name = p.name("word name")
    over = p.name("'over'")
    if over != "over":
        raise DslError("expected 'over'", p.lineno, p.tokens[p.pos - 1].col)
    p.expect("(")
    group = p.name("group name")
    p.expect(",")
    n = p.number("variable count")
    p.expect(")")
    p.expect("=")
    return {"name": name, "group": group, "nvars": n, "literal": p.rest_text()}


def _parse_open(text: str, lineno: int, col: int):
    if text == "whole":
        return "whole"
    if text == "empty":
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise DslError(f"bad open set {text!r} (use whole, empty or 0,1,..)", lineno, col) from None


def parse_program(text: str) -> Program:
    statements = []
    defined: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        p = _LineParser(_tokenize(line, lineno), lineno, line)
        head = p.name("statement keyword")
        data: dict
        if head == "group":
            data = _parse_group_decl(p)
            kind = "group"
        elif head == "ggroup":
            data = _parse_ggroup_decl(p)
            kind = "ggroup"
            for ref in (data["base"], data["carrier"]):
                if ref not in defined:
                    raise DslError(f"undefined reference {ref!r}", lineno, 1)
        elif head == "word":
            data = _parse_word_decl(p)
            kind = "word"
            if data["group"] not in defined:
                raise DslError(f"undefined reference {data['group']!r}", lineno, 1)
        elif head == "spec":
            target = p.name("object name")
            flags = p.flags()
            data = {"target": target, "flags": flags, "as": None}
            if p.accept("as"):
                data["as"] = p.name("result name")
            kind = "spec"
            if target not in defined:
                raise DslError(f"undefined reference {target!r}", lineno, 1)
        elif head == "variety":
            group = p.name("group name")
            n = p.number("variable count")
            words = []
            while p.peek() is not None and p.peek().kind == "name" and p.peek().text != "as":
                words.append(p.name())
            data = {"group": group, "nvars": n, "words": words, "as": None}
            if p.accept("as"):
                data["as"] = p.name("result name")
            kind = "variety"
            for ref in [group] + words:
                if ref not in defined:
                    raise DslError(f"undefined reference {ref!r}", lineno, 1)
        elif head in ("sections", "stalk"):
            target = p.name("spectrum name")
            tok = p.next()
            data = {"target": target, "arg": tok.text, "argcol": tok.col, "as": None}
            if p.accept("as"):
                data["as"] = p.name("result name")
            kind = head
            if target not in defined:
                raise DslError(f"undefined reference {target!r}", lineno, 1)
        elif head == "morphism":
            p.expect("(")
            a = p.name("source object")
            p.expect("->")
            b = p.name("target object")
            p.expect(")")
            via = p.name("'via'")
            if via != "via":
                raise DslError("expected 'via'", lineno, p.tokens[p.pos - 1].col)
            if p.accept("["):
                images = [p.number()]
                while p.accept(","):
                    images.append(p.number())
                p.expect("]")
            else:
                tag = p.name("'id' or image list")
                if tag != "id":
                    raise DslError("expected 'id' or '[images]'", lineno, 1)
                images = None
            flags = p.flags()
            data = {"source": a, "target": b, "images": images, "flags": flags, "as": None}
            if p.accept("as"):
                data["as"] = p.name("result name")
            kind = "morphism"
            for ref in (a, b):
                if ref not in defined:
                    raise DslError(f"undefined reference {ref!r}", lineno, 1)
        elif head == "glue":
            s1 = p.name("first spectrum")
            t1 = p.next()
            s2 = p.name("second spectrum")
            t2 = p.next()
            data = {
                "s1": s1,
                "u1": _parse_open(t1.text, lineno, t1.col),
                "s2": s2,
                "u2": _parse_open(t2.text, lineno, t2.col),
                "as": None,
            }
            if p.accept("as"):
                data["as"] = p.name("result name")
            kind = "glue"
            for ref in (s1, s2):
                if ref not in defined:
                    raise DslError(f"undefined reference {ref!r}", lineno, 1)
        elif head == "check":
            suite = p.name("suite id")
            flags = p.flags()
            data = {"suite": suite, "flags": flags}
            kind = "check"
        elif head == "export":
            target = p.name("result name")
            flags = p.flags()
            data = {"target": target, "flags": flags}
            kind = "export"
            if target not in defined:
                raise DslError(f"undefined reference {target!r}", lineno, 1)
        else:
            raise DslError(f"unknown statement {head!r}", lineno, 1)
        t = p.peek()
        if t is not None:
            raise DslError(f"unexpected trailing {t.text!r}", lineno, t.col)
        statements.append(Statement(kind, lineno, data))
        defined.add(data.get("name") or data.get("as") or "")
    return Program(statements, text)


# -- interpretation --------------------------------------------------------


@dataclass
class Interpreter:
    env: dict = field(default_factory=dict)
    outputs: list = field(default_factory=list)
    audit_failed: bool = False

    def emit(self, line: str) -> None:
        self.outputs.append(line)

    def run(self, program: Program) -> None:
        for st in program.statements:
            getattr(self, f"_do_{st.kind}")(st)

    def _group(self, name: str, lineno: int) -> GroupTable:
        v = self.env.get(name)
        if isinstance(v, GroupTable):
            return v
        raise DslError(f"{name!r} is not a group", lineno, 1)

    def _object(self, name: str, lineno: int) -> GGroup:
        v = self.env.get(name)
        if isinstance(v, GGroup):
            return v
        if isinstance(v, GroupTable):
            key = f"_idobj:{name}"
            if key not in self.env:
                self.env[key] = identity_object(v, name)
            return self.env[key]
        raise DslError(f"{name!r} is not a group or ggroup", lineno, 1)

    def _do_group(self, st: Statement) -> None:
        d = st.data
        if d["ctor"] in _GROUP_MAKERS:
            g = _GROUP_MAKERS[d["ctor"]][0](d["args"][0])
        elif d["ctor"] == "quaternion8":
            g = quaternion8()
        elif d["ctor"] == "product":
            g = direct_product(
                self._group(d["args"][0], st.lineno), self._group(d["args"][1], st.lineno)
            )
        elif d["ctor"] == "perm":
            degree, cycles = d["args"]
            from .fingroup import _parse_cycles

            gens = [_parse_cycles(part, degree) for part in cycles.split(";") if part.strip()]
            g = from_permutations(degree, gens, name=d["name"])
        else:  # table
            with open(d["args"][0], encoding="utf-8") as fh:
                g = parse_cayley_text(fh.read())
        self.env[d["name"]] = g
        self.emit(f"group {d['name']}: order {g.order}")

    def _do_ggroup(self, st: Statement) -> None:
        d = st.data
        base = self._group(d["base"], st.lineno)
        carrier = self._group(d["carrier"], st.lineno)
        if d["images"] is None:
            if carrier is not base:
                raise DslError("'via id' needs identical base and carrier", st.lineno, 1)
            hom = Homomorphism.identity(base)
        else:
            hom = Homomorphism(base, carrier, d["images"])
        obj = GGroup(base, carrier, hom, name=d["name"])
        self.env[d["name"]] = obj
        self.emit(f"ggroup {d['name']}: {base.name} -> {carrier.name}")

    def _do_word(self, st: Statement) -> None:
        d = st.data
        G = self._group(d["group"], st.lineno)
        ctx = WordContext(G, d["nvars"])
        try:
            w = parse_word(ctx, d["literal"])
        except WordError as e:
            raise DslError(str(e), st.lineno, 1) from None
        self.env[d["name"]] = w
        self.emit(f"word {d['name']}: {w}")

    def _do_spec(self, st: Statement) -> None:
        d = st.data
        obj = self._object(d["target"], st.lineno)
        variant = d["flags"].get("variant", "t1")
        prime_def = d["flags"].get("prime-def", "elementwise")
        sp = spectrum(obj, variant, prime_def)
        if d["as"]:
            self.env[d["as"]] = sp
        self.emit(
            f"spec {d['target']} [{variant},{prime_def}]: {len(sp.primes)} primes "
            f"{[sorted(P.members.members) for P in sp.primes]}"
        )

    def _do_variety(self, st: Statement) -> None:
        d = st.data
        G = self._group(d["group"], st.lineno)
        words = [self.env[w] for w in d["words"]]
        V = variety_of(G, d["nvars"], words)
        if d["as"]:
            self.env[d["as"]] = V
        self.emit(f"variety over {d['group']}^{d['nvars']}: {len(V.points)} points")

    def _scheme(self, name: str, lineno: int):
        from .sheaf import AffineScheme
        from .spectrum import Spectrum

        v = self.env.get(name)
        if isinstance(v, Spectrum):
            key = f"_scheme:{name}"
            if key not in self.env:
                self.env[key] = AffineScheme(v)
            return self.env[key]
        if hasattr(v, "section_group"):
            return v
        raise DslError(f"{name!r} is not a spectrum or scheme", lineno, 1)

    def _do_sections(self, st: Statement) -> None:
        d = st.data
        X = self._scheme(d["target"], st.lineno)
        U = _parse_open(d["arg"], st.lineno, d["argcol"])
        if U == "whole":
            U = frozenset(X.points)
        G = X.section_group(U)
        if d["as"]:
            self.env[d["as"]] = G
        self.emit(f"sections {d['target']} over {sorted(U, key=repr)}: group of order {len(G)}")

    def _do_stalk(self, st: Statement) -> None:
        d = st.data
        X = self._scheme(d["target"], st.lineno)
        try:
            point = int(d["arg"])
        except ValueError:
            raise DslError("stalk needs a prime index", st.lineno, d["argcol"]) from None
        group, report = X.stalk(point)
        if d["as"]:
            self.env[d["as"]] = group
        self.emit(
            f"stalk {d['target']} at #{point}: order {len(group)}, "
            f"quotient comparison surjective={report['surjective']} injective={report['injective']}"
        )

    def _do_morphism(self, st: Statement) -> None:
        from .sheaf import induced_morphism

        d = st.data
        A = self._object(d["source"], st.lineno)
        B = self._object(d["target"], st.lineno)
        if d["images"] is None:
            if A.carrier is not B.carrier:
                raise DslError("'via id' needs identical carriers", st.lineno, 1)
            hom = Homomorphism.identity(A.carrier)
        else:
            hom = Homomorphism(A.carrier, B.carrier, d["images"])
        f = GMorphism(A, B, hom)
        variant = d["flags"].get("variant", "t1")
        prime_def = d["flags"].get("prime-def", "elementwise")
        m = induced_morphism(f, variant, prime_def)
        if d["as"]:
            self.env[d["as"]] = m
        self.emit(f"morphism Spec({d['target']}) -> Spec({d['source']}): points {m.point_map}")

    def _do_glue(self, st: Statement) -> None:
        from .sheaf import glue

        d = st.data
        X1 = self._scheme(d["s1"], st.lineno)
        X2 = self._scheme(d["s2"], st.lineno)
        u1 = frozenset(X1.points) if d["u1"] == "whole" else d["u1"]
        u2 = frozenset(X2.points) if d["u2"] == "whole" else d["u2"]
        D = glue(X1, X2, u1, u2)
        if d["as"]:
            self.env[d["as"]] = D
        self.emit(f"glued scheme: {len(D.points)} points, {len(D.opens())} opens")

    def _do_check(self, st: Statement) -> None:
        from .checks import report_lines, run_suite, worst_status

        d = st.data
        cat = d["flags"].get("catalog", "small")
        try:
            recs = run_suite(d["suite"], cat)
        except KeyError as e:
            raise DslError(str(e.args[0]), st.lineno, 1) from None
        for line in report_lines(recs):
            self.emit(line)
        if worst_status(recs) == "fail":
            self.audit_failed = True

    def _do_export(self, st: Statement) -> None:
        from .sheaf import SectionGroup
        from .spectrum import Spectrum
        from .variety import VarietySet

        d = st.data
        v = self.env[d["target"]]
        fmt = d["flags"].get("format", "json")
        if isinstance(v, Spectrum):
            if fmt == "json":
                payload = export_mod.spectrum_to_json(v)
            elif fmt == "dot":
                payload = export_mod.spectrum_to_dot(v)
            else:
                raise DslError(f"unknown format {fmt!r}", st.lineno, 1)
        elif isinstance(v, VarietySet):
            if fmt != "json":
                raise DslError("varieties export as json only", st.lineno, 1)
            payload = export_mod.to_json_bytes(
                export_mod.variety_to_dict(v, coordinate_group(v))
            )
        elif hasattr(v, "section_group"):
            if fmt != "json":
                raise DslError("schemes export as json only", st.lineno, 1)
            payload = export_mod.to_json_bytes(export_mod.scheme_to_dict(v))
        else:
            raise DslError(f"{d['target']!r} is not exportable", st.lineno, 1)
        out = d["flags"].get("out")
        if out:
            with open(out, "wb") as fh:
                fh.write(payload)
            self.emit(f"exported {d['target']} to {out} ({len(payload)} bytes)")
        else:
            self.emit(payload.decode().rstrip("\n"))


def run_program(text: str) -> Interpreter:
    program = parse_program(text)
    interp = Interpreter()
    interp.run(program)
    return interp
