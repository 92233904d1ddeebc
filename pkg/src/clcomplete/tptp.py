"""Reader for the fof subset of TPTP, extended with a ``hint`` role.

Supported clause forms::

    fof(name, axiom, formula).
    fof(name, conjecture, formula).
    fof(name, hint, ATOM_PATTERN, STEP, AXIOM_PATTERN).

Inside a conjecture, ``_`` may stand for the goal predicate or for single
goal arguments. In hints, every position can be ``_`` (unconstrained).
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Union

from . import fol
from .errors import ParseError, ProblemError
from .logic import Signature

AXIOM_ROLES = {
    "axiom", "hypothesis", "lemma", "theorem", "definition", "assumption", "corollary",
}
CONJECTURE_ROLES = {"conjecture"}
HINT_ROLES = {"hint"}

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<comment>%[^\n]*)"
    r"|(?P<block>/\*.*?\*/)"
    r"|(?P<op><=>|<~>|=>|<=|~&|~\||!=|[()\[\],.:!?~&|=])"
    r"|(?P<dollar>\$\$?[a-z][A-Za-z0-9_]*)"
    r"|(?P<upper>[A-Z][A-Za-z0-9_]*)"
    r"|(?P<lower>[a-z][A-Za-z0-9_]*)"
    r"|(?P<wild>_[A-Za-z0-9_]*)"
    r"|(?P<num>[0-9]+)"
    r"|(?P<quoted>'(?:[^'\\]|\\.)*')",
    re.DOTALL,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind, value = m.lastgroup, m.group()
        if kind not in ("ws", "comment", "block"):
            if kind == "wild" and value != "_":
                raise ParseError(f"bad identifier {value!r}", line, pos - line_start + 1)
            tokens.append(Token(kind, value, line, pos - line_start + 1))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# ---------------------------------------------------------------------------
# Hints


HintArg = Union[str, int, None]  # constant/variable name, index into the conjecture variables, wildcard


@dataclass(frozen=True)
class AtomPattern:
    pred: str
    args: tuple[HintArg, ...] = ()


@dataclass(frozen=True)
class AxiomPattern:
    name: str
    args: tuple[HintArg, ...] | None = None  # None: instantiation unconstrained


@dataclass(frozen=True)
class Hint:
    name: str
    atom_pattern: AtomPattern | None = None
    step_index: int | None = None
    axiom_pattern: AxiomPattern | None = None

    def __post_init__(self):
        if self.atom_pattern is None and self.axiom_pattern is None:
            raise ProblemError(f"vacuous hint {self.name!r}")
        if self.step_index is not None and self.step_index < 1:
            raise ProblemError(f"hint {self.name!r}: step index must be at least 1")


def _render_hint_arg(a: HintArg) -> str:
    return "_" if a is None else str(a)


def render_hint(h: Hint) -> str:
    if h.atom_pattern is None:
        atom = "_"
    elif h.atom_pattern.args:
        atom = f"{h.atom_pattern.pred}({','.join(map(_render_hint_arg, h.atom_pattern.args))})"
    else:
        atom = h.atom_pattern.pred
    step = "_" if h.step_index is None else str(h.step_index)
    if h.axiom_pattern is None:
        ax = "_"
    elif h.axiom_pattern.args is None:
        ax = h.axiom_pattern.name
    else:
        ax = f"{h.axiom_pattern.name}({','.join(map(_render_hint_arg, h.axiom_pattern.args))})"
    return f"fof({h.name}, hint, {atom}, {step}, {ax})."


# ---------------------------------------------------------------------------
# Problem files


@dataclass
class ProblemFile:
    """A parsed file: raw formulas in file order plus collected symbols.

    ``constants`` lists the input constants: the conjecture's leading
    universal variables (skolemised to lower-case names) followed by the
    constants written in the file.
    """

    axioms: list[tuple[str, fol.Formula]]
    conjecture: tuple[str, fol.Formula]
    hints: list[Hint]
    signature: Signature
    constants: tuple[str, ...]
    skolem: dict[str, str] = field(default_factory=dict)  # conjecture variable -> constant name
    order: list[tuple[str, str]] = field(default_factory=list)  # (role, name) in file order
    warnings: list[str] = field(default_factory=list)

    @property
    def conjecture_vars(self) -> tuple[str, ...]:
        return tuple(self.skolem)

    def structure(self):
        """Comparable summary used for round-trip checks."""
        return (
            self.axioms, self.conjecture, self.hints, self.signature.predicates,
            self.constants, self.skolem, self.order,
        )


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        found = tok.text or "end of input"
        return ParseError(f"{msg} (found {found!r})", tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == text:
            return self.advance()
        raise self.error(f"expected {text!r}")

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def name(self) -> str:
        if self.tok.kind in ("lower", "num", "quoted"):
            return self.advance().text
        raise self.error("expected a name")

    # -- clauses ------------------------------------------------------------

    def clauses(self):
        while self.tok.kind != "eof":
            yield self.clause()

    def clause(self):
        start = self.tok
        if not (start.kind == "lower" and start.text == "fof"):
            raise self.error("expected 'fof'")
        self.advance()
        self.expect("(")
        name = self.name()
        self.expect(",")
        role_tok = self.tok
        if role_tok.kind != "lower":
            raise self.error("expected a formula role")
        role = self.advance().text
        self.expect(",")
        if role in HINT_ROLES:
            payload = self.hint_payload(name, start)
            kind = "hint"
        elif role in AXIOM_ROLES or role in CONJECTURE_ROLES:
            payload = self.formula()
            kind = "conjecture" if role in CONJECTURE_ROLES else "axiom"
        else:
            raise ParseError(f"unknown role {role!r}", role_tok.line, role_tok.col)
        if self.accept(","):  # optional annotations are skipped
            depth = 0
            while not (depth == 0 and self.at(")")):
                if self.tok.kind == "eof":
                    raise self.error("unterminated annotation")
                if self.at("(") or self.at("["):
                    depth += 1
                elif self.at(")") or self.at("]"):
                    depth -= 1
                self.advance()
        self.expect(")")
        self.expect(".")
        return kind, name, payload, start

    # -- hints --------------------------------------------------------------

    def hint_arg(self) -> HintArg:
        t = self.tok
        if t.kind == "wild":
            self.advance()
            return None
        if t.kind == "num":
            self.advance()
            return int(t.text)
        if t.kind in ("lower", "upper", "quoted"):
            self.advance()
            return t.text
        raise self.error("expected a hint argument")

    def hint_args(self) -> tuple[HintArg, ...]:
        self.expect("(")
        args = [self.hint_arg()]
        while self.accept(","):
            args.append(self.hint_arg())
        self.expect(")")
        return tuple(args)

    def hint_payload(self, name: str, start: Token) -> Hint:
        fields = []
        while True:
            fields.append(self.hint_field(len(fields)))
            if not self.accept(","):
                break
        if not self.at(")"):
            raise self.error("malformed hint")
        if len(fields) != 3:
            raise ParseError(
                f"malformed hint {name!r}: expected 3 payload positions, got {len(fields)}",
                start.line, start.col,
            )
        atom, step, axiom = fields
        if atom is None and axiom is None:
            raise ParseError(f"vacuous hint {name!r}", start.line, start.col)
        return Hint(name, atom, step, axiom)

    def hint_field(self, position: int):
        t = self.tok
        if t.kind == "wild" and not (self.peek().kind == "op" and self.peek().text == "("):
            self.advance()
            return None
        if position == 1:
            if t.kind != "num":
                raise self.error("hint step index must be a number or '_'")
            value = int(self.advance().text)
            if value < 1:
                raise ParseError("hint step index must be at least 1", t.line, t.col)
            return value
        if t.kind != "lower":
            raise self.error("expected a predicate or axiom name")
        pred = self.advance().text
        if position == 0:
            args = self.hint_args() if self.at("(") else ()
            return AtomPattern(pred, args)
        if position == 2:
            args = self.hint_args() if self.at("(") else None
            return AxiomPattern(pred, args)
        raise self.error("malformed hint: too many payload positions")

    # -- formulas -----------------------------------------------------------

    def formula(self) -> fol.Formula:
        left = self.implication()
        while self.at("<=>") or self.at("<~>"):
            op = self.advance().text
            right = self.implication()
            left = fol.FIff(left, right) if op == "<=>" else fol.FNot(fol.FIff(left, right))
        return left

    def implication(self) -> fol.Formula:
        left = self.disjunction()
        if self.accept("=>"):
            return fol.FImplies(left, self.implication())
        if self.accept("<="):
            return fol.FImplies(self.implication(), left)
        return left

    def disjunction(self) -> fol.Formula:
        items = [self.conjunction()]
        while True:
            if self.accept("|"):
                items.append(self.conjunction())
            elif self.accept("~|"):
                items = [fol.FNot(_flat(fol.FOr, items + [self.conjunction()]))]
            else:
                break
        return _flat(fol.FOr, items)

    def conjunction(self) -> fol.Formula:
        items = [self.unary()]
        while True:
            if self.accept("&"):
                items.append(self.unary())
            elif self.accept("~&"):
                items = [fol.FNot(_flat(fol.FAnd, items + [self.unary()]))]
            else:
                break
        return _flat(fol.FAnd, items)

    def unary(self) -> fol.Formula:
        if self.accept("~"):
            return fol.FNot(self.unary())
        if self.at("!") or self.at("?"):
            universal = self.advance().text == "!"
            self.expect("[")
            names = [self.variable()]
            while self.accept(","):
                names.append(self.variable())
            self.expect("]")
            self.expect(":")
            body = self.unary()
            return fol.FForall(tuple(names), body) if universal else fol.FExists(tuple(names), body)
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        return self.atomic()

    def variable(self) -> str:
        if self.tok.kind != "upper":
            raise self.error("expected a variable")
        return self.advance().text

    def atomic(self) -> fol.Formula:
        t = self.tok
        if t.kind == "dollar":
            self.advance()
            if t.text == "$true":
                return fol.FTrue()
            if t.text == "$false":
                return fol.FFalse()
            raise ParseError(f"unsupported defined symbol {t.text}", t.line, t.col)
        if t.kind in ("lower", "quoted", "wild") and self.peek().kind == "op" and self.peek().text == "(":
            self.advance()
            args = self.arguments()
            if self.at("=") or self.at("!="):
                raise ParseError(f"function symbol {t.text!r} of arity {len(args)}", t.line, t.col)
            pred = None if t.kind == "wild" else t.text
            return fol.FAtom(pred, args)
        if t.kind in ("upper", "lower", "num", "quoted", "wild"):
            left = self.term()
            if self.accept("="):
                warnings.warn("positive equality is read as the uninterpreted predicate eq/2")
                return fol.FAtom("eq", (left, self.term()))
            if self.accept("!="):
                return fol.FAtom("neq", (left, self.term()))
            if t.kind in ("lower", "quoted"):
                return fol.FAtom(t.text, ())
            if t.kind == "wild":
                return fol.FAtom(None, ())
            raise ParseError(f"variable {t.text} used as a formula", t.line, t.col)
        raise self.error("expected a formula")

    def arguments(self) -> tuple[fol.FTerm, ...]:
        self.expect("(")
        args = [self.term()]
        while self.accept(","):
            args.append(self.term())
        self.expect(")")
        return tuple(args)

    def term(self) -> fol.FTerm:
        t = self.tok
        if t.kind == "upper":
            self.advance()
            return fol.FVar(t.text)
        if t.kind == "wild":
            self.advance()
            return fol.Wild()
        if t.kind in ("lower", "num", "quoted"):
            self.advance()
            if self.at("("):
                depth, j = 0, self.i
                arity = 1
                while True:  # count arguments for the error message
                    tk = self.toks[j]
                    if tk.kind == "eof":
                        break
                    if tk.text == "(":
                        depth += 1
                    elif tk.text == ")":
                        depth -= 1
                        if depth == 0:
                            break
                    elif tk.text == "," and depth == 1:
                        arity += 1
                    j += 1
                raise ParseError(f"function symbol {t.text!r} of arity {arity}", t.line, t.col)
            return fol.FConst(t.text)
        raise self.error("expected a term")


def _flat(cls, items):
    if len(items) == 1:
        return items[0]
    out = []
    for item in items:
        out.extend(item.items if isinstance(item, cls) else (item,))
    return cls(tuple(out))


def _collect(f: fol.Formula, sig: Signature, consts: dict[str, None], conjecture: bool, where: str):
    for atom in fol.atoms(f):
        if atom.pred is None:
            if not conjecture:
                raise ProblemError(f"{where}: predicate wildcard outside a conjecture")
        else:
            try:
                sig.add(atom.pred, len(atom.args))
            except ProblemError as exc:
                raise ProblemError(f"{where}: arity clash: {exc}") from None
        for t in atom.args:
            if isinstance(t, fol.FConst):
                consts.setdefault(t.name)
            elif isinstance(t, fol.Wild) and not conjecture:
                raise ProblemError(f"{where}: wildcard argument outside a conjecture")


def _leading_universals(f: fol.Formula) -> list[str]:
    names = []
    while isinstance(f, fol.FForall):
        names.extend(v for v in f.vars if v not in names)
        f = f.body
    return names


def parse_problem(text: str) -> ProblemFile:
    """Parse a whole problem file."""
    parser = _Parser(text)
    axioms, hints, conjectures, order = [], [], [], []
    for kind, name, payload, start in parser.clauses():
        order.append((kind, name))
        if kind == "axiom":
            axioms.append((name, payload))
        elif kind == "conjecture":
            conjectures.append(((name, payload), start))
        else:
            hints.append(payload)
    if not conjectures:
        raise ProblemError("no conjecture")
    if len(conjectures) > 1:
        t = conjectures[1][1]
        raise ParseError("multiple conjectures", t.line, t.col)
    conjecture = conjectures[0][0]
    names = [n for n, _ in axioms]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise ProblemError(f"duplicate axiom names: {sorted(dup)}")

    sig = Signature()
    file_consts: dict[str, None] = {}
    # predicates are numbered in order of first occurrence through the file
    for kind, name in order:
        if kind == "axiom":
            _collect(dict(axioms)[name], sig, file_consts, False, name)
        elif kind == "conjecture":
            _collect(conjecture[1], sig, file_consts, True, name)

    skolem: dict[str, str] = {}
    taken = set(file_consts)
    for v in _leading_universals(conjecture[1]):
        base = v.lower()
        cand, k = base, 1
        while cand in taken:
            cand = f"{base}{k}"
            k += 1
        taken.add(cand)
        skolem[v] = cand
    constants = tuple(skolem.values()) + tuple(file_consts)
    return ProblemFile(axioms, conjecture, hints, sig, constants, skolem, order)


def parse_hint(text: str) -> Hint:
    """Parse a single ``fof(name, hint, ...)`` clause."""
    parser = _Parser(text)
    kind, name, payload, start = parser.clause()
    if kind != "hint":
        raise ParseError(f"clause {name!r} does not have role hint", start.line, start.col)
    if parser.tok.kind != "eof":
        raise parser.error("trailing input after hint")
    return payload


def render_problem(pf: ProblemFile) -> str:
    """Render back to fof text, preserving clause order."""
    axioms = dict(pf.axioms)
    hints = {h.name: h for h in pf.hints}
    lines = []
    for kind, name in pf.order:
        if kind == "axiom":
            lines.append(f"fof({name}, axiom, {fol.render(axioms[name])}).")
        elif kind == "conjecture":
            lines.append(f"fof({name}, conjecture, {fol.render(pf.conjecture[1])}).")
        else:
            lines.append(render_hint(hints[name]))
    return "\n".join(lines) + "\n"


def load_problem(path) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_problem(text)
