"""Proof output: readable text and a versioned JSON exchange format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import ProblemError
from .logic import BOTTOM, NEQ, TOP, Atom, CLFormula, Const, Goal, GoalAtom, Var, instantiate_values
from .proof import Proof, ProofError, ProofStep, Ref, StepKind, Symbols

FORMAT_NAME = "clcomplete-proof"
FORMAT_VERSION = 1


class FormatError(ProblemError):
    """A structured proof document is malformed or has an unsupported version."""


@dataclass(frozen=True)
class RenderOptions:
    style: str = "text"  # text | structured
    show_instantiations: bool = True
    show_abducts: bool = True

    def __post_init__(self):
        if self.style not in ("text", "structured"):
            raise ValueError(f"unknown style {self.style!r}")


# ---------------------------------------------------------------------------
# text


class Names:
    def __init__(self, symbols: Symbols, exist_vars: Sequence[str] = ()):
        self.symbols = symbols
        self.bars = dict(symbols.bars)
        self.exist_vars = list(exist_vars)

    def term(self, t) -> str:
        if isinstance(t, Const):
            c = self.symbols.constants
            return c[t.index] if t.index < len(c) else f"c{t.index}"
        if isinstance(t, Var):
            return self.exist_vars[t.index] if t.index < len(self.exist_vars) else f"X{t.index}"
        return "_"

    def atom(self, a: Atom | GoalAtom) -> str:
        args = [self.term(t) for t in a.args]
        if a.pred is None:
            return "_(" + ", ".join(args) + ")"
        if a.pred == TOP:
            return "⊤"
        if a.pred == BOTTOM:
            return "⊥"
        if a.pred == NEQ:
            return f"{args[0]} ≠ {args[1]}"
        if a.pred in self.bars:
            return "¬ " + self._plain(self.bars[a.pred], args)
        return self._plain(a.pred, args)

    def _plain(self, pred: int, args: list[str]) -> str:
        name = self.symbols.pred_name(pred)
        return f"{name}({', '.join(args)})" if args else name

    def conj(self, atoms) -> str:
        return " ∧ ".join(self.atom(a) for a in atoms) if atoms else "⊤"


def _premise_atoms(proof: Proof, st: ProofStep, theory: Sequence[CLFormula] | None) -> list:
    if theory is not None:
        ax = {f.name: f for f in theory}.get(st.axiom)
        if ax is not None:
            values = dict(st.instantiation)
            prem, _ = instantiate_values(ax, [values[v] for v in ax.var_names])
            return [(a,) for a in prem]
    out = []
    for ref in st.premises:
        if ref.source == "hyp":
            out.append((proof.hypotheses[ref.index],))
        else:
            out.append(proof.steps[ref.index].atoms)
    return out


def render_text(proof: Proof, symbols: Symbols | None = None, theory: Sequence[CLFormula] | None = None,
                options: RenderOptions | None = None) -> str:
    """Natural-language rendering in a numbered, indented proof style.

    ``theory`` (optional) lets MP lines name the exact premise atoms used;
    without it, premises taken from multi-atom steps print the whole step.
    """
    opts = options or RenderOptions()
    symbols = symbols or proof.symbols
    if symbols is None:
        raise ValueError("rendering needs symbol tables")
    nm = Names(symbols, proof.goal.exist_vars)
    used = sorted({t.index for a in proof.hypotheses for t in a.args if isinstance(t, Const)}
                  | {t.index for g in proof.goal.atoms for t in g.args if isinstance(t, Const)})
    lines = []
    consts = ", ".join(nm.term(Const(c)) for c in used)
    if proof.assumptions:
        lines.append(f"Consider arbitrary {consts} such that:" if consts else "Assume that:")
        for i, a in enumerate(proof.assumptions):
            end = "." if i == len(proof.assumptions) - 1 else ","
            lines.append(f"- {nm.atom(a)}{end}")
    elif consts:
        lines.append(f"Consider arbitrary {consts}.")
    lines.append("")
    goal = nm.conj(proof.goal.atoms)
    if proof.goal.exist_vars:
        goal = f"there exist {', '.join(proof.goal.exist_vars)} such that {goal}"
    lines.append(f"It should be proved that {goal}.")
    lines.append("")
    if proof.abducts and opts.show_abducts:
        lines.append("Abducts found:")
        for a in proof.abducts:
            lines.append(f"- {nm.atom(a)}")
        lines.append("")
    number = {}
    for s, st in enumerate(proof.steps):
        number[s] = s + 1
        indent = "  " * (st.nesting - 1)
        k = st.kind
        if k == StepKind.MP:
            body = " ∨ ".join(nm.conj(c) for c in st.contents)
            why = "by MP"
            prem = _premise_atoms(proof, st, theory)
            if prem:
                why += ", from " + ", ".join(nm.conj(p) for p in prem)
            why += f" using axiom {st.axiom}"
            if opts.show_instantiations and st.instantiation:
                inst = ", ".join(f"{v} ↦ {nm.term(Const(c))}" for v, c in st.instantiation)
                why += f"; instantiation: {inst}"
            text = f"{body} ({why})"
        elif k == StepKind.ASSUMPTION:
            text = f"{nm.conj(st.contents[0])} (by assumption)"
        elif k == StepKind.FIRSTCASE:
            text = f"Case {nm.conj(st.contents[0])}:"
        elif k == StepKind.SECONDCASE:
            text = f"Case {nm.conj(st.contents[0])}:"
        elif k == StepKind.QEDBYCASES:
            text = f"Proved by case analysis on step {number[st.case_of]}! (by QEDcs)"
        elif k == StepKind.QEDBYASSUMPTION:
            text = "Proved by assumption! (by QEDas)"
        else:
            text = "Contradiction! (by QEDefq)"
        lines.append(f"{indent}{s + 1}. {text}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structured


def _term_json(t):
    if isinstance(t, Const):
        return t.index
    if isinstance(t, Var):
        return {"var": t.index}
    raise FormatError(f"cannot serialise term {t!r}")


def _atom_json(a) -> dict:
    return {"pred": a.pred, "args": [_term_json(t) for t in a.args]}


def render_structured(proof: Proof) -> bytes:
    """Serialise ``proof`` as UTF-8 JSON (see docs/structured_format.md)."""
    sym = proof.symbols
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "symbols": None if sym is None else {
            "predicates": [[n, a] for n, a in sym.predicates],
            "bars": [[b, p] for b, p in sym.bars],
            "constants": list(sym.constants),
        },
        "assumptions": [_atom_json(a) for a in proof.assumptions],
        "abducts": [_atom_json(a) for a in proof.abducts],
        "goal": {"atoms": [_atom_json(g) for g in proof.goal.atoms],
                 "exist_vars": list(proof.goal.exist_vars)},
        "steps": [
            {
                "kind": st.kind.name,
                "nesting": st.nesting,
                "contents": [[_atom_json(a) for a in c] for c in st.contents],
                "axiom": st.axiom,
                "from": [{ref.source: ref.index} for ref in st.premises],
                "instantiation": [[v, c] for v, c in st.instantiation],
                "case_of": st.case_of,
                "witnesses": list(st.witnesses),
            }
            for st in proof.steps
        ],
    }
    return (json.dumps(doc, indent=1, ensure_ascii=False) + "\n").encode("utf-8")


def _need(obj, key, typ, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if typ is not None and not isinstance(val, typ) or isinstance(val, bool) and typ is int:
        raise FormatError(f"{where}: field {key!r} has the wrong type")
    return val


def _term_parse(x, where):
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return Const(x)
    if isinstance(x, dict) and set(x) == {"var"} and isinstance(x["var"], int):
        return Var(x["var"])
    raise FormatError(f"{where}: bad term {x!r}")


def _atom_parse(x, where, goal=False):
    pred = _need(x, "pred", None, where)
    if not (isinstance(pred, int) and not isinstance(pred, bool) and pred >= 0) and not (goal and pred is None):
        raise FormatError(f"{where}: bad predicate {pred!r}")
    args = tuple(_term_parse(t, where) for t in _need(x, "args", list, where))
    return GoalAtom(pred, args) if goal else Atom(pred, args)


def parse_structured(data: bytes | str) -> Proof:
    """Inverse of `render_structured`; raises FormatError on schema or version problems."""
    try:
        doc = json.loads(data)
    except (ValueError, UnicodeDecodeError) as exc:
        raise FormatError(f"not JSON: {exc}") from None
    if _need(doc, "format", str, "document") != FORMAT_NAME:
        raise FormatError("not a structured proof document")
    version = _need(doc, "version", int, "document")
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported version {version} (expected {FORMAT_VERSION})")
    sym = doc.get("symbols")
    symbols = None
    if sym is not None:
        symbols = Symbols(
            tuple((str(n), int(a)) for n, a in _need(sym, "predicates", list, "symbols")),
            tuple((int(b), int(p)) for b, p in _need(sym, "bars", list, "symbols")),
            tuple(str(c) for c in _need(sym, "constants", list, "symbols")),
        )
    assumptions = tuple(_atom_parse(a, "assumptions") for a in _need(doc, "assumptions", list, "document"))
    abducts = tuple(_atom_parse(a, "abducts") for a in _need(doc, "abducts", list, "document"))
    g = _need(doc, "goal", dict, "document")
    goal = Goal(tuple(_atom_parse(a, "goal", goal=True) for a in _need(g, "atoms", list, "goal")),
                tuple(_need(g, "exist_vars", list, "goal")))
    steps = []
    for i, st in enumerate(_need(doc, "steps", list, "document")):
        where = f"step {i + 1}"
        try:
            kind = StepKind[_need(st, "kind", str, where)]
        except KeyError:
            raise FormatError(f"{where}: unknown kind") from None
        refs = []
        for r in _need(st, "from", list, where):
            if not isinstance(r, dict) or len(r) != 1:
                raise FormatError(f"{where}: bad premise reference")
            (src, idx), = r.items()
            try:
                refs.append(Ref(src, idx))
            except (ProofError, TypeError) as exc:
                raise FormatError(f"{where}: {exc}") from None
        inst = tuple((str(v), int(c)) for v, c in _need(st, "instantiation", list, where))
        try:
            step = ProofStep(
                kind, _need(st, "nesting", int, where),
                tuple(tuple(_atom_parse(a, where) for a in c) for c in _need(st, "contents", list, where)),
                st.get("axiom"), tuple(refs), inst, st.get("case_of"),
                tuple(int(w) for w in st.get("witnesses", [])),
            )
        except (ProofError, TypeError, ValueError) as exc:
            raise FormatError(f"{where}: {exc}") from None
        steps.append(step)
    try:
        return Proof(assumptions, abducts, goal, tuple(steps), symbols)
    except ProofError as exc:
        raise FormatError(f"schema violation: {exc}") from None
