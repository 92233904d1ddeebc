"""Raw first-order syntax trees, as produced by the TPTP reader.

Nothing here knows about coherent logic; these are plain function-free
first-order formulas plus two placeholders used only in conjectures: a
wildcard predicate (``pred is None``) and a wildcard argument (``Wild``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class FVar:
    name: str


@dataclass(frozen=True)
class FConst:
    name: str


@dataclass(frozen=True)
class Wild:
    """An argument written ``_``."""


FTerm = Union[FVar, FConst, Wild]


@dataclass(frozen=True)
class FAtom:
    pred: str | None  # None stands for the `_` predicate wildcard
    args: tuple[FTerm, ...] = ()


@dataclass(frozen=True)
class FTrue:
    pass


@dataclass(frozen=True)
class FFalse:
    pass


@dataclass(frozen=True)
class FNot:
    body: "Formula"


@dataclass(frozen=True)
class FAnd:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class FOr:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class FImplies:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class FIff:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class FForall:
    vars: tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class FExists:
    vars: tuple[str, ...]
    body: "Formula"


Formula = Union[FAtom, FTrue, FFalse, FNot, FAnd, FOr, FImplies, FIff, FForall, FExists]


def atoms(f: Formula):
    """Yield every atom of ``f`` in left-to-right order."""
    if isinstance(f, FAtom):
        yield f
    elif isinstance(f, FNot):
        yield from atoms(f.body)
    elif isinstance(f, (FAnd, FOr)):
        for item in f.items:
            yield from atoms(item)
    elif isinstance(f, (FImplies, FIff)):
        yield from atoms(f.lhs)
        yield from atoms(f.rhs)
    elif isinstance(f, (FForall, FExists)):
        yield from atoms(f.body)


def render_term(t: FTerm) -> str:
    if isinstance(t, Wild):
        return "_"
    return t.name


def render_atom(a: FAtom) -> str:
    pred = "_" if a.pred is None else a.pred
    if pred == "neq" and len(a.args) == 2:
        return f"{render_term(a.args[0])} != {render_term(a.args[1])}"
    if pred == "eq" and len(a.args) == 2:
        return f"{render_term(a.args[0])} = {render_term(a.args[1])}"
    if not a.args:
        return pred
    return f"{pred}({','.join(render_term(t) for t in a.args)})"


def render(f: Formula) -> str:
    """Render ``f`` as fof text; fully parenthesised, so it re-parses unambiguously."""
    if isinstance(f, FAtom):
        text = render_atom(f)
        return f"({text})" if f.pred in ("neq", "eq") and len(f.args) == 2 else text
    if isinstance(f, FTrue):
        return "$true"
    if isinstance(f, FFalse):
        return "$false"
    if isinstance(f, FNot):
        return f"~ {render(f.body)}"
    if isinstance(f, FAnd):
        return "(" + " & ".join(render(i) for i in f.items) + ")"
    if isinstance(f, FOr):
        return "(" + " | ".join(render(i) for i in f.items) + ")"
    if isinstance(f, FImplies):
        return f"({render(f.lhs)} => {render(f.rhs)})"
    if isinstance(f, FIff):
        return f"({render(f.lhs)} <=> {render(f.rhs)})"
    if isinstance(f, FForall):
        return f"(! [{', '.join(f.vars)}] : {render(f.body)})"
    if isinstance(f, FExists):
        return f"(? [{', '.join(f.vars)}] : {render(f.body)})"
    raise TypeError(f"not a formula: {f!r}")
