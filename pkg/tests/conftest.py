import functools
from pathlib import Path

import pytest

from clcomplete.logic import normalize
from clcomplete.tptp import load_problem, parse_problem

CORPUS = Path(__file__).resolve().parent.parent / "src" / "clcomplete" / "corpus"


@functools.lru_cache(maxsize=None)
def corpus_file(name):
    return load_problem(CORPUS / f"{name}.p")


@functools.lru_cache(maxsize=None)
def corpus_problem(name):
    return normalize(corpus_file(name))


def problem_from_text(text, name=None):
    return normalize(parse_problem(text), name)


@pytest.fixture
def varignon():
    return corpus_problem("varignon")


@pytest.fixture
def inverse1():
    return corpus_problem("varignon_inverse1")


def const(problem, name):
    return problem.constants.index(name)


def atom(problem, pred, *names):
    from clcomplete.logic import ground

    return ground(problem.signature.code(pred), *(const(problem, n) for n in names))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
