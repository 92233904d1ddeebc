import io
import stat
import sys

import pytest

from clcomplete.cli import EXIT_INPUT, EXIT_PROVED, EXIT_TIMEOUT, EXIT_UNPROVABLE, run_cli
from clcomplete.cnf import parse_dimacs
from clcomplete.render import parse_structured

from conftest import CORPUS
from test_solver import FAKE_SOLVER


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli([str(a) for a in argv], env=env or {}, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def tiny(tmp_path):
    path = tmp_path / "tiny.p"
    path.write_text("fof(pq, axiom, ((p & r) => q)).\nfof(c, conjecture, (p => q)).\n")
    return path


def test_hint_problem_text():
    code, out, err = run("-l100", "-m8", CORPUS / "varignon_hint.p")
    assert code == EXIT_PROVED
    assert "defrectangle4b" in out and "Proved by assumption!" in out
    assert err.startswith("prover: proved;")


def test_structured_output():
    code, out, _ = run("-l100", "-m8", "--format", "structured", CORPUS / "varignon_hint.p")
    assert code == EXIT_PROVED
    assert parse_structured(out).steps[-1].kind.name == "QEDBYASSUMPTION"


def test_abduct_reported(tiny):
    code, out, _ = run("-l60", "-m4", "-b1", tiny)
    assert code == EXIT_PROVED
    assert "Abducts found:\n- r" in out


def test_unprovable(tiny):
    assert run("-l60", "-m3", tiny)[0] == EXIT_UNPROVABLE


def test_timeout():
    assert run("-l0.2", "-m8", CORPUS / "varignon.p")[0] == EXIT_TIMEOUT


@pytest.mark.parametrize("argv", [
    ["missing.p"],
    ["--no-such-flag", "x.p"],
    ["-m", "eight", "x.p"],
    [],
])
def test_input_errors(argv):
    assert run(*argv)[0] == EXIT_INPUT


def test_parse_error_is_reported(tmp_path):
    bad = tmp_path / "bad.p"
    bad.write_text("fof(a, axiom, (p &)).\n")
    code, _, err = run(bad)
    assert code == EXIT_INPUT and "bad.p:1:19: expected a formula" in err


def test_dump_cnf(tiny, tmp_path):
    target = tmp_path / "out.cnf"
    run("-l60", "-m2", "--dump-cnf", target, tiny)
    num_vars, clauses = parse_dimacs(target.read_bytes())
    assert num_vars > 0 and clauses


def test_external_solver_from_environment(tiny, tmp_path):
    script = tmp_path / "fake_solver"
    script.write_text(f"#!{sys.executable}\n" + FAKE_SOLVER)
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    code, out, _ = run("-l60", "-m4", "-b1", tiny, env={"PROVER_EXTERNAL_SOLVER": str(script)})
    assert code == EXIT_PROVED and "- r" in out


def test_broken_external_solver(tiny, tmp_path):
    script = tmp_path / "broken"
    script.write_text("#!/bin/sh\necho nonsense\n")
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    assert run("-l60", "-m2", "--external-solver", script, tiny)[0] == EXIT_INPUT


def test_deduct_all(tmp_path):
    path = tmp_path / "deduct.p"
    path.write_text("fof(f, axiom, q(c)).\nfof(g, axiom, (q(c) => r(c))).\nfof(x, conjecture, _(c)).\n")
    code, out, _ = run("-l60", "-m3", "--deduct-all", path)
    assert code == EXIT_PROVED
    deducts = out.split("Deducts found:\n")[1].split()
    assert set(deducts) - {"-"} == {"q(c)", "r(c)"}
