import dataclasses
import json

import pytest
from hypothesis import given, settings, strategies as st

from clcomplete.chase import oracle, oracle_proof
from clcomplete.logic import Goal, Problem, ground
from clcomplete.proof import Ok, Proof, ProofStep, StepKind, Violation, check_proof
from clcomplete.render import (
    FORMAT_VERSION, FormatError, RenderOptions, parse_structured, render_structured, render_text,
)

from conftest import atom, corpus_problem, problem_from_text

# abducts that close the inverse problems; the deduct problem gets its filled goal
CORPUS_CASES = {
    "varignon": (),
    "varignon_inverse1": (("midpoint", "d", "h", "a"),),
    "varignon_inverse2": (("cong", "e", "g", "f", "h"),),
    "varignon_deduct": (),
    "varignon_hint": (),
}


def corpus_proof(name):
    pr = corpus_problem(name)
    if name == "varignon_deduct":
        conj = dataclasses.replace(pr.conjecture, goal=Goal.of(atom(pr, "par", "e", "f", "g", "h")))
        pr = dataclasses.replace(pr, conjecture=conj)
    abducts = [atom(pr, *a) for a in CORPUS_CASES[name]]
    return pr, oracle_proof(pr, oracle(pr, abducts), abducts)


def test_first_problem_text():
    pr, proof = corpus_proof("varignon")
    text = render_text(proof, theory=pr.axioms)
    step1 = [l for l in text.splitlines() if l.startswith("1. ")][0]
    assert "par(a, c, h, g)" in step1 and "triangle_mid_par_strict" in step1
    assert "A ↦ a, B ↦ c, C ↦ d, P ↦ g, Q ↦ h" in step1
    assert "- ¬ col(b, d, a)," in text
    assert text.rstrip().endswith("Proved by assumption! (by QEDas)")


def test_trivial_proof_text():
    pr = problem_from_text("fof(c, conjecture, (p => p)).")
    proof = oracle_proof(pr, oracle(pr))
    body = [l for l in render_text(proof).splitlines() if l[:1].isdigit()]
    assert len(body) == 2 and body[-1].endswith("Proved by assumption! (by QEDas)")


def test_case_split_text_is_indented():
    pr = problem_from_text("""
        fof(split, axiom, (p => (q | r))).
        fof(qs, axiom, (q => s)).
        fof(rs, axiom, (r => s)).
        fof(c, conjecture, (p => s)).
    """)
    lines = render_text(oracle_proof(pr, oracle(pr)), theory=pr.axioms).splitlines()
    body = lines[lines.index("1. q ∨ r (by MP, from p using axiom split)"):]
    assert body == [
        "1. q ∨ r (by MP, from p using axiom split)",
        "  2. Case q:",
        "  3. s (by MP, from q using axiom qs)",
        "  4. Proved by assumption! (by QEDas)",
        "  5. Case r:",
        "  6. s (by MP, from r using axiom rs)",
        "  7. Proved by assumption! (by QEDas)",
        "8. Proved by case analysis on step 1! (by QEDcs)",
    ]


def test_abducts_are_listed():
    pr, proof = corpus_proof("varignon_inverse1")
    text = render_text(proof, theory=pr.axioms)
    assert "Abducts found:\n- midpoint(d, h, a)" in text
    assert "Abducts found" not in render_text(proof, options=RenderOptions(show_abducts=False))


@pytest.mark.parametrize("name", sorted(CORPUS_CASES))
def test_structured_round_trip(name):
    pr, proof = corpus_proof(name)
    data = render_structured(proof)
    again = parse_structured(data)
    assert again == proof
    assert render_structured(again) == data
    assert isinstance(check_proof(pr.axioms, again), Ok)


def doc_of(proof):
    return json.loads(render_structured(proof))


def test_version_mismatch():
    _, proof = corpus_proof("varignon_hint")
    doc = doc_of(proof)
    doc["version"] = FORMAT_VERSION + 1
    with pytest.raises(FormatError, match="unsupported version"):
        parse_structured(json.dumps(doc))


def test_empty_steps_violate_schema():
    _, proof = corpus_proof("varignon_hint")
    doc = doc_of(proof)
    doc["steps"] = []
    with pytest.raises(FormatError, match="schema"):
        parse_structured(json.dumps(doc))


def test_nesting_jump_is_rejected_by_the_checker():
    pr, proof = corpus_proof("varignon_hint")
    doc = doc_of(proof)
    doc["steps"].insert(0, {"kind": "ASSUMPTION", "nesting": 1, "contents": [doc["assumptions"][:1]],
                            "axiom": None, "from": [], "instantiation": [], "case_of": None,
                            "witnesses": []})
    doc["steps"].insert(1, dict(doc["steps"][0], nesting=3))
    parsed = parse_structured(json.dumps(doc))
    assert check_proof(pr.axioms, parsed) == Violation(1, "bad-nesting")


@pytest.mark.parametrize("mangle", [
    lambda d: "not json",
    lambda d: json.dumps({**d, "format": "other"}),
    lambda d: json.dumps({k: v for k, v in d.items() if k != "goal"}),
    lambda d: json.dumps({**d, "steps": [{**d["steps"][0], "kind": "MAGIC"}] + d["steps"][1:]}),
    lambda d: json.dumps({**d, "steps": [{**d["steps"][0], "from": [{"lemma": 0}]}] + d["steps"][1:]}),
    lambda d: json.dumps({**d, "assumptions": [{"pred": -1, "args": []}]}),
])
def test_malformed_documents(mangle):
    _, proof = corpus_proof("varignon_hint")
    with pytest.raises(FormatError):
        parse_structured(mangle(doc_of(proof)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_round_trip(seed):
    import random

    from clcomplete.randgen import random_problem

    pr = random_problem(random.Random(seed))
    res = oracle(pr)
    if not res.derives_goal:
        return
    proof = oracle_proof(pr, res)
    assert parse_structured(render_structured(proof)) == proof
    render_text(proof, theory=pr.axioms)


def test_documented_example_parses_and_checks():
    from pathlib import Path

    doc = (Path(__file__).resolve().parent.parent / "docs" / "structured_format.md").read_text()
    example = doc.split("```json\n")[1].split("```")[0]
    proof = parse_structured(example)
    pr = problem_from_text("fof(pq, axiom, (p => q)).\nfof(c, conjecture, (p => q)).")
    assert isinstance(check_proof(pr.axioms, proof), Ok)
    assert "1. q (by MP, from p using axiom pq)" in render_text(proof, theory=pr.axioms)
