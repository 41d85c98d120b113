import json

import pytest

from sigmahall.core import permutable
from sigmahall.lattice import all_subgroups, sylow
from sigmahall.sigma import PAPER_EXAMPLE, SYLOW, TWO_CLASS
from sigmahall.toolkit import GroupSpec
from sigmahall.verifiers import (
    NOT_APPLICABLE,
    STATEMENTS,
    counterexample_search,
    lemma_2_1_identity,
    lemma_2_1_sweep,
    run_statements,
    verify_corollary_1_1,
    verify_corollary_1_2,
    verify_corollary_1_3,
    verify_lemma_2_1,
    verify_lemma_2_1_all,
    verify_theorem_A,
    verify_theorem_B,
)

from conftest import group


def test_hall_set_supersolubility_examples(S4, G21):
    v = verify_theorem_A(G21, SYLOW)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (True, True, True)
    assert v.witness is None and v.evidence
    v = verify_theorem_A(S4, SYLOW)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (False, False, True)
    for n in (5, 12, 30):
        assert verify_theorem_A(group(f"C{n}"), PAPER_EXAMPLE).consistent


def test_sylow_set_supersolubility_examples(S3, A5, G21):
    assert verify_corollary_1_1(G21).consistent
    v = verify_corollary_1_1(S3)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (True, True, True)
    v = verify_corollary_1_1(A5)
    assert v.hypothesis_holds is False and v.consistent
    assert verify_corollary_1_1(A5, quantifier="forall").hypothesis_holds is False


def test_cyclic_sylow_examples(S4, G21):
    for n in (1, 2, 12, 60):
        v = verify_corollary_1_2(group(f"C{n}"))
        assert v.hypothesis_holds and v.conclusion_holds
    v = verify_corollary_1_2(G21)
    assert v.hypothesis_holds and v.conclusion_holds
    v = verify_corollary_1_2(S4)
    assert v.hypothesis_holds is False and v.consistent


def test_membership_equivalence_examples(A5, G42):
    for n in (7, 12, 30):
        for s in (SYLOW, PAPER_EXAMPLE, TWO_CLASS):
            v = verify_theorem_B(group(f"C{n}"), s)
            assert v.hypothesis_holds and v.conclusion_holds
    v = verify_theorem_B(G42, SYLOW)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (False, False, True)
    assert "non-permutable pair" in v.evidence and v.witness is None
    v = verify_theorem_B(G42, PAPER_EXAMPLE)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (True, True, True)
    v = verify_theorem_B(A5, SYLOW)
    assert v.status == NOT_APPLICABLE and v.consistent is None


def test_sylow_basis_examples(S4, G42):
    v = verify_corollary_1_3(G42)
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (False, False, True)
    v = verify_corollary_1_3(S4)
    assert (v.hypothesis_holds, v.conclusion_holds) == (True, True)
    for spec in ("C12", "C2*C2", "C3*C3*C2"):
        v = verify_corollary_1_3(group(spec))
        assert v.hypothesis_holds and v.conclusion_holds


def test_triple_identity_examples(S3, S4):
    P3 = sylow(S3, 3)
    twos = [H for H in all_subgroups(S3) if H.order == 2]
    # distinct involution subgroups do not permute, so the precondition fails
    # and the identity fails with it: N & HK = N but (N & H)(N & K) = 1
    v = verify_lemma_2_1(S3, P3, twos[0], twos[1])
    assert (v.hypothesis_holds, v.conclusion_holds, v.consistent) == (False, False, True)
    assert v.witness is None
    v = verify_lemma_2_1(S3, P3, twos[0], twos[0])
    assert v.hypothesis_holds and v.conclusion_holds
    v = verify_lemma_2_1(S3, P3, twos[0], P3)
    assert v.hypothesis_holds and v.conclusion_holds
    subs = all_subgroups(S4)
    for H in subs:
        if H.order in (1, 3, 8, 24):
            for K in subs:
                assert lemma_2_1_identity(H, K, S4.whole)
                assert lemma_2_1_identity(S4.whole, K, H)
    D8 = sylow(S4, 2)
    K = next(K for K in subs if not permutable(D8, K))
    v = verify_lemma_2_1(S4, D8, K, S4.whole)
    assert v.hypothesis_holds is False and v.consistent


def test_triple_sweep_sampled_path_agrees():
    G = group("S4")
    checked, failures = lemma_2_1_sweep(G)
    assert checked > 0 and failures == []
    checked, failures = lemma_2_1_sweep(G, exhaustive_limit=0, samples=200, seed=3)
    assert checked == 200 and failures == []
    assert verify_lemma_2_1_all(G).consistent


def test_run_statements_shape(G42):
    vs = run_statements(G42, [SYLOW, PAPER_EXAMPLE])
    assert [v.statement_id for v in vs] == ["A", "A", "B", "B", "C1.1", "C1.2", "C1.3", "L2.1"]
    assert all(v.consistent for v in vs)
    vs = run_statements(group("S5"), [SYLOW], lemma_max_order=100)
    assert vs[-1].status == NOT_APPLICABLE


def test_counterexample_search_examples(A5):
    assert counterexample_search([], [SYLOW]) == []
    problems = counterexample_search([A5], [SYLOW, PAPER_EXAMPLE], statements=("B",))
    assert len(problems) == 2
    assert all(p.status == NOT_APPLICABLE and p.consistent is None for p in problems)
    specs = [GroupSpec.metacyclic(7, 6), GroupSpec.symmetric(4), GroupSpec.cyclic(10)]
    assert counterexample_search(specs, [SYLOW, PAPER_EXAMPLE, TWO_CLASS]) == []


def test_verdicts_deterministic():
    from sigmahall.toolkit import build, parse_spec_string

    def run():
        G = build(parse_spec_string("metacyclic:7:6*C2"))
        return json.dumps([v.to_dict() for v in run_statements(G, [SYLOW, PAPER_EXAMPLE])])

    assert run() == run()


def test_statement_ids():
    assert STATEMENTS == ("A", "B", "C1.1", "C1.2", "C1.3", "L2.1")
