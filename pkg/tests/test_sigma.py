import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmahall.errors import ConfigurationError
from sigmahall.lattice import sylow
from sigmahall.series import is_soluble
from sigmahall.sigma import (
    PAPER_EXAMPLE,
    SYLOW,
    TWO_CLASS,
    SigmaPartition,
    complete_hall_sigma_sets,
    count_complete_hall_sigma_sets,
    find_theorem_A_set,
    in_H_sigma_definitional,
    in_H_sigma_theoremB,
    induced_group_admissible,
    is_sigma_basis,
    iter_complete_hall_sigma_sets,
    non_permutable_hall_pair,
    theorem_A_hypothesis,
)

from conftest import group

PRESETS = [SYLOW, PAPER_EXAMPLE, TWO_CLASS]
SOLUBLE = ["S3", "S4", "A4", "D8", "metacyclic:7:6", "metacyclic:7:3", "S3*S3", "S3*C3",
           "metacyclic:13:12", "metacyclic:31:6", "dihedral:6", "C2*C2*C3", "metacyclic:7:3*C2"]


def test_class_of_examples():
    assert PAPER_EXAMPLE.class_of(3) == 0 == PAPER_EXAMPLE.class_of(2)
    assert PAPER_EXAMPLE.class_of(7) == 1
    assert PAPER_EXAMPLE.class_of(5) == PAPER_EXAMPLE.class_of(11) == 2
    assert [SYLOW.class_of(p) for p in (2, 3, 5, 7, 11)] == [0, 1, 2, 3, 4]
    with pytest.raises(ConfigurationError):
        SigmaPartition((frozenset({2}),), rest="none").class_of(3)


def test_partition_validation():
    with pytest.raises(ConfigurationError):
        SigmaPartition((frozenset({2}), frozenset({2, 3})))
    with pytest.raises(ConfigurationError):
        SigmaPartition((frozenset({4}),))
    with pytest.raises(ConfigurationError):
        SigmaPartition((frozenset(),))


def test_labels():
    assert PAPER_EXAMPLE.label == "sigma {2,3} {7} rest"
    assert SYLOW.label == "sigma singletons"
    s = SigmaPartition((frozenset({5, 3}), frozenset({2})), rest="singletons")
    assert s.label == "sigma {2} {3,5} singletons"
    assert [s.class_label(i) for i in range(4)] == ["{2}", "{3,5}", "{7}", "{11}"]
    assert s.class_of(7) == 2 and s.class_of(11) == 3


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19]), min_size=1, max_size=8, unique=True),
       st.integers(0, 7), st.sampled_from(["rest", "singletons"]))
def test_class_of_is_a_partition_index(primes, cut, rest):
    cut = min(cut, len(primes))
    classes = [frozenset(primes[:cut])] if cut else []
    classes += [frozenset([p]) for p in primes[cut:]]
    s = SigmaPartition(tuple(classes), rest=rest)
    labels = {}
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]:
        labels.setdefault(s.class_of(p), set()).add(p)
    for i, ps in labels.items():
        if i < len(s.classes):
            assert ps == set(s.classes[i])
        elif rest == "singletons":
            assert len(ps) == 1 and s.class_label(i) == "{%d}" % next(iter(ps))


def test_complete_set_counts(S3, A5, G42):
    assert count_complete_hall_sigma_sets(S3, SYLOW) == 3
    assert len(complete_hall_sigma_sets(S3, SYLOW)) == 3
    assert complete_hall_sigma_sets(A5, SigmaPartition((frozenset({2, 5}),))) == []
    # 7 Hall {2,3}-subgroups and one Sylow 7
    assert count_complete_hall_sigma_sets(G42, PAPER_EXAMPLE) == 7
    assert count_complete_hall_sigma_sets(G42, SYLOW) == 1 * 7 * 7
    assert count_complete_hall_sigma_sets(group("C12"), SYLOW) == 1


def test_complete_set_members_are_hall_for_their_class(G42):
    for sigma in PRESETS:
        for hs in complete_hall_sigma_sets(G42, sigma):
            for i, H in hs.members:
                meeting = sigma.classes_meeting(G42.order)[i]
                from sigmahall.arith import pi_part
                assert H.order == pi_part(G42.order, meeting)


def test_sigma_basis_examples(G42):
    assert all(is_sigma_basis(hs) for hs in complete_hall_sigma_sets(G42, PAPER_EXAMPLE))
    assert not all(is_sigma_basis(hs) for hs in complete_hall_sigma_sets(G42, SYLOW))
    (i, A), (j, B) = non_permutable_hall_pair(G42, SYLOW)
    assert {A.order, B.order} == {2, 3}


@pytest.mark.parametrize("spec", SOLUBLE)
@pytest.mark.parametrize("sigma", PRESETS, ids=["sylow", "example", "two-class"])
def test_pair_scan_matches_enumeration_of_all_sets(spec, sigma):
    G = group(spec)
    sets = complete_hall_sigma_sets(G, sigma)
    assert sets
    literal = all(is_sigma_basis(hs) for hs in sets)
    assert literal == in_H_sigma_definitional(G, sigma)
    assert literal == in_H_sigma_theoremB(G, sigma)


@pytest.mark.parametrize("spec", ["S4", "metacyclic:7:6", "S3*S3"])
def test_sigma_basis_conjugation_invariant(spec):
    G = group(spec)
    for hs in list(iter_complete_hall_sigma_sets(G, SYLOW))[:20]:
        b = is_sigma_basis(hs)
        for g in range(G.order):
            assert is_sigma_basis(hs.conjugate(g)) == b


def test_membership_examples(A5, G42):
    assert in_H_sigma_definitional(G42, PAPER_EXAMPLE)
    assert not in_H_sigma_definitional(G42, SYLOW)
    assert not in_H_sigma_definitional(A5, PAPER_EXAMPLE)
    for n in (1, 6, 30, 60):
        assert in_H_sigma_definitional(group(f"C{n}"), SYLOW)


def test_induced_group_admissible():
    # p = 7 chief factor acted on by a group of order 6
    assert not induced_group_admissible(SYLOW, 7, (2, 3))
    assert induced_group_admissible(PAPER_EXAMPLE, 7, (2, 3))
    assert induced_group_admissible(PAPER_EXAMPLE, 2, (2, 3))
    assert induced_group_admissible(PAPER_EXAMPLE, 2, (3, 7))
    assert not induced_group_admissible(PAPER_EXAMPLE, 2, (5, 7))
    # the group's primes may all lie in p's own class
    assert induced_group_admissible(TWO_CLASS, 3, (2,))


def test_supersolubility_hypothesis_examples(S4, G21):
    (hs,) = [hs for hs in complete_hall_sigma_sets(G21, SYLOW)][:1]
    assert theorem_A_hypothesis(G21, SYLOW, hs)
    for hs in complete_hall_sigma_sets(S4, SYLOW):
        assert not theorem_A_hypothesis(S4, SYLOW, hs)
    assert find_theorem_A_set(S4, SYLOW) is None


@pytest.mark.parametrize("spec", ["S3", "S4", "A4", "metacyclic:7:6", "S3*C3", "metacyclic:13:4"])
@pytest.mark.parametrize("all_members", [False, True])
def test_hypothesis_search_matches_literal_scan(spec, all_members):
    G = group(spec)
    for sigma in PRESETS:
        sets = complete_hall_sigma_sets(G, sigma)
        flags = [theorem_A_hypothesis(G, sigma, hs, all_members=all_members) for hs in sets]
        found = find_theorem_A_set(G, sigma, all_members=all_members)
        assert (found is not None) == any(flags)
        if found is not None:
            assert theorem_A_hypothesis(G, sigma, found, all_members=all_members)
        violator = find_theorem_A_set(G, sigma, all_members=all_members, quantifier="forall")
        assert (violator is None) == all(flags)
        if violator is not None:
            assert not theorem_A_hypothesis(G, sigma, violator, all_members=all_members)


def test_soluble_groups_have_complete_sets():
    for spec in SOLUBLE:
        G = group(spec)
        assert is_soluble(G)
        for sigma in PRESETS:
            assert count_complete_hall_sigma_sets(G, sigma) > 0


def test_sylow_members_for_sylow_partition(S4):
    for hs in itertools.islice(iter_complete_hall_sigma_sets(S4, SYLOW), 5):
        d = hs.as_dict()
        assert d[0].order == 8 and d[1].order == 3
    assert sylow(S4, 2).order == 8
