"""Executable statements of the supersolubility and sigma-basis theorems.

Each ``verify_*`` function evaluates hypothesis and conclusion on one
group and returns a :class:`Verdict`.  Implications are consistent unless
the hypothesis holds and the conclusion fails; equivalences are consistent
when both sides agree.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels
from .arith import prime_factors
from .core import (
    GroupLike,
    Subgroup,
    _bits_of,
    as_subgroup,
    intersection,
    permutable,
    product_mask,
)
from .errors import ResourceLimitError
from .lattice import all_subgroups, is_hall, sylow
from .series import chief_series, is_cyclic, is_soluble, is_supersoluble
from .sigma import (
    SYLOW,
    SigmaPartition,
    failing_chief_factor,
    find_theorem_A_set,
    in_H_sigma_theoremB,
    non_permutable_hall_pair,
)

STATEMENTS = ("A", "B", "C1.1", "C1.2", "C1.3", "L2.1")
SIGMA_STATEMENTS = ("A", "B")

CHECKED, SKIPPED, NOT_APPLICABLE = "checked", "skipped", "not_applicable"


@dataclass(frozen=True)
class Verdict:
    statement_id: str
    group_label: str
    sigma_label: str
    hypothesis_holds: bool | None
    conclusion_holds: bool | None
    consistent: bool | None
    witness: str | None = None
    status: str = CHECKED
    reason: str | None = None
    evidence: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def is_problem(self) -> bool:
        return self.status != CHECKED or self.consistent is False


def _label(G: GroupLike) -> str:
    X = as_subgroup(G)
    if X.bits != X.parent.whole.bits:
        return f"subgroup[{X.fingerprint[:12]}]"
    return X.parent.label or f"group[{X.parent.fingerprint[:12]}]"


def _implication(sid, G, sigma_label, hyp, concl, witness_fn, evidence=None) -> Verdict:
    consistent = not (hyp and not concl)
    return Verdict(sid, _label(G), sigma_label, hyp, concl, consistent,
                   None if consistent else witness_fn(), evidence=evidence)


def _skipped(sid, G, sigma_label, exc: Exception) -> Verdict:
    return Verdict(sid, _label(G), sigma_label, None, None, None, status=SKIPPED,
                   reason=f"{type(exc).__name__}: {exc}")


def _not_applicable(sid, G, sigma_label, reason) -> Verdict:
    return Verdict(sid, _label(G), sigma_label, None, None, None, status=NOT_APPLICABLE,
                   reason=reason)


def describe_subgroup(H: Subgroup) -> str:
    gens = " ".join(str(g) for g in H.generators) or "()"
    return f"order {H.order} <{gens}>"


def describe_factor(f) -> str:
    return (f"chief factor of order {f.factor_order} (|below| = {f.below.order}, "
            f"|above| = {f.above.order}) with induced automorphism group of order "
            f"{f.induced_aut_order}")


def _guard(fn):
    def wrapper(G, *args, **kwargs):
        try:
            return fn(G, *args, **kwargs)
        except ResourceLimitError as exc:
            sigma = kwargs.get("sigma") or next(
                (a for a in args if isinstance(a, SigmaPartition)), SYLOW)
            return _skipped(fn.statement_id, G, sigma.label, exc)
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _statement(sid):
    def deco(fn):
        fn.statement_id = sid
        return _guard(fn)
    return deco


def _pair_evidence(pair) -> str:
    (i, A), (j, B) = pair
    return f"non-permutable pair: {describe_subgroup(A)} and {describe_subgroup(B)}"


@_statement("A")
def verify_theorem_A(G: GroupLike, sigma: SigmaPartition, quantifier: str = "exists") -> Verdict:
    """Supersoluble Hall members whose non-cyclic members' maximal subgroups
    permute with the other members force ``G`` supersoluble."""
    found = find_theorem_A_set(G, sigma, all_members=False, quantifier=quantifier)
    hyp = found is not None if quantifier == "exists" else found is None
    concl = is_supersoluble(G)
    ev = None
    if quantifier == "exists" and found is not None:
        ev = "hypothesis set: " + "; ".join(describe_subgroup(H) for H in found)
    return _implication("A", G, sigma.label, hyp, concl,
                        lambda: f"G is not supersoluble although the hypothesis holds ({ev})", ev)


@_statement("C1.1")
def verify_corollary_1_1(G: GroupLike, quantifier: str = "exists") -> Verdict:
    """Sylow sets where every member's maximal subgroups permute with the others."""
    found = find_theorem_A_set(G, SYLOW, all_members=True, quantifier=quantifier)
    hyp = found is not None if quantifier == "exists" else found is None
    concl = is_supersoluble(G)
    ev = None
    if quantifier == "exists" and found is not None:
        ev = "Sylow set: " + "; ".join(describe_subgroup(H) for H in found)
    return _implication("C1.1", G, SYLOW.label, hyp, concl,
                        lambda: f"G is not supersoluble although the hypothesis holds ({ev})", ev)


@_statement("C1.2")
def verify_corollary_1_2(G: GroupLike) -> Verdict:
    """All Sylow subgroups cyclic implies supersoluble."""
    X = as_subgroup(G)
    noncyclic = [p for p in prime_factors(X.order) if not is_cyclic(sylow(X, p))]
    hyp = not noncyclic
    concl = is_supersoluble(X)
    ev = None if hyp else f"non-cyclic Sylow {noncyclic[0]}-subgroup"
    return _implication("C1.2", X, SYLOW.label, hyp, concl,
                        lambda: "all Sylow subgroups cyclic but G is not supersoluble", ev)


@_statement("B")
def verify_theorem_B(G: GroupLike, sigma: SigmaPartition) -> Verdict:
    """Definitional membership in H_sigma agrees with the chief-factor criterion."""
    if not is_soluble(G):
        return _not_applicable("B", G, sigma.label, "group is not soluble")
    pair = non_permutable_hall_pair(G, sigma)
    bad = failing_chief_factor(G, sigma)
    left, right = pair is None, bad is None
    notes = []
    if pair is not None:
        notes.append(_pair_evidence(pair))
    if bad is not None:
        notes.append("failing " + describe_factor(bad))
    ev = "; ".join(notes) or None
    consistent = left == right
    return Verdict("B", _label(G), sigma.label, left, right, consistent,
                   None if consistent else ev, evidence=ev)


def sylow_basis_condition_failure(G: GroupLike):
    """First chief factor whose induced automorphism group has two or more
    prime divisors other than the factor's prime, or ``None``."""
    for f in chief_series(G):
        p = f.prime
        if len(set(prime_factors(f.induced_aut_order)) - {p}) > 1:
            return f
    return None


@_statement("C1.3")
def verify_corollary_1_3(G: GroupLike) -> Verdict:
    """Every complete Sylow set is a Sylow basis iff each induced automorphism
    group has at most one prime divisor besides the factor's prime."""
    if not is_soluble(G):
        return _not_applicable("C1.3", G, SYLOW.label, "group is not soluble")
    pair = non_permutable_hall_pair(G, SYLOW)
    bad = sylow_basis_condition_failure(G)
    left, right = pair is None, bad is None
    internal = in_H_sigma_theoremB(G, SYLOW)
    consistent = left == right == internal
    notes = []
    if pair is not None:
        notes.append(_pair_evidence(pair))
    if bad is not None:
        notes.append("failing " + describe_factor(bad))
    if right != internal:
        notes.append(f"reformulated condition ({right}) disagrees with the sigma criterion "
                     f"at the Sylow partition ({internal})")
    ev = "; ".join(notes) or None
    return Verdict("C1.3", _label(G), SYLOW.label, left, right, consistent,
                   None if consistent else ev, evidence=ev)


def lemma_2_1_precondition(G: GroupLike, H: GroupLike, K: GroupLike, N: GroupLike) -> bool:
    H, K, N = as_subgroup(H), as_subgroup(K), as_subgroup(N)
    return (is_hall(H, G) and permutable(H, K) and permutable(H, N) and permutable(K, N))


def lemma_2_1_identity(H: GroupLike, K: GroupLike, N: GroupLike) -> bool:
    """``N & HK == (N & H)(N & K)`` as element sets."""
    H, K, N = as_subgroup(H), as_subgroup(K), as_subgroup(N)
    lhs = N.mask & product_mask(H, K)
    rhs = product_mask(intersection(N, H), intersection(N, K))
    return bool(np.array_equal(lhs, rhs))


def verify_lemma_2_1(G: GroupLike, H: GroupLike, K: GroupLike, N: GroupLike) -> Verdict:
    """Pairwise permutable H, K, N with H Hall satisfy N & HK = (N & H)(N & K)."""
    hyp = lemma_2_1_precondition(G, H, K, N)
    concl = lemma_2_1_identity(H, K, N)
    return _implication("L2.1", G, "-", hyp, concl,
                        lambda: "identity fails for H = {}, K = {}, N = {}".format(
                            describe_subgroup(as_subgroup(H)), describe_subgroup(as_subgroup(K)),
                            describe_subgroup(as_subgroup(N))))


def lemma_2_1_sweep(G: GroupLike, exhaustive_limit: int = 500, samples: int = 1000,
                    seed: int = 0) -> tuple[int, list[tuple[Subgroup, Subgroup, Subgroup]]]:
    """Check the identity over triples of pairwise permutable subgroups with H Hall.

    Exhaustive when the lattice has at most ``exhaustive_limit`` subgroups:
    there the identity is checked by cardinality, which is exact because
    ``(N & H)(N & K)`` always lies inside ``N & HK`` and
    ``|(N & H)(N & K)| = |N & H||N & K| / |N & H & K|``.  Larger lattices get
    ``samples`` random admissible triples checked as element sets.

    Returns (triples checked, failing triples).
    """
    X = as_subgroup(G)
    P = X.parent
    subs = list(all_subgroups(X))
    halls = [i for i, H in enumerate(subs) if is_hall(H, X)]
    failures = []
    if len(subs) <= exhaustive_limit:
        flat = np.concatenate([H.idx for H in subs]).astype(np.int32)
        offsets = np.zeros(len(subs) + 1, dtype=np.int64)
        offsets[1:] = np.cumsum([H.order for H in subs])
        perm = _kernels.permutability_matrix(P.table, flat, offsets).astype(bool)
        masks = np.stack([H.mask for H in subs]).astype(np.int64)
        inter = masks @ masks.T
        where = {H.bits: i for i, H in enumerate(subs)}
        checked = 0
        for h in halls:
            for k in np.flatnonzero(perm[h]):
                hk = where[_bits_of(product_mask(subs[h], subs[k]))]
                hck = where[subs[h].bits & subs[k].bits]
                ns = np.flatnonzero(perm[h] & perm[k])
                lhs = inter[ns, hk] * inter[ns, hck]
                rhs = inter[ns, h] * inter[ns, k]
                checked += ns.size
                for n in ns[lhs != rhs]:
                    failures.append((subs[h], subs[int(k)], subs[int(n)]))
        return checked, failures
    rng = random.Random(seed)
    if not halls:
        return 0, []
    for _ in range(samples):
        H = subs[rng.choice(halls)]
        ks = [K for K in subs if permutable(H, K)]
        K = rng.choice(ks)
        ns = [N for N in ks if permutable(K, N)]
        N = rng.choice(ns)
        if not lemma_2_1_identity(H, K, N):
            failures.append((H, K, N))
    return samples, failures


def verify_lemma_2_1_all(G: GroupLike, exhaustive_limit: int = 500, samples: int = 1000,
                         seed: int = 0) -> Verdict:
    try:
        checked, failures = lemma_2_1_sweep(G, exhaustive_limit, samples, seed)
    except ResourceLimitError as exc:
        return _skipped("L2.1", G, "-", exc)
    witness = None
    if failures:
        H, K, N = failures[0]
        witness = "identity fails for H = {}, K = {}, N = {}".format(
            describe_subgroup(H), describe_subgroup(K), describe_subgroup(N))
    return Verdict("L2.1", _label(G), "-", checked > 0, not failures, not failures, witness,
                   evidence=f"{checked} admissible triples checked")


def run_statements(G: GroupLike, sigmas, statements=STATEMENTS, *, quantifier_A="exists",
                   quantifier_C11="exists", lemma_max_order: int = 100) -> list[Verdict]:
    """All verdicts for one group: sigma statements once per partition,
    the rest once."""
    out: list[Verdict] = []
    X = as_subgroup(G)
    for sid in statements:
        if sid == "A":
            out.extend(verify_theorem_A(X, s, quantifier=quantifier_A) for s in sigmas)
        elif sid == "B":
            out.extend(verify_theorem_B(X, s) for s in sigmas)
        elif sid == "C1.1":
            out.append(verify_corollary_1_1(X, quantifier=quantifier_C11))
        elif sid == "C1.2":
            out.append(verify_corollary_1_2(X))
        elif sid == "C1.3":
            out.append(verify_corollary_1_3(X))
        elif sid == "L2.1":
            if X.order <= lemma_max_order:
                out.append(verify_lemma_2_1_all(X))
            else:
                out.append(_not_applicable("L2.1", X, "-",
                                           f"order {X.order} above the triple sweep bound {lemma_max_order}"))
        else:
            raise ValueError(f"unknown statement {sid!r}")
    return out


def counterexample_search(catalog, sigmas, statements=STATEMENTS, **kwargs) -> list[Verdict]:
    """Run every statement over ``catalog`` (groups or group specs) and return
    only the inconsistent, skipped and not-applicable verdicts."""
    from .toolkit.constructions import GroupSpec, build

    problems = []
    for item in catalog:
        if isinstance(item, GroupSpec):
            try:
                G = build(item)
            except ResourceLimitError as exc:
                problems.append(Verdict("*", item.label, "-", None, None, None,
                                        status=SKIPPED, reason=f"ResourceLimitError: {exc}"))
                continue
        else:
            G = item
        problems.extend(v for v in run_statements(G, sigmas, statements, **kwargs) if v.is_problem)
    return problems
