"""Partitions of the primes, complete Hall sigma-sets and sigma-bases.

A :class:`SigmaPartition` lists finitely many disjoint prime classes.  The
remaining primes are either absent, gathered into one implicit ``rest``
class, or each placed in its own singleton class (``singletons``; the
partition into primes is ``SigmaPartition((), rest="singletons")``).

Class indices enumerate the partition: explicit classes first (ordered by
smallest prime), then the rest class or the singleton classes in
increasing prime order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .arith import is_prime, prime_factors
from .core import GroupLike, Subgroup, as_subgroup, permutable
from .errors import ConfigurationError
from .lattice import hall, maximal_subgroups
from .series import chief_series, is_cyclic, is_soluble, is_supersoluble

REST_MODES = ("none", "rest", "singletons")


@dataclass(frozen=True)
class SigmaPartition:
    classes: tuple[frozenset[int], ...]
    rest: str = "rest"

    def __post_init__(self):
        if self.rest not in REST_MODES:
            raise ConfigurationError(f"unknown rest mode {self.rest!r}")
        classes = tuple(frozenset(int(p) for p in c) for c in self.classes)
        seen: set[int] = set()
        for c in classes:
            if not c:
                raise ConfigurationError("sigma classes must be non-empty")
            for p in c:
                if not is_prime(p):
                    raise ConfigurationError(f"{p} is not a prime")
                if p in seen:
                    raise ConfigurationError(f"classes not disjoint: {p} appears twice")
                seen.add(p)
        object.__setattr__(self, "classes", tuple(sorted(classes, key=min)))

    @property
    def has_rest(self) -> bool:
        return self.rest != "none"

    @property
    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.classes)

    def class_of(self, p: int) -> int:
        for i, c in enumerate(self.classes):
            if p in c:
                return i
        k = len(self.classes)
        if self.rest == "rest":
            return k
        if self.rest == "singletons":
            if not is_prime(p):
                raise ConfigurationError(f"{p} is not a prime")
            covered = self.covered
            return k + sum(1 for q in range(2, p) if is_prime(q) and q not in covered)
        raise ConfigurationError(f"prime {p} is not covered by sigma {self.label}")

    def class_label(self, i: int) -> str:
        k = len(self.classes)
        if i < k:
            return _fmt_class(self.classes[i])
        if self.rest == "rest" and i == k:
            return "rest"
        if self.rest == "singletons":
            covered = self.covered
            q = 1
            for _ in range(i - k + 1):
                q += 1
                while not is_prime(q) or q in covered:
                    q += 1
            return "{" + str(q) + "}"
        raise ConfigurationError(f"sigma {self.label} has no class {i}")

    def classes_meeting(self, n: int) -> dict[int, frozenset[int]]:
        """Class index -> primes of ``n`` in that class, for classes meeting pi(n)."""
        out: dict[int, set[int]] = {}
        for p in prime_factors(n):
            out.setdefault(self.class_of(p), set()).add(p)
        return {i: frozenset(ps) for i, ps in sorted(out.items())}

    @property
    def label(self) -> str:
        parts = [_fmt_class(c) for c in self.classes]
        if self.rest != "none":
            parts.append(self.rest)
        return "sigma " + " ".join(parts) if parts else "sigma"

    def __str__(self):
        return self.label


def _fmt_class(c) -> str:
    return "{" + ",".join(str(p) for p in sorted(c)) + "}"


SYLOW = SigmaPartition((), rest="singletons")
PAPER_EXAMPLE = SigmaPartition((frozenset({2, 3}), frozenset({7})), rest="rest")
TWO_CLASS = SigmaPartition((frozenset({2, 3}),), rest="rest")

PRESETS = {"sylow": SYLOW, "paper-example": PAPER_EXAMPLE, "two-class": TWO_CLASS}


def class_of(sigma: SigmaPartition, p: int) -> int:
    return sigma.class_of(p)


@dataclass(frozen=True)
class HallSet:
    """One complete Hall sigma-set: class index -> Hall sigma_i-subgroup."""

    group: Subgroup
    sigma: SigmaPartition
    members: tuple[tuple[int, Subgroup], ...]

    def __iter__(self):
        return (H for _, H in self.members)

    def __len__(self):
        return len(self.members)

    def as_dict(self) -> dict[int, Subgroup]:
        return dict(self.members)

    def conjugate(self, g) -> "HallSet":
        from .core import conjugate_subgroup

        return HallSet(self.group, self.sigma,
                       tuple((i, conjugate_subgroup(H, g)) for i, H in self.members))


def hall_candidates(G: GroupLike, sigma: SigmaPartition) -> dict[int, list[Subgroup]]:
    """For each class meeting pi(G), all Hall sigma_i-subgroups of ``G``."""
    X = as_subgroup(G)
    return {i: hall(X, ps) for i, ps in sigma.classes_meeting(X.order).items()}


def count_complete_hall_sigma_sets(G: GroupLike, sigma: SigmaPartition) -> int:
    n = 1
    for subs in hall_candidates(G, sigma).values():
        n *= len(subs)
    return n


def iter_complete_hall_sigma_sets(G: GroupLike, sigma: SigmaPartition) -> Iterator[HallSet]:
    X = as_subgroup(G)
    cands = hall_candidates(X, sigma)
    keys = list(cands)
    for combo in itertools.product(*(cands[k] for k in keys)):
        yield HallSet(X, sigma, tuple(zip(keys, combo)))


def complete_hall_sigma_sets(G: GroupLike, sigma: SigmaPartition) -> list[HallSet]:
    """Every complete Hall sigma-set of ``G``; empty if ``G`` has none."""
    return list(iter_complete_hall_sigma_sets(G, sigma))


def is_sigma_basis(hs: HallSet) -> bool:
    members = [H for H in hs]
    return all(permutable(A, B) for A, B in itertools.combinations(members, 2))


def non_permutable_hall_pair(G: GroupLike, sigma: SigmaPartition):
    """A pair of Hall subgroups from different classes with AB != BA, or ``None``.

    Every such pair lies in some complete Hall sigma-set (each class has a
    Hall subgroup), so ``None`` means every complete set is a sigma-basis.
    """
    cands = hall_candidates(G, sigma)
    if any(not subs for subs in cands.values()):
        return None
    for (i, As), (j, Bs) in itertools.combinations(cands.items(), 2):
        for A in As:
            for B in Bs:
                if not permutable(A, B):
                    return (i, A), (j, B)
    return None


def in_H_sigma_definitional(G: GroupLike, sigma: SigmaPartition) -> bool:
    """Soluble, and every complete Hall sigma-set is a sigma-basis."""
    return is_soluble(G) and non_permutable_hall_pair(G, sigma) is None


def induced_group_admissible(sigma: SigmaPartition, p: int, aut_primes) -> bool:
    """Whether an induced automorphism group with primes ``aut_primes`` on a
    p-chief factor is a sigma_i-group with p outside sigma_i, or a
    (sigma_i u sigma_j)-group with p in sigma_i.

    Both cases say the same thing: at most one class other than p's class
    meets the group's primes.
    """
    home = sigma.class_of(p)
    others = {sigma.class_of(q) for q in aut_primes} - {home}
    return len(others) <= 1


def failing_chief_factor(G: GroupLike, sigma: SigmaPartition):
    """First chief factor violating the induced-group condition, or ``None``."""
    for f in chief_series(G):
        p = f.prime
        if p is None:
            return f
        if not induced_group_admissible(sigma, p, prime_factors(f.induced_aut_order)):
            return f
    return None


def in_H_sigma_theoremB(G: GroupLike, sigma: SigmaPartition) -> bool:
    """Soluble, and the induced automorphism group on every chief factor is admissible."""
    return is_soluble(G) and failing_chief_factor(G, sigma) is None


def _maximal_permute_with(H: Subgroup, K: Subgroup) -> bool:
    return all(permutable(V, K) for V in maximal_subgroups(H))


def theorem_A_hypothesis(G: GroupLike, sigma: SigmaPartition, hs: HallSet,
                         all_members: bool = False) -> bool:
    """Members supersoluble, and every maximal subgroup of each non-cyclic
    member permutes with all other members.

    ``all_members=True`` drops the non-cyclic restriction (the Sylow-set
    condition where every member's maximal subgroups must permute).
    """
    members = [H for H in hs]
    if not all(is_supersoluble(H) for H in members):
        return False
    for i, H in enumerate(members):
        if not all_members and is_cyclic(H):
            continue
        for j, K in enumerate(members):
            if i != j and not _maximal_permute_with(H, K):
                return False
    return True


def find_theorem_A_set(G: GroupLike, sigma: SigmaPartition, all_members: bool = False,
                       quantifier: str = "exists"):
    """Search the complete Hall sigma-sets against the supersolubility hypothesis.

    With ``quantifier="exists"`` returns a satisfying :class:`HallSet` or
    ``None``.  With ``quantifier="forall"`` returns ``None`` when every
    complete set satisfies it (and at least one exists), otherwise a
    violating set, or ``False`` if there is no complete set at all.

    The hypothesis is a conjunction of per-member and per-pair conditions,
    so the search backtracks class by class with memoised pair checks.
    """
    X = as_subgroup(G)
    cands = hall_candidates(X, sigma)
    keys = list(cands)
    if any(not cands[k] for k in keys):
        return None if quantifier == "exists" else False

    def unary(H):
        return is_supersoluble(H)

    memo: dict[tuple[int, int], bool] = {}

    def pair_ok(H, K):
        k = (H.bits, K.bits)
        if k not in memo:
            ok = True
            if all_members or not is_cyclic(H):
                ok = _maximal_permute_with(H, K)
            if ok and (all_members or not is_cyclic(K)):
                ok = _maximal_permute_with(K, H)
            memo[k] = ok
        return memo[k]

    if quantifier == "forall":
        for k in keys:
            for H in cands[k]:
                if not unary(H):
                    return _hall_set(X, sigma, keys, _with(keys, k, H, cands))
        for a, b in itertools.combinations(keys, 2):
            for H in cands[a]:
                for K in cands[b]:
                    if not pair_ok(H, K):
                        chosen = {j: cands[j][0] for j in keys}
                        chosen[a], chosen[b] = H, K
                        return _hall_set(X, sigma, keys, chosen)
        return None

    options = {k: [H for H in cands[k] if unary(H)] for k in keys}
    order = sorted(keys, key=lambda k: len(options[k]))
    chosen: dict[int, Subgroup] = {}

    def backtrack(pos):
        if pos == len(order):
            return True
        k = order[pos]
        for H in options[k]:
            if all(pair_ok(H, chosen[j]) for j in order[:pos]):
                chosen[k] = H
                if backtrack(pos + 1):
                    return True
                del chosen[k]
        return False

    if backtrack(0):
        return _hall_set(X, sigma, keys, chosen)
    return None


def _with(keys, k, H, cands):
    chosen = {j: cands[j][0] for j in keys}
    chosen[k] = H
    return chosen


def _hall_set(X, sigma, keys, chosen) -> HallSet:
    return HallSet(X, sigma, tuple((k, chosen[k]) for k in keys))
