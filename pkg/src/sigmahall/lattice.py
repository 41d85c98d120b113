"""Subgroup lattice, maximal and normal subgroups, Frattini, Sylow and Hall subgroups.

Every function accepts a :class:`~sigmahall.core.Group` or a
:class:`~sigmahall.core.Subgroup`; results are subgroups of the same parent
group.  Returned lists are ordered by ascending order, then fingerprint.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .arith import is_prime_power, p_part, pi_part, prime_factors
from .core import (
    GroupLike,
    Subgroup,
    _bits_of,
    as_subgroup,
    conjugate_subgroup,
    is_normal,
    join,
    normalizer,
    span,
)
from .errors import ResourceLimitError


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    parent: Subgroup
    subgroups: tuple[Subgroup, ...]

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {H.bits: i for i, H in enumerate(self.subgroups)}

    def find(self, H: Subgroup) -> int:
        """Position of ``H`` in :attr:`subgroups`."""
        return self._index[H.bits]

    def __contains__(self, H) -> bool:
        return isinstance(H, Subgroup) and H.bits in self._index

    @cached_property
    def inclusion(self) -> frozenset[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``subgroups[i] <= subgroups[j]``."""
        out = set()
        subs = self.subgroups
        for i, A in enumerate(subs):
            for j in range(i, len(subs)):
                B = subs[j]
                if B.order % A.order == 0 and A.bits & B.bits == A.bits:
                    out.add((i, j))
        return frozenset(out)

    def mask_matrix(self) -> np.ndarray:
        """``(len, parent order)`` 0/1 matrix of element membership."""
        return np.stack([H.mask for H in self.subgroups])


def _sorted(subs) -> tuple[Subgroup, ...]:
    return tuple(sorted(subs, key=Subgroup.sort_key))


def _prime_power_cyclics(X: Subgroup) -> list[tuple[int, int]]:
    P = X.parent
    orders = P.element_orders
    seen: dict[int, int] = {}
    table = P.table
    for x in X.idx:
        if orders[x] > 1 and is_prime_power(int(orders[x])):
            mask, _ = _kernels.closure(table, np.asarray([x], dtype=np.int32))
            bits = _bits_of(mask)
            seen.setdefault(bits, int(x))
    return [(g, bits) for bits, g in seen.items()]


def _enumerate(X: Subgroup) -> list[Subgroup]:
    P = X.parent
    table = P.table
    cap = P.limits.max_subgroups
    cyclics = _prime_power_cyclics(X)
    trivial = P.trivial
    found = {trivial.bits: trivial}
    queue = deque([trivial])
    while queue:
        K = queue.popleft()
        for z, zbits in cyclics:
            if zbits & K.bits == zbits:
                continue
            gens = K.gens + (z,)
            mask, _ = _kernels.closure(table, np.asarray(gens, dtype=np.int32))
            bits = _bits_of(mask)
            if bits in found:
                continue
            J = P._from_mask(mask, gens)
            found[bits] = J
            if len(found) > cap:
                raise ResourceLimitError(f"subgroup count exceeds max_subgroups={cap}",
                                         limit=cap, partial=len(found))
            queue.append(J)
    return list(found.values())


def all_subgroups(G: GroupLike) -> SubgroupLattice:
    """Every subgroup of ``G`` exactly once.

    Starts from the trivial group and repeatedly joins known subgroups with
    cyclic subgroups of prime-power order until nothing new appears.
    """
    X = as_subgroup(G)
    P = X.parent
    key = ("lattice", X.bits)
    hit = P._memo.get(key)
    if hit is not None:
        return hit
    whole = P._memo.get(("lattice", P.whole.bits))
    if whole is not None:
        subs = [H for H in whole.subgroups if H.bits & X.bits == H.bits]
    else:
        subs = _enumerate(X)
    lat = SubgroupLattice(X, _sorted(subs))
    P._memo[key] = lat
    return lat


def maximal_subgroups(G: GroupLike) -> list[Subgroup]:
    X = as_subgroup(G)
    P = X.parent
    key = ("maximal", X.bits)
    if key in P._memo:
        return P._memo[key]
    proper = [H for H in all_subgroups(X) if H.bits != X.bits]
    out = []
    for M in proper:
        above = (K for K in proper
                 if K.order > M.order and K.order % M.order == 0 and K.bits & M.bits == M.bits)
        if next(above, None) is None:
            out.append(M)
    out = list(_sorted(out))
    P._memo[key] = out
    return out


def frattini(G: GroupLike) -> Subgroup:
    """Intersection of all maximal subgroups (``G`` itself if trivial)."""
    X = as_subgroup(G)
    mask = X.mask.copy()
    for M in maximal_subgroups(X):
        mask &= M.mask
    return X.parent._from_mask(mask)


def normal_subgroups(G: GroupLike) -> list[Subgroup]:
    X = as_subgroup(G)
    P = X.parent
    key = ("normal", X.bits)
    if key not in P._memo:
        P._memo[key] = [H for H in all_subgroups(X) if is_normal(H, X)]
    return P._memo[key]


def minimal_normal_subgroups(G: GroupLike) -> list[Subgroup]:
    X = as_subgroup(G)
    nontrivial = [N for N in normal_subgroups(X) if N.order > 1]
    return [N for N in nontrivial
            if not any(M.order < N.order and M.bits & N.bits == M.bits for M in nontrivial)]


def _p_element_of_coset_order_p(N: Subgroup, P_: Subgroup, p: int) -> int | None:
    G = N.parent
    for x in N.idx:
        if not P_.mask[x] and P_.mask[G.power(int(x), p)]:
            return int(x)
    return None


def sylow(G: GroupLike, p: int) -> Subgroup:
    """One Sylow p-subgroup, grown from a cyclic p-subgroup inside normalizers."""
    X = as_subgroup(G)
    P = X.parent
    target = p_part(X.order, p)
    if target == 1:
        return P.trivial
    orders = P.element_orders
    start = next(int(x) for x in X.idx
                 if orders[x] > 1 and p_part(int(orders[x]), p) == orders[x])
    S = span(P, [start])
    while S.order < target:
        N = normalizer(X, S)
        x = _p_element_of_coset_order_p(N, S, p)
        # p divides |N_X(S) : S| whenever S is not Sylow, so x exists
        assert x is not None, "normalizer climbing stalled"
        S = span(P, S.gens + (x,))
    return S


def all_sylow(G: GroupLike, p: int) -> list[Subgroup]:
    X = as_subgroup(G)
    S = sylow(X, p)
    found = {S.bits: S}
    if S.order > 1:
        for g in X.idx:
            C = conjugate_subgroup(S, int(g))
            found.setdefault(C.bits, C)
    return list(_sorted(found.values()))


def sylow_by_lattice(G: GroupLike, p: int) -> list[Subgroup]:
    X = as_subgroup(G)
    return hall(X, {p})


def hall(G: GroupLike, pi) -> list[Subgroup]:
    """All subgroups whose order is the pi-part of ``|G|``."""
    X = as_subgroup(G)
    target = pi_part(X.order, set(pi))
    return [H for H in all_subgroups(X) if H.order == target]


def is_hall(H: GroupLike, G: GroupLike) -> bool:
    """``gcd(|H|, |G:H|) == 1``."""
    from math import gcd

    H, X = as_subgroup(H), as_subgroup(G)
    return gcd(H.order, X.order // H.order) == 1


def primes(G: GroupLike) -> tuple[int, ...]:
    return prime_factors(as_subgroup(G).order)


__all__ = [
    "SubgroupLattice", "all_subgroups", "maximal_subgroups", "frattini", "normal_subgroups",
    "minimal_normal_subgroups", "sylow", "all_sylow", "sylow_by_lattice", "hall", "is_hall",
    "primes", "join",
]
