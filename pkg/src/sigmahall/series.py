"""Quotients, chief series, chief-factor centralizers and group-class tests."""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .arith import is_prime, is_prime_power, p_part, prime_factors
from .core import (
    Group,
    GroupLike,
    Permutation,
    Subgroup,
    as_subgroup,
    core,
    generate,
    is_normal,
    span,
)
from .errors import PreconditionError, StructuralError
from .lattice import all_subgroups, normal_subgroups, sylow


@dataclass(frozen=True)
class Quotient:
    """``group`` is ``G/N`` as a permutation group.

    ``projection[i]`` is the quotient element index of parent element ``i``
    (``-1`` for parent elements outside ``G``).
    """

    group: Group
    projection: np.ndarray
    kernel: Subgroup

    def image(self, g) -> int:
        P = self.kernel.parent
        i = int(g) if isinstance(g, (int, np.integer)) else P.index(g)
        return int(self.projection[i])


def _coset_action(X: Subgroup, M: Subgroup):
    """Action of X by left multiplication on left cosets xM.

    ``g`` sends ``xM`` to ``(g x)M`` so that ``g o h`` acts as ``g`` after ``h``.
    """
    P = X.parent
    t = P.table
    xs = X.idx
    # canonical coset label: smallest index in xM
    reps_of = t[np.ix_(xs, M.idx)].min(axis=1)
    labels, coset_of = np.unique(reps_of, return_inverse=True)
    lookup = np.full(P.order, -1, dtype=np.int64)
    lookup[xs] = coset_of
    m = labels.shape[0]

    def act(g: int) -> Permutation:
        return Permutation._unchecked(tuple(int(v) for v in lookup[t[g, labels]]))

    return act, m


def quotient(G: GroupLike, N: GroupLike) -> Quotient:
    """``G/N`` realised by the action of ``G`` on cosets.

    The regular action on cosets of ``N`` is used when its degree fits the
    degree cap; otherwise ``G`` acts on the cosets of the largest subgroup
    ``M >= N`` with core ``N``, which is faithful for ``G/N`` on fewer points.
    """
    X, N = as_subgroup(G), as_subgroup(N)
    if X.parent is not N.parent:
        raise StructuralError("subgroups belong to different parent groups")
    if not (N <= X and is_normal(N, X)):
        raise PreconditionError("quotient requires a normal subgroup")
    P = X.parent
    M = N
    if X.order // N.order > P.limits.max_degree:
        for H in sorted(all_subgroups(X), key=lambda H: -H.order):
            if H.order < X.order and N <= H and core(X, H).bits == N.bits:
                M = H
                break
    act, m = _coset_action(X, M)
    gens = [act(g) for g in X.gens]
    Q = generate(gens, m, P.limits)
    projection = np.full(P.order, -1, dtype=np.int64)
    for x in X.idx:
        projection[x] = Q.index(act(int(x)))
    return Quotient(Q, projection, N)


@dataclass(frozen=True)
class ChiefFactor:
    below: Subgroup
    above: Subgroup
    factor_order: int
    factor_primes: tuple[int, ...]
    induced_aut_order: int

    @property
    def prime(self) -> int | None:
        """The unique prime of an abelian chief factor, else ``None``."""
        return self.factor_primes[0] if len(self.factor_primes) == 1 else None

    def invariant(self) -> tuple[int, int]:
        return (self.factor_order, self.induced_aut_order)


@dataclass(frozen=True)
class ChiefSeries:
    group: Subgroup
    factors: tuple[ChiefFactor, ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def orders(self) -> list[int]:
        return [f.factor_order for f in self.factors]


def chief_factor_centralizer(G: GroupLike, factor: ChiefFactor) -> Subgroup:
    """``{g in G : g^-1 h g h^-1 in K for all h in H}`` for the factor ``H/K``."""
    X = as_subgroup(G)
    P = X.parent
    t, inv = P.table, P.inverse
    K, H = factor.below, factor.above
    g = X.idx.astype(np.int64)
    keep = np.ones(g.shape[0], dtype=bool)
    step = max(1, 2_000_000 // max(1, g.shape[0]))
    for s in range(0, H.order, step):
        h = H.idx[s:s + step].astype(np.int64)
        conj = t[t[inv[g][:, None], h[None, :]], g[:, None]]
        comm = t[conj, inv[h][None, :]]
        keep &= K.mask[comm].astype(bool).all(axis=1)
    return Subgroup(P, X.idx[keep])


def _make_factor(X: Subgroup, K: Subgroup, H: Subgroup) -> ChiefFactor:
    n = H.order // K.order
    f = ChiefFactor(K, H, n, prime_factors(n), 0)
    C = chief_factor_centralizer(X, f)
    return ChiefFactor(K, H, n, f.factor_primes, X.order // C.order)


def chief_series(G: GroupLike, seed: int | None = None) -> ChiefSeries:
    """A chief series from the trivial subgroup up to ``G``.

    Each step picks an inclusion-minimal normal subgroup strictly above the
    current term.  Ties go to the smallest (order, fingerprint) unless a
    ``seed`` is given, in which case the choice is random.
    """
    X = as_subgroup(G)
    P = X.parent
    key = ("chief", X.bits)
    if seed is None and key in P._memo:
        return P._memo[key]
    rng = random.Random(seed) if seed is not None else None
    normals = normal_subgroups(X)
    K = P.trivial
    factors = []
    while K.order < X.order:
        above = [N for N in normals if N.order > K.order and K.bits & N.bits == K.bits]
        minimal = [N for N in above
                   if not any(M.order < N.order and M.bits & N.bits == M.bits for M in above)]
        nxt = rng.choice(minimal) if rng else minimal[0]
        factors.append(_make_factor(X, K, nxt))
        K = nxt
    cs = ChiefSeries(X, tuple(factors))
    if seed is None:
        P._memo[key] = cs
    return cs


def is_soluble(G: GroupLike) -> bool:
    return all(is_prime_power(f.factor_order) for f in chief_series(G))


def is_supersoluble(G: GroupLike) -> bool:
    return all(is_prime(f.factor_order) for f in chief_series(G))


def is_nilpotent(G: GroupLike) -> bool:
    X = as_subgroup(G)
    return all(is_normal(sylow(X, p), X) for p in prime_factors(X.order))


def is_cyclic(G: GroupLike) -> bool:
    X = as_subgroup(G)
    return bool((X.parent.element_orders[X.idx] == X.order).any())


def is_abelian(G: GroupLike) -> bool:
    X = as_subgroup(G)
    t = X.parent.table
    g = np.asarray(X.gens, dtype=np.int64)
    return bool((t[np.ix_(g, g)] == t[np.ix_(g, g)].T).all())


def is_p_nilpotent(G: GroupLike, p: int) -> bool:
    """True iff ``G`` has a normal subgroup of order ``|G|_{p'}``."""
    X = as_subgroup(G)
    target = X.order // p_part(X.order, p)
    return any(N.order == target for N in normal_subgroups(X))


def o_p(G: GroupLike, p: int) -> Subgroup:
    """Largest normal p-subgroup."""
    X = as_subgroup(G)
    best = X.parent.trivial
    for N in normal_subgroups(X):
        if N.order > best.order and p_part(N.order, p) == N.order:
            best = N
    return best


def fitting(G: GroupLike) -> Subgroup:
    """Join of ``O_p(G)`` over the primes dividing ``|G|``."""
    X = as_subgroup(G)
    gens: list[int] = []
    for p in prime_factors(X.order):
        gens.extend(o_p(X, p).gens)
    return span(X.parent, gens)


def induced_automorphism_primes(f: ChiefFactor) -> tuple[int, ...]:
    return prime_factors(f.induced_aut_order)
