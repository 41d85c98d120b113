"""Finite permutation group engine.

Composition is right-to-left: ``compose(a, b)`` maps ``x`` to ``a(b(x))``.
Every group is fully enumerated; elements are kept in lexicographic order
of their image tuples, so the identity always has index 0.  Subgroups are
bitmasks over the parent's element indices, and all structural operations
run on the parent's Cayley table (``table[i, j]`` is the index of
``e_i * e_j``).
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from . import _kernels
from .errors import PreconditionError, ResourceLimitError, StructuralError


@dataclass(frozen=True)
class Limits:
    max_degree: int = 64
    max_order: int = 20000
    max_subgroups: int = 100000
    # an n x n int32 table above this order would not fit comfortably in memory
    max_table_order: int = 8000


DEFAULT_LIMITS = Limits()


class Permutation:
    """A bijection of ``{0, ..., degree - 1}`` stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise StructuralError(f"not a permutation of 0..{len(images) - 1}: {images}")
        if not images:
            raise StructuralError("degree must be positive")
        object.__setattr__(self, "images", images)

    @classmethod
    def _unchecked(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise StructuralError(f"point {x} outside 0..{degree - 1}")
                if x in seen:
                    raise StructuralError(f"point {x} occurs twice in the cycle list")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._unchecked(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a o b``, i.e. apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise StructuralError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation._unchecked(tuple(ai[x] for x in b.images))


def _fingerprint(degree: int, rows: np.ndarray) -> str:
    h = hashlib.sha256()
    h.update(degree.to_bytes(4, "little"))
    h.update(np.ascontiguousarray(rows, dtype=np.int16).tobytes())
    return h.hexdigest()


def _bits_of(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask.astype(np.uint8), bitorder="little").tobytes(), "little")


class Group:
    """A fully enumerated permutation group.

    Build instances with :func:`generate`.  A ``Group`` is immutable; the
    Cayley table, inverses, element orders and lattice data are computed
    lazily and memoised on the instance.
    """

    def __init__(self, rows: np.ndarray, generators: Sequence[Permutation],
                 limits: Limits = DEFAULT_LIMITS, label: str | None = None):
        self._arr = rows
        self.degree = int(rows.shape[1])
        self.generators = tuple(generators)
        self.limits = limits
        self.label = label
        self._memo: dict = {}
        self._lookup = {row.tobytes(): i for i, row in enumerate(rows)}

    @property
    def order(self) -> int:
        return int(self._arr.shape[0])

    def __len__(self):
        return self.order

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<Group{name} order={self.order} degree={self.degree}>"

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._unchecked(tuple(int(x) for x in r)) for r in self._arr)

    @cached_property
    def fingerprint(self) -> str:
        return _fingerprint(self.degree, self._arr)

    def element(self, i: int) -> Permutation:
        return Permutation._unchecked(tuple(int(x) for x in self._arr[i]))

    def index(self, p: Permutation) -> int:
        if p.degree != self.degree:
            raise StructuralError(f"degree mismatch: {p.degree} vs {self.degree}")
        try:
            return self._lookup[np.asarray(p.images, dtype=np.int16).tobytes()]
        except KeyError:
            raise StructuralError(f"{p} is not an element of {self!r}") from None

    def __contains__(self, p) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        return np.asarray(p.images, dtype=np.int16).tobytes() in self._lookup

    @cached_property
    def table(self) -> np.ndarray:
        n = self.order
        if n > self.limits.max_table_order:
            raise ResourceLimitError(
                f"Cayley table for order {n} exceeds max_table_order={self.limits.max_table_order}",
                limit=self.limits.max_table_order, partial=n)
        return _cayley_table(self._arr, self._lookup)

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1).astype(np.int32)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        t = self.table
        ar = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        cur = ar.copy()
        k = 1
        while True:
            hit = (cur == 0) & (out == 0)
            out[hit] = k
            if out.all():
                return out
            cur = t[cur, ar]
            k += 1

    def power(self, i: int, k: int) -> int:
        t = self.table
        result, base = 0, int(i)
        while k:
            if k & 1:
                result = int(t[result, base])
            base = int(t[base, base])
            k >>= 1
        return result

    @cached_property
    def whole(self) -> "Subgroup":
        gens = tuple(self.index(g) for g in self.generators if not g.is_identity())
        return Subgroup(self, np.arange(self.order, dtype=np.int32), gens)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, np.zeros(1, dtype=np.int32), ())

    def subgroup(self, elements: Iterable) -> "Subgroup":
        """Subgroup generated by the given elements (Permutations or indices)."""
        gens = [e if isinstance(e, (int, np.integer)) else self.index(e) for e in elements]
        return span(self, gens)

    def _from_mask(self, mask: np.ndarray, gens=None) -> "Subgroup":
        return Subgroup(self, np.flatnonzero(mask).astype(np.int32), gens)


def _cayley_table(arr: np.ndarray, lookup: dict) -> np.ndarray:
    n, d = arr.shape
    # a base: points whose images already separate all elements
    base: list[int] = []
    keys = np.zeros(n, dtype=np.int64)
    radix_ok = True
    for pt in range(d):
        if len(np.unique(keys)) == n:
            break
        if d ** (len(base) + 1) >= 2**62:
            radix_ok = False
            break
        trial = keys * d + arr[:, pt]
        if len(np.unique(trial)) > len(np.unique(keys)):
            keys = trial
            base.append(pt)
    table = np.empty((n, n), dtype=np.int32)
    if n == 1:
        table[0, 0] = 0
        return table
    if not radix_ok:
        for i in range(n):
            comp = arr[i][arr]
            table[i] = [lookup[r.tobytes()] for r in comp]
        return table
    order = np.argsort(keys)
    skeys = keys[order]
    sub = arr[:, base].astype(np.int64)
    b = len(base)
    weights = d ** np.arange(b - 1, -1, -1, dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, n * b))
    for s in range(0, n, chunk):
        rows = arr[s:s + chunk].astype(np.int64)
        comp = rows[:, sub]  # comp[i, j, k] = e_i(e_j(base_k))
        ck = comp @ weights
        table[s:s + chunk] = order[np.searchsorted(skeys, ck)]
    return table


class Subgroup:
    """A subgroup of a parent :class:`Group`, stored as sorted element indices."""

    __slots__ = ("parent", "idx", "bits", "_gens", "_fp", "_mask")

    def __init__(self, parent: Group, idx: np.ndarray, gens=None):
        self.parent = parent
        self.idx = idx
        mask = np.zeros(parent.order, dtype=np.uint8)
        mask[idx] = 1
        self._mask = mask
        self.bits = _bits_of(mask)
        self._gens = None if gens is None else tuple(int(g) for g in gens)
        self._fp = None

    @property
    def order(self) -> int:
        return int(self.idx.shape[0])

    def __len__(self):
        return self.order

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.element(int(i)) for i in self.idx)

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_gens(self.parent, self.idx)
        return self._gens

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.element(g) for g in self.gens)

    @property
    def fingerprint(self) -> str:
        if self._fp is None:
            self._fp = _fingerprint(self.parent.degree, self.parent._arr[self.idx])
        return self._fp

    def sort_key(self):
        return (self.order, self.fingerprint)

    def __contains__(self, p) -> bool:
        if isinstance(p, (int, np.integer)):
            return bool(self._mask[p])
        return p in self.parent and bool(self._mask[self.parent.index(p)])

    def __le__(self, other: "Subgroup") -> bool:
        _check_parent(self, other)
        return self.bits & other.bits == self.bits

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.bits != other.bits

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.bits == self.bits)

    def __hash__(self):
        return hash((id(self.parent), self.bits))

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"

    def as_group(self, label: str | None = None) -> Group:
        """A standalone :class:`Group` with the same elements."""
        return Group(self.parent._arr[self.idx], self.generators, self.parent.limits, label)


GroupLike = Union[Group, Subgroup]


def as_subgroup(X: GroupLike) -> Subgroup:
    return X.whole if isinstance(X, Group) else X


def _check_parent(A: Subgroup, B: Subgroup) -> None:
    if A.parent is not B.parent:
        raise StructuralError("subgroups belong to different parent groups")


def _pair(A: GroupLike, B: GroupLike) -> tuple[Subgroup, Subgroup]:
    A, B = as_subgroup(A), as_subgroup(B)
    _check_parent(A, B)
    return A, B


def _greedy_gens(parent: Group, idx: np.ndarray) -> tuple[int, ...]:
    if idx.shape[0] <= 1:
        return ()
    orders = parent.element_orders[idx]
    cand = idx[np.argsort(-orders, kind="stable")]
    gens: list[int] = []
    mask = np.zeros(parent.order, dtype=np.uint8)
    mask[0] = 1
    size = 1
    for x in cand:
        if size == idx.shape[0]:
            break
        if not mask[x]:
            gens.append(int(x))
            mask, size = _kernels.closure(parent.table, np.asarray(gens, dtype=np.int32))
    return tuple(gens)


def span(G: Group, gens: Sequence[int]) -> Subgroup:
    """Subgroup of ``G`` generated by element indices ``gens``."""
    gens = [int(g) for g in gens if int(g) != 0]
    mask, _ = _kernels.closure(G.table, np.asarray(gens, dtype=np.int32))
    return G._from_mask(mask, gens)


def generate(gens: Sequence[Permutation], degree: int, limits: Limits = DEFAULT_LIMITS,
             label: str | None = None) -> Group:
    """Enumerate the closure of ``gens`` inside Sym(degree)."""
    if degree < 1:
        raise StructuralError("degree must be positive")
    if degree > limits.max_degree:
        raise ResourceLimitError(f"degree {degree} exceeds max_degree={limits.max_degree}",
                                 limit=limits.max_degree, partial=degree)
    for g in gens:
        if g.degree != degree:
            raise StructuralError(f"generator {g} has degree {g.degree}, expected {degree}")
    gen_arr = [np.asarray(g.images, dtype=np.int16) for g in gens if not g.is_identity()]
    ident = np.arange(degree, dtype=np.int16)
    seen = {ident.tobytes()}
    found = [ident]
    frontier = ident[None, :]
    while frontier.shape[0] and gen_arr:
        fresh = []
        for g in gen_arr:
            for row in g[frontier]:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
                    if len(seen) > limits.max_order:
                        raise ResourceLimitError(
                            f"group order exceeds max_order={limits.max_order}",
                            limit=limits.max_order, partial=len(seen))
        found.extend(fresh)
        frontier = np.array(fresh, dtype=np.int16).reshape(-1, degree)
    arr = np.array(found, dtype=np.int16)
    arr = arr[np.lexsort(arr.T[::-1])]
    return Group(arr, gens, limits, label)


def product_mask(A: GroupLike, B: GroupLike) -> np.ndarray:
    A, B = _pair(A, B)
    return _kernels.product_mask(A.parent.table, A.idx, B.idx)


def product_set(A: GroupLike, B: GroupLike) -> frozenset[Permutation]:
    """The set ``{ab : a in A, b in B}``."""
    A, B = _pair(A, B)
    mask = product_mask(A, B)
    return frozenset(A.parent.element(int(i)) for i in np.flatnonzero(mask))


def permutable(A: GroupLike, B: GroupLike) -> bool:
    """True iff ``AB == BA``."""
    A, B = _pair(A, B)
    if A.bits & B.bits == A.bits or A.bits & B.bits == B.bits:
        return True
    return _kernels.permutes(A.parent.table, A.idx, B.idx)


def product_is_subgroup(A: GroupLike, B: GroupLike) -> bool:
    """True iff the set ``AB`` is closed under composition."""
    A, B = _pair(A, B)
    mask = product_mask(A, B)
    members = np.flatnonzero(mask)
    t = A.parent.table
    return bool(mask[t[np.ix_(members, members)]].all())


def intersection(A: GroupLike, B: GroupLike) -> Subgroup:
    A, B = _pair(A, B)
    return A.parent._from_mask(A.mask & B.mask)


def join(A: GroupLike, B: GroupLike) -> Subgroup:
    """Smallest subgroup containing both ``A`` and ``B``."""
    A, B = _pair(A, B)
    if A <= B:
        return B
    if B <= A:
        return A
    return span(A.parent, A.gens + B.gens)


def _element_index(G: Group, g) -> int:
    return int(g) if isinstance(g, (int, np.integer)) else G.index(g)


def conjugate_subgroup(A: GroupLike, g) -> Subgroup:
    """``{g^-1 a g : a in A}`` for ``g`` in the parent group."""
    A = as_subgroup(A)
    G = A.parent
    gi = _element_index(G, g)
    t = G.table
    idx = np.unique(t[t[G.inverse[gi], A.idx], gi]).astype(np.int32)
    gens = tuple(int(t[t[G.inverse[gi], a], gi]) for a in A.gens)
    return Subgroup(G, idx, gens)


def _require_inside(A: Subgroup, X: Subgroup) -> None:
    if not A <= X:
        raise StructuralError("subgroup is not contained in the ambient group")


def centralizer(G: GroupLike, S: Iterable) -> Subgroup:
    """``{g in G : gs = sg for every s in S}``."""
    X = as_subgroup(G)
    P = X.parent
    s = np.asarray([_element_index(P, x) for x in S], dtype=np.int64)
    if s.size and not X.mask[s].all():
        raise StructuralError("element outside the group")
    if s.size == 0:
        return X
    t = P.table
    ok = (t[np.ix_(X.idx, s)] == t[np.ix_(s, X.idx)].T).all(axis=1)
    return Subgroup(P, X.idx[ok])


def _conjugates_inside(X: Subgroup, A: Subgroup, gs: np.ndarray) -> np.ndarray:
    """Boolean per g in ``gs``: whether A^g <= A (checked on A's generators)."""
    P = X.parent
    t = P.table
    ag = np.asarray(A.gens, dtype=np.int64)
    if ag.size == 0:
        return np.ones(gs.shape[0], dtype=bool)
    conj = t[t[P.inverse[gs][:, None], ag[None, :]], gs[:, None]]
    return A.mask[conj].astype(bool).all(axis=1)


def normalizer(G: GroupLike, A: GroupLike) -> Subgroup:
    """``{g in G : A^g = A}``."""
    X, A = _pair(G, A)
    _require_inside(A, X)
    ok = _conjugates_inside(X, A, X.idx.astype(np.int64))
    return Subgroup(X.parent, X.idx[ok])


def is_normal(A: GroupLike, G: GroupLike) -> bool:
    X, A = _pair(G, A)
    _require_inside(A, X)
    gens = np.asarray(X.gens, dtype=np.int64)
    if gens.size == 0:
        return True
    return bool(_conjugates_inside(X, A, gens).all())


def normal_closure(G: GroupLike, A: GroupLike) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``A``."""
    X, A = _pair(G, A)
    _require_inside(A, X)
    P = X.parent
    t = P.table
    N = A
    xg = np.asarray(X.gens, dtype=np.int64)
    while True:
        ng = np.asarray(N.gens, dtype=np.int64)
        if xg.size == 0 or ng.size == 0:
            return N
        conj = t[t[P.inverse[xg][:, None], ng[None, :]], xg[:, None]].ravel()
        if N.mask[conj].all():
            return N
        N = span(P, list(N.gens) + [int(c) for c in np.unique(conj) if not N.mask[c]])


def cyclic_subgroup(G: GroupLike, g) -> Subgroup:
    X = as_subgroup(G)
    return span(X.parent, [_element_index(X.parent, g)])


def core(G: GroupLike, A: GroupLike) -> Subgroup:
    """Largest normal subgroup of ``G`` contained in ``A``."""
    X, A = _pair(G, A)
    _require_inside(A, X)
    mask = A.mask.copy()
    seen = {A.bits}
    for g in X.idx:
        C = conjugate_subgroup(A, int(g))
        if C.bits not in seen:
            seen.add(C.bits)
            mask &= C.mask
    return X.parent._from_mask(mask)


def index_of(A: GroupLike, X: GroupLike) -> int:
    A, X = _pair(A, X)
    if X.order % A.order:
        raise PreconditionError("not a subgroup")
    return X.order // A.order
