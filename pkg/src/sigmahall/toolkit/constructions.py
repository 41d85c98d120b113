"""Named group constructions realised as permutation groups."""
from __future__ import annotations

from dataclasses import dataclass

from ..arith import is_prime
from ..core import DEFAULT_LIMITS, Group, Limits, Permutation, generate
from ..errors import ConfigurationError

KINDS = ("cyclic", "dihedral", "symmetric", "alternating", "direct_product", "metacyclic", "raw")


@dataclass(frozen=True)
class GroupSpec:
    """How to build a group.

    ``params`` by kind: ``(n,)`` for cyclic/dihedral/symmetric/alternating,
    ``(p, d)`` for metacyclic, ``(left, right)`` GroupSpecs for
    direct_product, ``(degree, generators)`` for raw.
    """

    kind: str
    params: tuple
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown construction {self.kind!r}")

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        from .formats import spec_string

        return spec_string(self)

    @classmethod
    def cyclic(cls, n):
        return cls("cyclic", (n,))

    @classmethod
    def dihedral(cls, n):
        return cls("dihedral", (n,))

    @classmethod
    def symmetric(cls, n):
        return cls("symmetric", (n,))

    @classmethod
    def alternating(cls, n):
        return cls("alternating", (n,))

    @classmethod
    def metacyclic(cls, p, d):
        return cls("metacyclic", (p, d))

    @classmethod
    def direct_product(cls, a, b):
        return cls("direct_product", (a, b))

    @classmethod
    def raw(cls, degree, generators, name=None):
        return cls("raw", (degree, tuple(generators)), name)


def _cycle(n: int) -> Permutation:
    return Permutation([(i + 1) % n for i in range(n)])


def multiplier_of_order(p: int, d: int) -> int:
    """Smallest residue with multiplicative order exactly ``d`` modulo ``p``."""
    for g in range(1, p):
        if pow(g, d, p) == 1 and all(pow(g, k, p) != 1 for k in range(1, d)):
            return g
    raise ConfigurationError(f"no element of order {d} modulo {p}")


def _generators(spec: GroupSpec) -> tuple[int, list[Permutation]]:
    kind, prm = spec.kind, spec.params
    if kind in ("cyclic", "dihedral", "symmetric", "alternating"):
        (n,) = prm
        if not isinstance(n, int) or n < 1:
            raise ConfigurationError(f"{kind} needs a positive integer, got {n!r}")
    if kind == "cyclic":
        return n, [_cycle(n)] if n > 1 else []
    if kind == "dihedral":
        if n < 3:
            raise ConfigurationError("dihedral(n) needs n >= 3 (order 2n acting on n points)")
        return n, [_cycle(n), Permutation([(-i) % n for i in range(n)])]
    if kind == "symmetric":
        if n == 1:
            return 1, []
        return n, [Permutation.from_cycles([(0, 1)], n), _cycle(n)]
    if kind == "alternating":
        if n < 3:
            return n, []
        return n, [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
    if kind == "metacyclic":
        p, d = prm
        if not is_prime(p):
            raise ConfigurationError(f"metacyclic needs a prime modulus, got {p}")
        if d < 1 or (p - 1) % d:
            raise ConfigurationError(f"metacyclic({p}, {d}) needs d >= 1 dividing {p - 1}")
        g = multiplier_of_order(p, d)
        gens = [_cycle(p)]
        if d > 1:
            gens.append(Permutation([(g * x) % p for x in range(p)]))
        return p, gens
    if kind == "direct_product":
        a, b = prm
        da, ga = _generators(a)
        db, gb = _generators(b)
        deg = da + db
        gens = [Permutation(list(g.images) + list(range(da, deg))) for g in ga]
        gens += [Permutation(list(range(da)) + [da + x for x in g.images]) for g in gb]
        return deg, gens
    degree, gens = prm
    if not isinstance(degree, int) or degree < 1:
        raise ConfigurationError(f"raw group needs a positive degree, got {degree!r}")
    for g in gens:
        if g.degree != degree:
            raise ConfigurationError(f"generator {g} does not act on {degree} points")
    return degree, list(gens)


def build(spec: GroupSpec, limits: Limits = DEFAULT_LIMITS) -> Group:
    degree, gens = _generators(spec)
    return generate(gens, degree, limits, label=spec.label)
