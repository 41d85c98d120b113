"""The built-in catalog of small groups."""
from __future__ import annotations

from .constructions import GroupSpec

_PRIMES_TO_31 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def default_catalog() -> list[GroupSpec]:
    """Deterministic list of catalog specs.

    Cyclic groups of order 1..63, dihedral groups of order 6..40, S3, S4,
    S5, A4, A5, every metacyclic(p, d) with p <= 31 and d | p - 1, and all
    direct products of two factors from C2, C3, C4, S3, D8, C7:C3.
    """
    out = [GroupSpec.cyclic(n) for n in range(1, 64)]
    out += [GroupSpec.dihedral(n) for n in range(3, 21)]
    out += [GroupSpec.symmetric(3), GroupSpec.symmetric(4), GroupSpec.symmetric(5),
            GroupSpec.alternating(4), GroupSpec.alternating(5)]
    out += [GroupSpec.metacyclic(p, d) for p in _PRIMES_TO_31
            for d in range(1, p) if (p - 1) % d == 0]
    factors = [GroupSpec.cyclic(2), GroupSpec.cyclic(3), GroupSpec.cyclic(4),
               GroupSpec.symmetric(3), GroupSpec.dihedral(4), GroupSpec.metacyclic(7, 3)]
    for i, a in enumerate(factors):
        for b in factors[i:]:
            out.append(GroupSpec.direct_product(a, b))
    return out
