import numpy as np
import pytest

from sigmahall import _kernels
from sigmahall._kernels import _pykernels
from sigmahall.lattice import all_subgroups

from conftest import group
from oracles import set_closure


def test_backend_selected():
    assert _kernels.backend() in _kernels.BACKENDS


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.use_backend("fortran")


@pytest.mark.parametrize("spec", ["S4", "metacyclic:11:10", "D8*S3"])
def test_backends_agree(spec):
    G = group(spec)
    rng = np.random.default_rng(7)
    mods = [_kernels.BACKENDS[name] for name in sorted(_kernels.BACKENDS)]
    for _ in range(50):
        gens = rng.integers(0, G.order, size=rng.integers(1, 4)).astype(np.int32)
        results = [m.closure(G.table, gens) for m in mods]
        for mask, size in results:
            assert size == mask.sum()
            assert np.array_equal(mask, results[0][0])
        expected = set_closure([G.element(int(g)) for g in gens], G.degree)
        assert {G.element(int(i)) for i in np.flatnonzero(results[0][0])} == expected
    subs = list(all_subgroups(G))[:40]
    flat = np.concatenate([H.idx for H in subs]).astype(np.int32)
    offsets = np.zeros(len(subs) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum([H.order for H in subs])
    mats = [m.permutability_matrix(G.table, flat, offsets) for m in mods]
    for m in mats:
        assert np.array_equal(m, mats[0])
    for A in subs[:10]:
        for B in subs[:10]:
            pm = [m.product_mask(G.table, A.idx, B.idx) for m in mods]
            assert all(np.array_equal(p, pm[0]) for p in pm)
            assert len({bool(m.permutes(G.table, A.idx, B.idx)) for m in mods}) == 1


def test_lattice_same_under_both_backends(backend):
    from sigmahall.toolkit import build, parse_spec_string

    G = build(parse_spec_string("S3*S3"))  # fresh group, no cached lattice
    assert len(all_subgroups(G)) == 60


def test_python_closure_trivial():
    G = group("C5")
    mask, size = _pykernels.closure(G.table, np.zeros(0, dtype=np.int32))
    assert size == 1 and mask[0] == 1
