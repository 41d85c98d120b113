import functools

import pytest

from sigmahall import _kernels
from sigmahall.toolkit import GroupSpec, build, default_catalog, parse_spec_string

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@functools.lru_cache(maxsize=None)
def group(spec: str):
    """Build (and cache) a group from a spec string; caches keep lattices warm."""
    return build(parse_spec_string(spec))


@functools.lru_cache(maxsize=None)
def catalog_groups():
    return tuple(build(s) for s in default_catalog())


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    previous = _kernels.backend()
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(previous)


@pytest.fixture
def S3():
    return group("S3")


@pytest.fixture
def S4():
    return group("S4")


@pytest.fixture
def A5():
    return group("A5")


@pytest.fixture
def G42():
    return group("metacyclic:7:6")


@pytest.fixture
def G21():
    return group("metacyclic:7:3")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
