"""Shared lazy caches so the heavy objects (group closures, pipeline runs)
are computed once per session, in whatever order tests request them."""

import pytest

_RUN_CACHE = {}


@pytest.fixture(scope="session")
def pipeline_run():
    """pipeline_run(group, T) -> (rows, types), cached across tests."""
    from reflorbit.pipeline import run_group

    def get(gid, T, **kw):
        key = (gid, T)
        if key not in _RUN_CACHE:
            defaults = dict(check_members=4)
            defaults.update(kw)
            _RUN_CACHE[key] = run_group(gid, T, **defaults)
        return _RUN_CACHE[key]

    return get


@pytest.fixture(scope="session")
def catalog():
    from reflorbit.refgroup import load_catalog

    return load_catalog
