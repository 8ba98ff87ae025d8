"""Shared fixtures: scalar fields and parameter contexts."""

import pytest

from dahaverify.scalars import ExactField, ParamContext, make_field


@pytest.fixture(scope="session")
def exact():
    """Q(q, t)."""
    return ExactField()


@pytest.fixture(scope="session")
def exact1():
    """Q(q, t, Z1)."""
    return ExactField(1)


@pytest.fixture(scope="session")
def modp():
    return make_field("modp-random", ell=1, seed=1)


@pytest.fixture(scope="session")
def exact_ctx():
    return ParamContext(mode="exact")


@pytest.fixture(scope="session")
def exact_ctx1():
    return ParamContext(mode="exact", ell=1)


@pytest.fixture(scope="session")
def modp_ctx():
    return ParamContext(mode="modp-random", seed=1, ell=1, n=2)
