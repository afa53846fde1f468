"""Shared fixtures: the small groups every test file works over."""

import pytest

from dirings.groups import FiniteGroup, standard_group


@pytest.fixture(scope="session")
def c2() -> FiniteGroup:
    return standard_group("c2")


@pytest.fixture(scope="session")
def c3() -> FiniteGroup:
    return standard_group("c3")


@pytest.fixture(scope="session")
def c4() -> FiniteGroup:
    return standard_group("c4")


@pytest.fixture(scope="session")
def c5() -> FiniteGroup:
    return standard_group("c5")


@pytest.fixture(scope="session")
def c6() -> FiniteGroup:
    return standard_group("c6")


@pytest.fixture(scope="session")
def klein4() -> FiniteGroup:
    return standard_group("klein4")


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    return standard_group("s3")


@pytest.fixture(scope="session")
def d4() -> FiniteGroup:
    return standard_group("d4")
