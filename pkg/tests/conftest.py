from __future__ import annotations

import pytest

from leechgdh.classify import _half_k
from leechgdh.exactlat import leech_lattice


@pytest.fixture(scope="session")
def leech():
    return leech_lattice()


@pytest.fixture(scope="session")
def half_k():
    return _half_k()
