from __future__ import annotations

import pytest

from finsemi import EnumerationTask, enumerate_semigroups


@pytest.fixture(scope="session")
def corpus_by_order() -> dict[int, list]:
    """Every labelled semigroup table of orders 1 through 4, enumerated once."""
    return {n: list(enumerate_semigroups(EnumerationTask(n))) for n in (1, 2, 3, 4)}
