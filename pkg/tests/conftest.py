import pytest

from biplane import catalog
from biplane.aut import automorphism_group


@pytest.fixture(scope="session")
def aut_results():
    """Automorphism groups of every constructible catalog design, computed once."""
    return {name: automorphism_group(catalog.build(name))
            for name in catalog.constructible_names()}
