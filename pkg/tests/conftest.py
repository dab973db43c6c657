import json
from pathlib import Path

import pytest

from plfg.algebra import series_expand
from plfg.catalog import load_catalog
from plfg.cohomology import Engine
from plfg.presentations import ModulePresentation, expand_presentation


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def engine(catalog):
    return Engine(catalog)


@pytest.fixture(scope="session")
def summands():
    path = Path(__file__).parent.parent / "src" / "plfg" / "data" / "_summands.json"
    return json.loads(path.read_text())


def presentation_series(summands, p, d_max):
    """Series of [(ring, gens), ...] per even degree 0..d_max."""
    mods = [ModulePresentation(ring=r if not isinstance(r, list) else tuple(r),
                               gens=tuple(g)) for r, g in summands]
    return expand_presentation(mods, p, d_max)


def l1_series(p, q, d_max):
    """Series of the rank-one summand with bottom class in degree 2q."""
    return series_expand({q: 1}, (p - 1,), d_max // 2)
