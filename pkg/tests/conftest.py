import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from positroids.constructions import catalog, extremal_family, uniform, whirl_like
from positroids.minors import simple_rank3_matroids


@pytest.fixture(scope="session")
def catalog_matroids():
    return {cid: catalog(cid) for cid in
            ("M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "FIG2")}


@pytest.fixture(scope="session")
def small_corpus():
    """A mixed bag used by cross-cutting property tests: uniforms,
    catalog entries, constructions, and the exhaustive classes up to 6."""
    mats = [uniform(1, 1), uniform(1, 3), uniform(2, 2), uniform(2, 4),
            uniform(3, 3), uniform(3, 5), uniform(3, 6), uniform(4, 5)]
    mats += [catalog(cid) for cid in ("M4", "M5", "M7", "M8")]
    mats += [extremal_family(3, 2), extremal_family(4, 2), whirl_like(3, 3)]
    for n in (4, 5, 6):
        mats += simple_rank3_matroids(n)
    return mats


@pytest.fixture(scope="session")
def rank3_corpus_by_n():
    return {n: simple_rank3_matroids(n) for n in range(3, 9)}
