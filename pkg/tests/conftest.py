import pytest

import degclass as dc


@pytest.fixture(scope="session")
def corpus():
    return dc.builtin_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {rec.name: rec for rec in corpus}


@pytest.fixture(scope="session")
def builtin_report(corpus):
    return dc.run_report(corpus)
