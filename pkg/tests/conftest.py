import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stratagem.corpus import Corpus, Record, generate_synthetic
from stratagem.index import build_index
from stratagem.recommender import train


def make_record(doc_id, title, abstract="", authors=(), issn=None,
                journal_title=None, descriptors=(), year=None):
    return Record(
        id=doc_id, title=title, abstract=abstract, authors=tuple(authors),
        issn=issn, journal_title=journal_title, descriptors=tuple(descriptors),
        year=year,
    )


@pytest.fixture(scope="session")
def small_corpus():
    """The 3-doc BM25 fixture."""
    return Corpus.from_records([
        make_record("d1", "war media"),
        make_record("d2", "war"),
        make_record("d3", "peace"),
    ])


@pytest.fixture(scope="session")
def small_index(small_corpus):
    return build_index(small_corpus)


@pytest.fixture(scope="session")
def synth_corpus():
    return generate_synthetic(200, 10, 1.2, 42)


@pytest.fixture(scope="session")
def synth_index(synth_corpus):
    return build_index(synth_corpus)


@pytest.fixture(scope="session")
def synth_model(synth_corpus):
    return train(synth_corpus)


@pytest.fixture(scope="session")
def big_corpus():
    """The 1000-doc, skew-1.5 corpus the acceptance suite runs against."""
    return generate_synthetic(1000, 20, 1.5, 42)


@pytest.fixture(scope="session")
def big_index(big_corpus):
    return build_index(big_corpus)
