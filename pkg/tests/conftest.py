import pytest

from sensegraph.store import Store, load_corpus

from util import write_sense_shift_corpus, write_tiny_corpus


@pytest.fixture(scope="session")
def tiny_corpus(tmp_path_factory):
    path = write_tiny_corpus(tmp_path_factory.mktemp("tiny") / "tiny")
    return load_corpus(path, "tiny")


@pytest.fixture(scope="session")
def shift_dir(tmp_path_factory):
    return write_sense_shift_corpus(tmp_path_factory.mktemp("shift") / "senseshift")


@pytest.fixture(scope="session")
def shift_corpus(shift_dir):
    return load_corpus(shift_dir, "senseshift")


@pytest.fixture(scope="session")
def shift_store(shift_dir):
    store = Store()
    store.ingest(shift_dir, "senseshift")
    return store
