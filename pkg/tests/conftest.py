import pytest

from vlink.corpus.vlink_corpus_manager import VlinkCorpusManager
from vlink.gauss.vlink_gauss_code import parse
from vlink.indices.vlink_index_manager import VlinkIndexManager
from vlink.invariants.vlink_invariant_manager import VlinkInvariantManager
from vlink.moves.vlink_fuzzer import EquivalenceFuzzer
from vlink.moves.vlink_move_manager import VlinkMoveManager
from vlink.utils import load_settings


@pytest.fixture(scope="session")
def settings():
    return load_settings()


@pytest.fixture(scope="session")
def corpus():
    return VlinkCorpusManager()


@pytest.fixture
def index_manager():
    return VlinkIndexManager()


@pytest.fixture
def move_manager():
    return VlinkMoveManager()


@pytest.fixture
def invariant_manager():
    return VlinkInvariantManager()


@pytest.fixture
def fuzzer(settings):
    return EquivalenceFuzzer.from_settings(settings)


@pytest.fixture
def kishino(corpus):
    return corpus.load("kishino")


@pytest.fixture
def kishino_variant(corpus):
    return corpus.load("kishino-variant")


@pytest.fixture
def eg1_link(corpus):
    return corpus.load("eg1-link")


@pytest.fixture
def virtual_trefoil():
    return parse("O1+O2+U1+U2+")


@pytest.fixture
def hopf():
    return parse("O1+U2+;U1+O2+")
