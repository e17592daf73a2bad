from vlink.corpus.vlink_corpus_manager import FIXTURE_DIR, VlinkCorpusManager

__all__ = ["FIXTURE_DIR", "VlinkCorpusManager"]
