from vlink.indices.vlink_index_manager import IndexTables, VlinkIndexManager, WeakChordIndex

__all__ = ["IndexTables", "VlinkIndexManager", "WeakChordIndex"]
