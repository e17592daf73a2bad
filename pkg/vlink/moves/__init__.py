from vlink.moves.vlink_move_manager import VlinkMoveManager
from vlink.moves.vlink_fuzzer import EquivalenceFuzzer

__all__ = ["VlinkMoveManager", "EquivalenceFuzzer"]
