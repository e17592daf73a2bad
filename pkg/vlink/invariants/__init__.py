from vlink.invariants.vlink_invariant_manager import VERIFIABLE, VlinkInvariantManager

__all__ = ["VERIFIABLE", "VlinkInvariantManager"]
