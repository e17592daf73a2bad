"""Writhe-type invariants of virtual links computed from Gauss diagrams"""

from vlink.corpus import VlinkCorpusManager
from vlink.gauss import GaussDiagram, diagram_equal, parse, serialize
from vlink.indices import VlinkIndexManager
from vlink.invariants import VlinkInvariantManager
from vlink.models import EndpointSignConvention, InvariantReport, MoveTemplate, MoveTrace, VlinkSettings
from vlink.moves import EquivalenceFuzzer, VlinkMoveManager
from vlink.poly import ExponentSum, LaurentPolynomial

__version__ = "0.1.0"

__all__ = [
    "EndpointSignConvention",
    "EquivalenceFuzzer",
    "ExponentSum",
    "GaussDiagram",
    "InvariantReport",
    "LaurentPolynomial",
    "MoveTemplate",
    "MoveTrace",
    "VlinkCorpusManager",
    "VlinkIndexManager",
    "VlinkInvariantManager",
    "VlinkMoveManager",
    "VlinkSettings",
    "diagram_equal",
    "parse",
    "serialize",
]
