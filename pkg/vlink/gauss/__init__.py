from vlink.gauss.vlink_gauss_diagram import (
    Chord,
    Endpoint,
    EndpointRef,
    GaussDiagram,
    Role,
    diagram_equal,
    disjoint_union,
    empty_diagram,
    endpoints_between,
)
from vlink.gauss.vlink_gauss_code import parse, serialize

__all__ = [
    "Chord",
    "Endpoint",
    "EndpointRef",
    "GaussDiagram",
    "Role",
    "diagram_equal",
    "disjoint_union",
    "empty_diagram",
    "endpoints_between",
    "parse",
    "serialize",
]
