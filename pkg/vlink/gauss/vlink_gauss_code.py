"""
Textual Gauss codes.

    code      := component (";" component)*
    component := token*
    token     := role label sign
    role      := "O" | "U"          (case-insensitive)
    label     := [A-Za-z0-9]+
    sign      := "+" | "-"

Whitespace is ignored everywhere. Error positions are 0-based offsets into the input.
"""

import logging
from typing import Dict, List, Tuple

from vlink.errors import DuplicateRole, GaussSyntaxError, SignMismatch, UnpairedLabel
from vlink.gauss.vlink_gauss_diagram import Endpoint, GaussDiagram, Role

logger = logging.getLogger(__name__)

_SIGNS = {"+": 1, "-": -1}


def parse(code: str) -> GaussDiagram:
    """
    Parse a Gauss code.

    Args:
        code: Gauss code text

    Returns:
        GaussDiagram: Diagram whose circles follow the token order of each component

    Raises:
        GaussSyntaxError: Malformed token
        UnpairedLabel: A label lacks its O or its U occurrence
        DuplicateRole: A label occurs twice with the same role
        SignMismatch: The two occurrences of a label carry different signs
    """
    chars: List[Tuple[str, int]] = [(ch, i) for i, ch in enumerate(code) if not ch.isspace()]
    circles: List[List[Endpoint]] = [[]]
    occurrences: Dict[str, List[Tuple[Role, int, int]]] = {}

    k = 0
    while k < len(chars):
        ch, pos = chars[k]
        if ch == ";":
            circles.append([])
            k += 1
            continue
        if ch.upper() not in ("O", "U"):
            raise GaussSyntaxError(f"Expected role 'O' or 'U', found {ch!r}", pos)
        role = Role(ch.upper())
        k += 1

        label_start = k
        while k < len(chars) and chars[k][0].isascii() and chars[k][0].isalnum():
            k += 1
        if k == label_start:
            where = chars[k][1] if k < len(chars) else len(code)
            raise GaussSyntaxError("Expected a chord label", where)
        label = "".join(c for c, _ in chars[label_start:k])

        if k >= len(chars):
            raise GaussSyntaxError(f"Missing sign after label {label}", len(code))
        sign_char, sign_pos = chars[k]
        if sign_char not in _SIGNS:
            raise GaussSyntaxError(f"Expected '+' or '-', found {sign_char!r}", sign_pos)
        k += 1

        occurrences.setdefault(label, []).append((role, _SIGNS[sign_char], pos))
        circles[-1].append(Endpoint(label, role))

    signs: Dict[str, int] = {}
    for label, seen in occurrences.items():
        roles = [role for role, _, _ in seen]
        if len(set(roles)) < len(roles):
            repeated = next(p for i, (r, _, p) in enumerate(seen) if r in roles[:i])
            raise DuplicateRole(f"Label {label} occurs twice as {roles[0].value}", repeated)
        if len(seen) == 1:
            missing = seen[0][0].opposite
            raise UnpairedLabel(f"Label {label} has no {missing.value} occurrence", seen[0][2])
        if seen[0][1] != seen[1][1]:
            raise SignMismatch(f"Label {label} has both signs", seen[1][2])
        signs[label] = seen[0][1]

    diagram = GaussDiagram(circles, signs)
    logger.debug("Parsed %d chord(s) on %d circle(s)", diagram.num_chords, diagram.num_components)
    return diagram


def serialize(diagram: GaussDiagram) -> str:
    """
    Write a diagram as a Gauss code with chords renamed 1..n by first appearance.

    Args:
        diagram: Diagram to write

    Returns:
        str: Gauss code, components joined by ';'
    """
    numbering = {label: str(i) for i, label in enumerate(diagram.labels, start=1)}
    return ";".join(
        "".join(
            f"{e.role.value}{numbering[e.label]}{'+' if diagram.sign(e.label) > 0 else '-'}" for e in circle
        )
        for circle in diagram.circles
    )
