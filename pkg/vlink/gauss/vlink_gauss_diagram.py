"""
Gauss diagrams of multi-component virtual links.

A diagram is an ordered tuple of circles, each circle the cyclic reading order of its
chord endpoints, plus the sign of every chord. Instances never change after construction;
every operation returns a new diagram.
"""

import logging
from enum import Enum
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from vlink.errors import ComponentIndexError, DuplicateRole, UnknownChord, UnpairedLabel, VlinkError

logger = logging.getLogger(__name__)


class Role(str, Enum):
    """Endpoint role: the over strand or the under strand of a crossing"""
    OVER = "O"
    UNDER = "U"

    @property
    def opposite(self) -> "Role":
        return Role.UNDER if self is Role.OVER else Role.OVER


class Endpoint(NamedTuple):
    label: str
    role: Role


class EndpointRef(NamedTuple):
    circle: int
    position: int


class Chord(NamedTuple):
    """A real crossing: its label, writhe and where its two endpoints sit"""
    label: str
    sign: int
    over_end: EndpointRef
    under_end: EndpointRef

    @property
    def is_self(self) -> bool:
        return self.over_end.circle == self.under_end.circle


CanonicalKey = Tuple[Tuple[int, Tuple[Tuple[str, int, int], ...]], ...]


class GaussDiagram:
    """
    Immutable Gauss diagram.

    Args:
        circles: Endpoint sequences, one per component, in counterclockwise reading order
        signs: Writhe of every chord label
    """

    __slots__ = ("_circles", "_signs", "_locations", "_canonical", "_labels", "_chord_list", "_self_by_circle",
                 "_linking", "_hash")

    def __init__(self, circles: Sequence[Sequence[Endpoint]], signs: Mapping[str, int]):
        self._circles: Tuple[Tuple[Endpoint, ...], ...] = tuple(
            tuple(Endpoint(str(label), Role(role)) for label, role in circle) for circle in circles
        )
        self._signs: Dict[str, int] = dict(signs)
        self._locations: Dict[Endpoint, EndpointRef] = {}
        self._canonical: Optional[CanonicalKey] = None
        self._labels: Optional[List[str]] = None
        self._chord_list: Optional[List[Chord]] = None
        self._self_by_circle: Optional[List[List[str]]] = None
        self._linking: Optional[List[str]] = None
        self._hash: Optional[int] = None
        self._validate()

    def _validate(self) -> None:
        for ci, circle in enumerate(self._circles):
            for pos, endpoint in enumerate(circle):
                if endpoint in self._locations:
                    raise DuplicateRole(f"Chord {endpoint.label} has two {endpoint.role.value} endpoints")
                self._locations[endpoint] = EndpointRef(ci, pos)

        labels = {endpoint.label for endpoint in self._locations}
        for label in labels:
            for role in Role:
                if Endpoint(label, role) not in self._locations:
                    raise UnpairedLabel(f"Chord {label} has no {role.value} endpoint")
        if labels != set(self._signs):
            missing = sorted(labels - set(self._signs))
            extra = sorted(set(self._signs) - labels)
            raise VlinkError(f"Sign table does not match chords (missing {missing}, extra {extra})")
        for label, sign in self._signs.items():
            if sign not in (1, -1):
                raise VlinkError(f"Chord {label} has sign {sign}; expected +1 or -1")

    # Structure

    @property
    def circles(self) -> Tuple[Tuple[Endpoint, ...], ...]:
        return self._circles

    @property
    def num_components(self) -> int:
        return len(self._circles)

    def circle_length(self, circle: int) -> int:
        self._check_circle(circle)
        return len(self._circles[circle])

    @property
    def labels(self) -> List[str]:
        """Chord labels in order of first appearance"""
        if self._labels is None:
            seen: Dict[str, None] = {}
            for circle in self._circles:
                for endpoint in circle:
                    seen.setdefault(endpoint.label, None)
            self._labels = list(seen)
        return list(self._labels)

    @property
    def num_chords(self) -> int:
        return len(self._signs)

    def sign(self, label: str) -> int:
        try:
            return self._signs[label]
        except KeyError:
            raise UnknownChord(f"Unknown chord: {label}")

    @property
    def signs(self) -> Dict[str, int]:
        return dict(self._signs)

    def locate(self, label: str, role: Role) -> EndpointRef:
        try:
            return self._locations[Endpoint(label, role)]
        except KeyError:
            raise UnknownChord(f"Unknown chord: {label}")

    def chord(self, label: str) -> Chord:
        return Chord(label, self.sign(label), self.locate(label, Role.OVER), self.locate(label, Role.UNDER))

    def chords(self) -> List[Chord]:
        self._classify_chords()
        return list(self._chord_list)

    def _classify_chords(self) -> None:
        # built once; the diagram never changes
        if self._chord_list is not None:
            return
        chords = [self.chord(label) for label in self.labels]
        by_circle: List[List[str]] = [[] for _ in self._circles]
        for c in chords:
            if c.is_self:
                by_circle[c.over_end.circle].append(c.label)
        self._self_by_circle = by_circle
        self._linking = [c.label for c in chords if not c.is_self]
        self._chord_list = chords

    def is_self_chord(self, label: str) -> bool:
        return self.chord(label).is_self

    def self_chords(self, circle: Optional[int] = None) -> List[str]:
        """
        Labels of self chords, optionally only those on one circle.

        Args:
            circle: Restrict to chords lying on this circle

        Returns:
            List[str]: Labels in first-appearance order
        """
        self._classify_chords()
        if circle is not None:
            self._check_circle(circle)
            return list(self._self_by_circle[circle])
        return [c.label for c in self._chord_list if c.is_self]

    def linking_chords(self) -> List[str]:
        self._classify_chords()
        return list(self._linking)

    def classify(self) -> Tuple[List[str], List[str]]:
        """
        Partition chords into self chords and linking chords.

        Returns:
            Tuple[List[str], List[str]]: (S, M)
        """
        return self.self_chords(), self.linking_chords()

    def total_writhe(self) -> int:
        return sum(self._signs.values())

    def fresh_label(self) -> str:
        """Next unused numeric label"""
        numeric = [int(label) for label in self._signs if label.isdigit()]
        return str(max(numeric, default=0) + 1)

    def _check_circle(self, circle: int) -> None:
        if not 0 <= circle < len(self._circles):
            raise ComponentIndexError(
                f"Circle {circle} out of range for a {len(self._circles)}-component diagram"
            )

    # Transformations

    def replace(self, circles: Sequence[Sequence[Endpoint]], signs: Optional[Mapping[str, int]] = None) -> "GaussDiagram":
        """New diagram with the given circles; signs default to this diagram's, restricted to what remains"""
        if signs is None:
            remaining = {endpoint.label for circle in circles for endpoint in circle}
            signs = {label: s for label, s in self._signs.items() if label in remaining}
        return GaussDiagram(circles, signs)

    def restrict_component(self, circle: int) -> "GaussDiagram":
        """
        One-circle diagram holding only the self chords of a component.

        Args:
            circle: Component index

        Returns:
            GaussDiagram: The component regarded as a knot
        """
        self._check_circle(circle)
        own = set(self.self_chords(circle))
        return self.replace([[e for e in self._circles[circle] if e.label in own]])

    def crossing_change(self, label: str) -> "GaussDiagram":
        """Swap the roles of a chord's endpoints and negate its sign"""
        sign = self.sign(label)
        circles = [[Endpoint(e.label, e.role.opposite) if e.label == label else e for e in circle]
                   for circle in self._circles]
        signs = dict(self._signs)
        signs[label] = -sign
        return GaussDiagram(circles, signs)

    def mirror_all(self) -> "GaussDiagram":
        """Crossing change at every chord"""
        circles = [[Endpoint(e.label, e.role.opposite) for e in circle] for circle in self._circles]
        return GaussDiagram(circles, {label: -s for label, s in self._signs.items()})

    def relabel(self, mapping: Mapping[str, str]) -> "GaussDiagram":
        circles = [[Endpoint(mapping[e.label], e.role) for e in circle] for circle in self._circles]
        return GaussDiagram(circles, {mapping[label]: s for label, s in self._signs.items()})

    def normalized(self) -> "GaussDiagram":
        """Relabel chords 1..n by first appearance"""
        return self.relabel({label: str(i) for i, label in enumerate(self.labels, start=1)})

    def disjoint_union(self, other: "GaussDiagram") -> "GaussDiagram":
        """
        Place two diagrams side by side.

        Labels of the second diagram are renamed past the first diagram's labels when they clash.

        Args:
            other: Diagram whose circles are appended

        Returns:
            GaussDiagram: Union with the circles of self followed by those of other
        """
        taken = set(self._signs)
        mapping: Dict[str, str] = {}
        next_free = int(self.fresh_label())
        for label in other.labels:
            if label in taken:
                while str(next_free) in taken or str(next_free) in other._signs:
                    next_free += 1
                mapping[label] = str(next_free)
                taken.add(str(next_free))
            else:
                mapping[label] = label
                taken.add(label)
        renamed = other.relabel(mapping)
        signs = dict(self._signs)
        signs.update(renamed._signs)
        return GaussDiagram(self._circles + renamed._circles, signs)

    # Identity

    def canonical_form(self) -> CanonicalKey:
        """
        Presentation-independent key.

        Circles are taken in the order, and each from the starting point, that makes the
        sequence of (length, tokens) keys lexicographically smallest, with chords renamed
        1..n by first appearance. Ties keep every candidate alive until they separate.

        Returns:
            CanonicalKey: Equal for two diagrams iff they agree up to rotation, relabeling
            and circle permutation
        """
        if self._canonical is None:
            self._canonical = self._compute_canonical()
        return self._canonical

    def _compute_canonical(self) -> CanonicalKey:
        # state: (used circles, label numbering, keys so far)
        states: List[Tuple[frozenset, Dict[str, int], Tuple]] = [(frozenset(), {}, ())]
        for _ in range(len(self._circles)):
            best_key = None
            next_states: List[Tuple[frozenset, Dict[str, int], Tuple]] = []
            seen = set()
            for used, numbering, keys in states:
                for ci, circle in enumerate(self._circles):
                    if ci in used:
                        continue
                    for start in range(max(len(circle), 1)):
                        local = dict(numbering)
                        tokens = tuple(
                            self._token(circle[(start + k) % len(circle)], local) for k in range(len(circle))
                        )
                        key = (len(circle), tokens)
                        if best_key is None or key < best_key:
                            best_key = key
                            next_states, seen = [], set()
                        if key == best_key:
                            marker = (used | {ci}, tuple(sorted(local.items())))
                            if marker not in seen:
                                seen.add(marker)
                                next_states.append((used | {ci}, local, keys + (key,)))
            states = next_states
        return states[0][2] if states else ()

    def _token(self, endpoint: Endpoint, numbering: Dict[str, int]) -> Tuple[str, int, int]:
        index = numbering.setdefault(endpoint.label, len(numbering) + 1)
        return endpoint.role.value, index, self._signs[endpoint.label]

    def is_equivalent_to(self, other: "GaussDiagram") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self._circles == other._circles and self._signs == other._signs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._circles, tuple(sorted(self._signs.items()))))
        return self._hash

    def __iter__(self) -> Iterator[Tuple[Endpoint, ...]]:
        return iter(self._circles)

    def __str__(self) -> str:
        from vlink.gauss.vlink_gauss_code import serialize
        return serialize(self)

    def __repr__(self) -> str:
        return f"GaussDiagram({str(self)!r})"


def empty_diagram(components: int = 1) -> GaussDiagram:
    """Diagram of `components` trivial circles"""
    return GaussDiagram([[] for _ in range(components)], {})


def diagram_equal(d1: GaussDiagram, d2: GaussDiagram) -> bool:
    """Equality up to rotation of each circle, chord renaming and circle order"""
    return d1.is_equivalent_to(d2)


def disjoint_union(d1: GaussDiagram, d2: GaussDiagram) -> GaussDiagram:
    return d1.disjoint_union(d2)


def endpoints_between(circle: Sequence[Endpoint], start: int, stop: int) -> List[Endpoint]:
    """
    Open arc of a circle, walking forward cyclically.

    Args:
        circle: Endpoints of one circle
        start: Position the arc leaves from
        stop: Position the arc runs up to; equal to `start` for the whole circle but that endpoint

    Returns:
        List[Endpoint]: Endpoints strictly after `start` and strictly before `stop`
    """
    n = len(circle)
    out = []
    k = (start + 1) % n
    while k != stop:
        out.append(circle[k])
        k = (k + 1) % n
    return out
