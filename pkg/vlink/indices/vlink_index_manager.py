"""Chord indices and signed spans of Gauss diagrams"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, NamedTuple, Optional, Tuple

from vlink.errors import NotASelfChord
from vlink.gauss.vlink_gauss_diagram import Endpoint, GaussDiagram, Role, endpoints_between
from vlink.models import EndpointSignConvention, LeftArc

logger = logging.getLogger(__name__)

# Any function from (diagram, self chord label) to a comparable index value.
WeakChordIndex = Callable[[GaussDiagram, str], Hashable]


class IndexTables(NamedTuple):
    """ind and ind' of every self chord and the span of every circle"""
    ind: Dict[str, int]
    ind_prime: Dict[str, int]
    spans: Tuple[int, ...]


class VlinkIndexManager:
    """
    Endpoint signs, chord indices and signed spans under one sign convention.

    Index tables are computed in one prefix-sum pass per circle and kept for the most
    recently seen diagrams.

    Args:
        convention: Endpoint sign convention; the calibrated default when omitted
        cache_size: Diagrams whose tables are kept
    """

    def __init__(self, convention: Optional[EndpointSignConvention] = None, cache_size: int = 1024):
        self.convention = convention or EndpointSignConvention()
        self._tables = lru_cache(maxsize=cache_size)(self._build_tables)

    def endpoint_sign(self, diagram: GaussDiagram, endpoint: Endpoint) -> int:
        """
        Sign of a chord endpoint.

        Args:
            diagram: Diagram holding the endpoint
            endpoint: (label, role) pair

        Returns:
            int: +1 or -1
        """
        factor = self.convention.over_sign_factor
        if endpoint.role is Role.UNDER:
            factor = -factor
        return factor * diagram.sign(endpoint.label)

    def _left_bounds(self, diagram: GaussDiagram, label: str) -> Tuple[int, int, int]:
        chord = diagram.chord(label)
        if not chord.is_self:
            raise NotASelfChord(f"Chord {label} is a linking chord")
        if self.convention.left_arc is LeftArc.OVER_TO_UNDER:
            return chord.over_end.circle, chord.over_end.position, chord.under_end.position
        return chord.over_end.circle, chord.under_end.position, chord.over_end.position

    def left_part(self, diagram: GaussDiagram, label: str) -> List[Endpoint]:
        """
        Endpoints on the left arc of a self chord, in reading order.

        Args:
            diagram: Diagram
            label: Self chord label

        Returns:
            List[Endpoint]: Endpoints strictly between the chord's ends on the chosen arc
        """
        circle, start, stop = self._left_bounds(diagram, label)
        return endpoints_between(diagram.circles[circle], start, stop)

    @staticmethod
    def _arc_sum(prefix: List[int], start: int, stop: int) -> int:
        if start < stop:
            return prefix[stop] - prefix[start + 1]
        return prefix[-1] - prefix[start + 1] + prefix[stop]

    def _build_tables(self, diagram: GaussDiagram) -> IndexTables:
        ind: Dict[str, int] = {}
        ind_prime: Dict[str, int] = {}
        spans = []
        for circle, endpoints in enumerate(diagram.circles):
            own_chords = diagram.self_chords(circle)
            own = set(own_chords)

            # Prefix sums over own self chords and over every endpoint
            own_prefix, all_prefix = [0], [0]
            span = 0
            for endpoint in endpoints:
                sign = self.endpoint_sign(diagram, endpoint)
                if endpoint.label in own:
                    own_prefix.append(own_prefix[-1] + sign)
                else:
                    own_prefix.append(own_prefix[-1])
                    span += sign
                all_prefix.append(all_prefix[-1] + sign)
            spans.append(span)

            # Read both indices off the left arc of each self chord
            for label in own_chords:
                _, start, stop = self._left_bounds(diagram, label)
                ind[label] = self._arc_sum(own_prefix, start, stop)
                ind_prime[label] = self._arc_sum(all_prefix, start, stop)
        return IndexTables(ind, ind_prime, tuple(spans))

    def tables(self, diagram: GaussDiagram) -> IndexTables:
        """
        Every index and span of a diagram at once.

        Args:
            diagram: Diagram

        Returns:
            IndexTables: Fresh copies; callers may modify them
        """
        cached = self._tables(diagram)
        return IndexTables(dict(cached.ind), dict(cached.ind_prime), cached.spans)

    def ind(self, diagram: GaussDiagram, label: str) -> int:
        """
        Index of a self chord computed within its own component.

        Linking-chord endpoints are ignored, which is the same as evaluating on the
        restricted component.

        Args:
            diagram: Diagram
            label: Self chord label

        Returns:
            int: Signed endpoint count over the left arc
        """
        self._left_bounds(diagram, label)
        return self._tables(diagram).ind[label]

    def ind_prime(self, diagram: GaussDiagram, label: str) -> int:
        """
        Index of a self chord computed in the whole link.

        Args:
            diagram: Diagram
            label: Self chord label

        Returns:
            int: Signed endpoint count over the left arc, linking endpoints included
        """
        self._left_bounds(diagram, label)
        return self._tables(diagram).ind_prime[label]

    def ind_all(self, diagram: GaussDiagram) -> Dict[str, int]:
        """ind of every self chord"""
        return dict(self._tables(diagram).ind)

    def ind_prime_all(self, diagram: GaussDiagram) -> Dict[str, int]:
        """ind' of every self chord"""
        return dict(self._tables(diagram).ind_prime)

    def span(self, diagram: GaussDiagram, circle: int) -> int:
        """
        Signed span of a component.

        Args:
            diagram: Diagram
            circle: Component index

        Returns:
            int: Sum of endpoint signs of linking chords on the circle
        """
        diagram.circle_length(circle)
        return self._tables(diagram).spans[circle]

    def spans(self, diagram: GaussDiagram) -> List[int]:
        return list(self._tables(diagram).spans)

    def span_multiset(self, diagram: GaussDiagram) -> List[int]:
        """Spans of all components, sorted"""
        return sorted(self.spans(diagram))
