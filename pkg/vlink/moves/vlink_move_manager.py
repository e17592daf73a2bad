"""Reidemeister-move rewrites, 1-smoothing and pattern search on Gauss diagrams"""

import logging
from typing import List, Optional, Set, Tuple

from vlink.errors import BadPlacement, NotAKink, PatternMismatch, VlinkError
from vlink.gauss.vlink_gauss_code import parse, serialize
from vlink.gauss.vlink_gauss_diagram import Endpoint, EndpointRef, GaussDiagram, Role, endpoints_between
from vlink.models import MoveKind, MoveTemplate, MoveTrace

logger = logging.getLogger(__name__)

R3Site = Tuple[str, str, str]


class VlinkMoveManager:
    """
    Reidemeister-move rewrites, 1-smoothing and pattern search on Gauss diagrams.

    Virtual moves leave Gauss diagrams unchanged, so only the classical generators
    need templates.
    """

    # Insertions

    def r1_insert(self, diagram: GaussDiagram, circle: int, gap: int, sign: int,
                  head_first: bool = False, label: Optional[str] = None) -> GaussDiagram:
        """
        Insert a kink: a chord whose endpoints are adjacent.

        Args:
            diagram: Diagram to rewrite
            circle: Circle receiving the chord
            gap: Insert before the endpoint at this position (0..length)
            sign: Writhe of the new chord
            head_first: Put the Under endpoint before the Over endpoint
            label: Label of the new chord; next free numeric label when omitted

        Returns:
            GaussDiagram: Diagram with the kink added
        """
        self._check_gap(diagram, circle, gap)
        if sign not in (1, -1):
            raise BadPlacement(f"Invalid sign: {sign}")
        # Build the adjacent endpoint pair
        label = label or diagram.fresh_label()
        pair = [Endpoint(label, Role.OVER), Endpoint(label, Role.UNDER)]
        if head_first:
            pair.reverse()
        # Splice it into the circle
        circles = [list(c) for c in diagram.circles]
        circles[circle][gap:gap] = pair
        signs = diagram.signs
        signs[label] = sign
        return GaussDiagram(circles, signs)

    def r2a_insert(self, diagram: GaussDiagram, over_circle: int, over_gap: int,
                   under_circle: int, under_gap: int, sign: int, parallel: bool = True,
                   corrupt: bool = False, labels: Optional[Tuple[str, str]] = None) -> GaussDiagram:
        """
        Insert two chords of opposite sign forming a bigon.

        The Over endpoints go in as the adjacent pair [O_a, O_b] at the over gap, the Under
        endpoints as [U_a, U_b] (parallel) or [U_b, U_a] at the under gap. Gaps index the
        input diagram; when both pairs land in the same gap the Over pair comes first.

        Args:
            diagram: Diagram to rewrite
            over_circle: Circle receiving the Over pair
            over_gap: Gap on that circle
            under_circle: Circle receiving the Under pair
            under_gap: Gap on that circle
            sign: Writhe of chord a; chord b gets the opposite
            parallel: Under pair in the same order as the Over pair
            corrupt: Give both chords the same sign and the layout [O_a, O_b, U_a, U_b] at the
                over gap. This is not a Reidemeister move and exists only as a negative control.
            labels: Labels of the new chords; next free numeric labels when omitted

        Returns:
            GaussDiagram: Diagram with the pair added
        """
        self._check_gap(diagram, over_circle, over_gap)
        self._check_gap(diagram, under_circle, under_gap)
        if sign not in (1, -1):
            raise BadPlacement(f"Invalid sign: {sign}")
        if labels is None:
            first = diagram.fresh_label()
            labels = (first, str(int(first) + 1))
        a, b = labels
        over_pair = [Endpoint(a, Role.OVER), Endpoint(b, Role.OVER)]
        under_pair = [Endpoint(a, Role.UNDER), Endpoint(b, Role.UNDER)]
        if not parallel:
            under_pair.reverse()

        circles = [list(c) for c in diagram.circles]
        signs = diagram.signs
        if corrupt:
            logger.debug("Inserting corrupted pair %s, %s", a, b)
            circles[over_circle][over_gap:over_gap] = [over_pair[0], over_pair[1], Endpoint(a, Role.UNDER),
                                                       Endpoint(b, Role.UNDER)]
            signs[a] = signs[b] = sign
            return GaussDiagram(circles, signs)

        # Later gap first so the earlier gap index stays valid
        inserts = [(over_circle, over_gap, over_pair), (under_circle, under_gap, under_pair)]
        if over_circle == under_circle and over_gap <= under_gap:
            inserts.reverse()
        for circle, gap, pair in inserts:
            circles[circle][gap:gap] = pair
        signs[a] = sign
        signs[b] = -sign
        return GaussDiagram(circles, signs)

    # Deletions

    def r1_delete(self, diagram: GaussDiagram, label: str) -> GaussDiagram:
        """
        Remove a kink.

        Args:
            diagram: Diagram to rewrite
            label: Chord whose endpoints are adjacent on one circle

        Returns:
            GaussDiagram: Diagram without the chord
        """
        if not self.is_kink(diagram, label):
            raise NotAKink(f"Chord {label} is not a kink")
        return self._remove(diagram, {label})

    def r2a_delete(self, diagram: GaussDiagram, a: str, b: str) -> GaussDiagram:
        """
        Remove a bigon pair.

        Args:
            diagram: Diagram to rewrite
            a: First chord
            b: Second chord

        Returns:
            GaussDiagram: Diagram without both chords
        """
        if not self.is_r2_pair(diagram, a, b):
            raise PatternMismatch(f"Chords {a} and {b} do not form a bigon")
        return self._remove(diagram, {a, b})

    def _remove(self, diagram: GaussDiagram, labels: Set[str]) -> GaussDiagram:
        return diagram.replace([[e for e in circle if e.label not in labels] for circle in diagram.circles])

    # Triangle move

    def r3_orientations(self, diagram: GaussDiagram, x: str, y: str, z: str) -> List[Tuple[int, int, int]]:
        """
        Orientations (alpha, beta, gamma) under which x, y, z form a realizable triangle.

        The pairs {O_x, O_y}, {U_x, O_z}, {U_y, U_z} must each be adjacent; alpha is +1 when
        O_x immediately precedes O_y (beta for U_x before O_z, gamma for U_y before U_z).
        A triangle is realizable iff w(x)w(y) = beta*gamma and w(x)w(z) = alpha*gamma.

        Returns:
            List[Tuple[int, int, int]]: Matching orientations; empty when there is no triangle
        """
        if len({x, y, z}) != 3:
            return []
        alphas = self._adjacency(diagram, diagram.locate(x, Role.OVER), diagram.locate(y, Role.OVER))
        betas = self._adjacency(diagram, diagram.locate(x, Role.UNDER), diagram.locate(z, Role.OVER))
        gammas = self._adjacency(diagram, diagram.locate(y, Role.UNDER), diagram.locate(z, Role.UNDER))
        wx, wy, wz = diagram.sign(x), diagram.sign(y), diagram.sign(z)
        return [(alpha, beta, gamma) for alpha in alphas for beta in betas for gamma in gammas
                if wx * wy == beta * gamma and wx * wz == alpha * gamma]

    def is_r3a_site(self, diagram: GaussDiagram, x: str, y: str, z: str) -> bool:
        """
        Whether x, y, z are an instance of the generating triangle move.

        The generator is the realizable triangle with three positive crossings, on one, two
        or three circles. Its orientation is then (1, 1, 1) or (-1, -1, -1) and the move
        exchanges the two.
        """
        if not self.r3_orientations(diagram, x, y, z):
            return False
        return all(diagram.sign(label) == 1 for label in (x, y, z))

    def r3_apply(self, diagram: GaussDiagram, x: str, y: str, z: str) -> GaussDiagram:
        """
        Slide a strand across the crossing of the other two, for any realizable triangle.

        Args:
            diagram: Diagram to rewrite
            x: Chord from the top strand over the middle strand
            y: Chord from the top strand over the bottom strand
            z: Chord from the middle strand over the bottom strand

        Returns:
            GaussDiagram: Diagram with each of the three endpoint pairs swapped; signs kept
        """
        if not self.r3_orientations(diagram, x, y, z):
            raise PatternMismatch(f"Chords {x}, {y}, {z} do not form a triangle")
        return self._swap_triangle(diagram, x, y, z)

    def r3a_apply(self, diagram: GaussDiagram, x: str, y: str, z: str) -> GaussDiagram:
        """
        The generating triangle move: r3_apply restricted to three positive crossings.

        Args:
            diagram: Diagram to rewrite
            x: Chord from the top strand over the middle strand
            y: Chord from the top strand over the bottom strand
            z: Chord from the middle strand over the bottom strand

        Returns:
            GaussDiagram: Diagram with each of the three endpoint pairs swapped; signs kept
        """
        if not self.is_r3a_site(diagram, x, y, z):
            raise PatternMismatch(f"Chords {x}, {y}, {z} do not form a positive triangle")
        return self._swap_triangle(diagram, x, y, z)

    @staticmethod
    def _swap_triangle(diagram: GaussDiagram, x: str, y: str, z: str) -> GaussDiagram:
        circles = [list(c) for c in diagram.circles]
        for first, second in (((x, Role.OVER), (y, Role.OVER)),
                              ((x, Role.UNDER), (z, Role.OVER)),
                              ((y, Role.UNDER), (z, Role.UNDER))):
            p = diagram.locate(*first)
            q = diagram.locate(*second)
            circles[p.circle][p.position], circles[q.circle][q.position] = (
                circles[q.circle][q.position], circles[p.circle][p.position])
        return GaussDiagram(circles, diagram.signs)

    # Smoothing

    def smooth(self, diagram: GaussDiagram, label: str) -> GaussDiagram:
        """
        Orientation-respecting splice at a crossing.

        A self chord splits its circle in two: the arc from its Over endpoint to its Under
        endpoint stays in place and the arc from Under back to Over becomes a new last circle.
        A linking chord merges its two circles into one at the lower circle index.

        Args:
            diagram: Diagram to smooth
            label: Chord to smooth away

        Returns:
            GaussDiagram: Smoothed diagram
        """
        chord = diagram.chord(label)
        circles = [list(c) for c in diagram.circles]
        # Self chord: split the circle at both ends
        if chord.is_self:
            circle = circles[chord.over_end.circle]
            over_to_under = endpoints_between(circle, chord.over_end.position, chord.under_end.position)
            under_to_over = endpoints_between(circle, chord.under_end.position, chord.over_end.position)
            circles[chord.over_end.circle] = over_to_under
            circles.append(under_to_over)
        else:
            # Linking chord: join the two circles through the crossing
            first, second = sorted([chord.over_end, chord.under_end])
            merged = (endpoints_between(circles[first.circle], first.position, first.position)
                      + endpoints_between(circles[second.circle], second.position, second.position))
            circles[first.circle] = merged
            del circles[second.circle]
        logger.debug("Smoothed chord %s of %s", label, diagram)
        return diagram.replace(circles)

    # Pattern search

    @staticmethod
    def _adjacency(diagram: GaussDiagram, p: EndpointRef, q: EndpointRef) -> List[int]:
        if p.circle != q.circle:
            return []
        n = diagram.circle_length(p.circle)
        out = []
        if (q.position - p.position) % n == 1:
            out.append(1)
        if (p.position - q.position) % n == 1:
            out.append(-1)
        return out

    def is_kink(self, diagram: GaussDiagram, label: str) -> bool:
        return bool(self._adjacency(diagram, diagram.locate(label, Role.OVER), diagram.locate(label, Role.UNDER)))

    def is_r2_pair(self, diagram: GaussDiagram, a: str, b: str) -> bool:
        if a == b or diagram.sign(a) == diagram.sign(b):
            return False
        overs = self._adjacency(diagram, diagram.locate(a, Role.OVER), diagram.locate(b, Role.OVER))
        unders = self._adjacency(diagram, diagram.locate(a, Role.UNDER), diagram.locate(b, Role.UNDER))
        return bool(overs and unders)

    def find_kinks(self, diagram: GaussDiagram) -> List[str]:
        """Kink chords ordered by their lowest (circle, position)"""
        kinks = [c for c in diagram.chords() if self.is_kink(diagram, c.label)]
        return [c.label for c in sorted(kinks, key=lambda c: min(c.over_end, c.under_end))]

    def find_r2_pairs(self, diagram: GaussDiagram) -> List[Tuple[str, str]]:
        """Bigon pairs ordered by the lowest (circle, position) of their Over endpoints"""
        found: List[Tuple[EndpointRef, str, str]] = []
        seen: Set[frozenset] = set()
        for ci, circle in enumerate(diagram.circles):
            n = len(circle)
            for k in range(n if n > 1 else 0):
                e1, e2 = circle[k], circle[(k + 1) % n]
                if e1.role is not Role.OVER or e2.role is not Role.OVER:
                    continue
                key = frozenset((e1.label, e2.label))
                if key in seen or not self.is_r2_pair(diagram, e1.label, e2.label):
                    continue
                seen.add(key)
                found.append((EndpointRef(ci, k), e1.label, e2.label))
        return [(a, b) for _, a, b in sorted(found)]

    def find_r3_sites(self, diagram: GaussDiagram) -> List[R3Site]:
        """
        Every realizable triangle, one assignment per chord triple.

        Returns:
            List[R3Site]: (x, y, z) triples ordered by the lowest (circle, position) among
            their six endpoints
        """
        # Cyclic neighbours of every endpoint
        neighbours = {}
        for ci, circle in enumerate(diagram.circles):
            n = len(circle)
            for k, endpoint in enumerate(circle):
                neighbours[endpoint] = {circle[(k - 1) % n], circle[(k + 1) % n]} - {endpoint}

        # Grow each triangle from O_x: O_y beside it, O_z beside U_x, then U_z beside U_y
        found = []
        seen: Set[frozenset] = set()
        for x in diagram.labels:
            for oy in neighbours[Endpoint(x, Role.OVER)]:
                if oy.role is not Role.OVER:
                    continue
                y = oy.label
                for oz in neighbours[Endpoint(x, Role.UNDER)]:
                    if oz.role is not Role.OVER or oz.label in (x, y):
                        continue
                    z = oz.label
                    if Endpoint(z, Role.UNDER) not in neighbours[Endpoint(y, Role.UNDER)]:
                        continue
                    key = frozenset((x, y, z))
                    if key in seen or not self.r3_orientations(diagram, x, y, z):
                        continue
                    seen.add(key)
                    lowest = min(diagram.locate(label, role) for label in (x, y, z) for role in Role)
                    found.append((lowest, (x, y, z)))
        return [site for _, site in sorted(found)]

    # Templates

    def apply(self, diagram: GaussDiagram, template: MoveTemplate) -> GaussDiagram:
        """
        Apply one recorded move.

        Args:
            diagram: Diagram to rewrite
            template: Move with its placement parameters

        Returns:
            GaussDiagram: Rewritten diagram
        """
        logger.debug("Applying %s", template.model_dump(exclude_defaults=True))
        if template.kind == MoveKind.R1_INSERT:
            return self.r1_insert(diagram, template.circle, template.gap, template.sign, template.head_first)
        if template.kind == MoveKind.R1_DELETE:
            return self.r1_delete(diagram, template.chords[0])
        if template.kind == MoveKind.R2A_INSERT:
            return self.r2a_insert(diagram, template.over_circle, template.over_gap, template.under_circle,
                                   template.under_gap, template.sign, template.parallel, template.corrupt)
        if template.kind == MoveKind.R2A_DELETE:
            return self.r2a_delete(diagram, *template.chords)
        if template.kind == MoveKind.R3A_APPLY:
            return self.r3a_apply(diagram, *template.chords)
        if template.kind == MoveKind.R3_APPLY:
            return self.r3_apply(diagram, *template.chords)
        raise VlinkError(f"Unknown move kind: {template.kind}")

    def replay(self, trace: MoveTrace) -> List[GaussDiagram]:
        """
        Re-run a trace from its initial code.

        Args:
            trace: Recorded trace

        Returns:
            List[GaussDiagram]: Every diagram along the trace, initial and final included
        """
        # Re-apply every template from the recorded start
        diagrams = [parse(trace.initial)]
        for template in trace.templates:
            diagrams.append(self.apply(diagrams[-1], template))
        if trace.final and serialize(diagrams[-1]) != trace.final:
            raise VlinkError("Replayed trace does not end at the recorded diagram")
        return diagrams

    @staticmethod
    def _check_gap(diagram: GaussDiagram, circle: int, gap: int) -> None:
        if not 0 <= circle < diagram.num_components:
            raise BadPlacement(f"Circle {circle} out of range")
        if not 0 <= gap <= diagram.circle_length(circle):
            raise BadPlacement(f"Gap {gap} out of range for circle {circle}")
