"""Random walks through the Reidemeister-move graph of a diagram"""

import logging
import random
from typing import List, Optional

from vlink.errors import BadPlacement
from vlink.gauss.vlink_gauss_code import serialize
from vlink.gauss.vlink_gauss_diagram import GaussDiagram, Role
from vlink.models import MoveKind, MoveTemplate, MoveTrace, VlinkSettings
from vlink.moves.vlink_move_manager import R3Site, VlinkMoveManager

logger = logging.getLogger(__name__)


class EquivalenceFuzzer:
    """
    Applies random applicable move templates to produce an equivalent diagram.

    Each step inserts with probability `insert_bias` (while the diagram has fewer than
    `max_chords` chords) and otherwise deletes a kink, deletes a bigon or slides a triangle,
    whichever patterns exist. Insertions are a kink, a bigon, or a triangle seeded from two
    bigons next to an existing chord followed by the triangle move when one appears.

    Args:
        moves: Move manager used to apply templates
        insert_bias: Probability that a step inserts
        max_chords: Chord count at which insertion stops being preferred
    """

    def __init__(self, moves: Optional[VlinkMoveManager] = None, insert_bias: float = 0.55, max_chords: int = 40):
        self.moves = moves or VlinkMoveManager()
        self.insert_bias = insert_bias
        self.max_chords = max_chords

    @classmethod
    def from_settings(cls, settings: VlinkSettings) -> "EquivalenceFuzzer":
        return cls(insert_bias=settings.insert_bias, max_chords=settings.max_chords)

    def fuzz_equivalent(self, diagram: GaussDiagram, steps: int, seed: int,
                        corrupt_step: Optional[int] = None) -> MoveTrace:
        """
        Run a random move sequence.

        The diagram is relabeled 1..n first so the trace replays from its serialized
        initial code.

        Args:
            diagram: Starting diagram
            steps: Number of templates to apply
            seed: Seed of the private random generator
            corrupt_step: Step at which a sign-corrupted bigon is inserted instead of a real
                move (negative control)

        Returns:
            MoveTrace: Initial code, applied templates and final code
        """
        if diagram.num_components == 0:
            raise BadPlacement("Cannot fuzz a diagram without circles")
        rng = random.Random(seed)
        current = diagram.normalized()
        trace = MoveTrace(initial=serialize(current), seed=seed)

        while len(trace.templates) < steps:
            if corrupt_step is not None and len(trace.templates) == corrupt_step:
                proposals = [MoveTemplate(kind=MoveKind.R2A_INSERT, over_circle=0, over_gap=0, under_circle=0,
                                          under_gap=0, sign=rng.choice((1, -1)), corrupt=True)]
            else:
                proposals = self._propose(current, rng)
            limit = steps
            if corrupt_step is not None and len(trace.templates) < corrupt_step:
                limit = min(steps, corrupt_step)
            for template in proposals[:limit - len(trace.templates)]:
                current = self.moves.apply(current, template)
                trace.templates.append(template)

        trace.final = serialize(current)
        logger.debug("Fuzzed %d step(s) from %s to %s", steps, trace.initial, trace.final)
        return trace

    def _propose(self, diagram: GaussDiagram, rng: random.Random) -> List[MoveTemplate]:
        if rng.random() < self.insert_bias and diagram.num_chords < self.max_chords:
            return self._insertion(diagram, rng)

        options = []
        kinks = self.moves.find_kinks(diagram)
        if kinks:
            options.append(MoveTemplate(kind=MoveKind.R1_DELETE, chords=[rng.choice(kinks)]))
        pairs = self.moves.find_r2_pairs(diagram)
        if pairs:
            options.append(MoveTemplate(kind=MoveKind.R2A_DELETE, chords=list(rng.choice(pairs))))
        sites = self.moves.find_r3_sites(diagram)
        if sites:
            options.append(self._triangle_move(diagram, rng.choice(sites)))
        if not options:
            return self._insertion(diagram, rng)
        return [rng.choice(options)]

    def _triangle_move(self, diagram: GaussDiagram, site: R3Site) -> MoveTemplate:
        # positive triangles are recorded as the generating move
        kind = MoveKind.R3A_APPLY if self.moves.is_r3a_site(diagram, *site) else MoveKind.R3_APPLY
        return MoveTemplate(kind=kind, chords=list(site))

    def _insertion(self, diagram: GaussDiagram, rng: random.Random) -> List[MoveTemplate]:
        choice = rng.choice(("r1", "r2", "triangle"))
        if choice == "r1":
            return [self._random_r1(diagram, rng)]
        if choice == "r2" or diagram.num_chords == 0:
            return [self._random_r2(diagram, rng)]
        return self._triangle(diagram, rng)

    @staticmethod
    def _random_gap(diagram: GaussDiagram, rng: random.Random):
        circle = rng.randrange(diagram.num_components)
        return circle, rng.randint(0, diagram.circle_length(circle))

    def _random_r1(self, diagram: GaussDiagram, rng: random.Random) -> MoveTemplate:
        circle, gap = self._random_gap(diagram, rng)
        return MoveTemplate(kind=MoveKind.R1_INSERT, circle=circle, gap=gap, sign=rng.choice((1, -1)),
                            head_first=rng.random() < 0.5)

    def _random_r2(self, diagram: GaussDiagram, rng: random.Random) -> MoveTemplate:
        over_circle, over_gap = self._random_gap(diagram, rng)
        under_circle, under_gap = self._random_gap(diagram, rng)
        return MoveTemplate(kind=MoveKind.R2A_INSERT, over_circle=over_circle, over_gap=over_gap,
                            under_circle=under_circle, under_gap=under_gap, sign=rng.choice((1, -1)),
                            parallel=rng.random() < 0.5)

    def _triangle(self, diagram: GaussDiagram, rng: random.Random) -> List[MoveTemplate]:
        z = rng.choice(diagram.labels)
        over_z = diagram.locate(z, Role.OVER)
        circle, gap = self._random_gap(diagram, rng)
        first = MoveTemplate(kind=MoveKind.R2A_INSERT, over_circle=circle, over_gap=gap,
                             under_circle=over_z.circle, under_gap=over_z.position + rng.randint(0, 1),
                             sign=rng.choice((1, -1)), parallel=rng.random() < 0.5)
        a = diagram.fresh_label()
        seeded = self.moves.apply(diagram, first)

        # second bigon: Over pair right before or after the first Over pair, Under pair next to U_z
        over_a = seeded.locate(a, Role.OVER)
        over_b = seeded.locate(str(int(a) + 1), Role.OVER)
        under_z = seeded.locate(z, Role.UNDER)
        second = MoveTemplate(kind=MoveKind.R2A_INSERT, over_circle=over_a.circle,
                              over_gap=rng.choice((min(over_a.position, over_b.position),
                                                   max(over_a.position, over_b.position) + 1)),
                              under_circle=under_z.circle, under_gap=under_z.position + rng.randint(0, 1),
                              sign=rng.choice((1, -1)), parallel=rng.random() < 0.5)
        seeded = self.moves.apply(seeded, second)

        templates = [first, second]
        sites = self.moves.find_r3_sites(seeded)
        if sites:
            templates.append(self._triangle_move(seeded, rng.choice(sites)))
        return templates
