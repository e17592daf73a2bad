"""Writhe, flat-writhe, affine-index and smoothing invariants of virtual links"""

import logging
from math import gcd
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, TypeVar, Union

from vlink.errors import MultiComponent, VlinkError
from vlink.gauss.vlink_gauss_code import serialize
from vlink.gauss.vlink_gauss_diagram import GaussDiagram
from vlink.indices.vlink_index_manager import IndexTables, VlinkIndexManager, WeakChordIndex
from vlink.models import EndpointSignConvention, InvariantReport, VerifyResult
from vlink.moves.vlink_fuzzer import EquivalenceFuzzer
from vlink.moves.vlink_move_manager import VlinkMoveManager
from vlink.poly.vlink_exponent_sum import ExponentSum
from vlink.poly.vlink_laurent import LaurentPolynomial

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Invariants the verifier knows how to compare, in reporting order.
VERIFIABLE = ("W", "Wbar", "P", "f", "Lts", "B", "Bbar", "span", "W_mod_span")


class VlinkInvariantManager:
    """
    Writhe-type polynomial invariants of virtual links.

    Args:
        convention: Endpoint sign convention for all index computations
        moves: Move manager providing the smoothing
    """

    def __init__(self, convention: Optional[EndpointSignConvention] = None,
                 moves: Optional[VlinkMoveManager] = None):
        self.indices = VlinkIndexManager(convention)
        self.moves = moves or VlinkMoveManager()

    # Writhes

    def total_writhe(self, diagram: GaussDiagram) -> int:
        return diagram.total_writhe()

    def linking_writhe(self, diagram: GaussDiagram) -> int:
        """Sum of the signs of all linking chords"""
        return sum(diagram.sign(label) for label in diagram.linking_chords())

    # Writhe polynomials

    def _writhe_terms(self, diagram: GaussDiagram, chords: Sequence[str],
                      tables: Optional[IndexTables] = None) -> LaurentPolynomial:
        if tables is None:
            tables = self.indices.tables(diagram)
        return LaurentPolynomial(
            (tables.ind_prime[label], diagram.sign(label)) for label in chords if tables.ind[label] != 0
        )

    def writhe_poly_W(self, diagram: GaussDiagram) -> LaurentPolynomial:
        """
        Writhe polynomial: sum of w(c) t^ind'(c) over self chords with ind(c) != 0.

        Args:
            diagram: Diagram

        Returns:
            LaurentPolynomial: W in t
        """
        return self._writhe_terms(diagram, diagram.self_chords())

    def writhe_poly_components(self, diagram: GaussDiagram) -> List[LaurentPolynomial]:
        """Per-component parts W_i of W; they sum to W"""
        tables = self.indices.tables(diagram)
        return [self._writhe_terms(diagram, diagram.self_chords(i), tables) for i in range(diagram.num_components)]

    def flat_writhe_Wbar(self, diagram: GaussDiagram) -> LaurentPolynomial:
        """
        Flat writhe polynomial: sum over components of W_i(t) - t^span_i W_i(t^-1).

        Args:
            diagram: Diagram

        Returns:
            LaurentPolynomial: Wbar; unchanged by crossing changes
        """
        tables = self.indices.tables(diagram)
        total = LaurentPolynomial.zero()
        for circle, span in enumerate(tables.spans):
            part = self._writhe_terms(diagram, diagram.self_chords(circle), tables)
            if not part:
                continue
            # W_i(t) - t^span_i W_i(t^-1)
            total = total + part - part.invert_variable().shift(span)
        return total

    def writhe_poly_mod_span(self, diagram: GaussDiagram) -> LaurentPolynomial:
        """
        Writhe polynomial with ind' reduced modulo the gcd of the spans.

        Every self chord counts as w(c)(t^(ind'(c) mod g) - 1); g = 0 means no reduction.

        Args:
            diagram: Diagram

        Returns:
            LaurentPolynomial: Exponents lie in [0, g) when g > 0
        """
        # g = gcd of the spans
        modulus = 0
        for span in self.indices.spans(diagram):
            modulus = gcd(modulus, abs(span))
        total: Dict[int, int] = {}
        for label, value in self.indices.ind_prime_all(diagram).items():
            exponent = value % modulus if modulus else value
            sign = diagram.sign(label)
            total[exponent] = total.get(exponent, 0) + sign
            total[0] = total.get(0, 0) - sign
        return LaurentPolynomial(total)

    def dwrithe(self, diagram: GaussDiagram, n: int) -> int:
        """Coefficient of t^n in Wbar"""
        return self.flat_writhe_Wbar(diagram).coeff(n)

    def _single_component(self, diagram: GaussDiagram, name: str) -> None:
        if diagram.num_components != 1:
            raise MultiComponent(f"{name} needs a one-component diagram, got {diagram.num_components}")

    def affine_index_P(self, diagram: GaussDiagram) -> LaurentPolynomial:
        """
        Affine index polynomial of a knot.

        Args:
            diagram: One-component diagram

        Returns:
            LaurentPolynomial: sum of w(c) t^ind(c) minus the writhe; vanishes at t = 1
        """
        self._single_component(diagram, "P")
        ind = self.indices.ind_all(diagram)
        terms = [(ind[label], diagram.sign(label)) for label in diagram.labels]
        return LaurentPolynomial(terms) - diagram.total_writhe()

    def odd_writhe_f(self, diagram: GaussDiagram) -> LaurentPolynomial:
        """Sum of w(c) t^(ind(c)+1) over chords with odd index"""
        self._single_component(diagram, "f")
        ind = self.indices.ind_all(diagram)
        return LaurentPolynomial((ind[label] + 1, diagram.sign(label)) for label in diagram.labels if ind[label] % 2)

    def generic_G(self, diagram: GaussDiagram, index: WeakChordIndex, nonzero_only: bool = True) -> Dict[Hashable, int]:
        """
        Formal sum of w(c) keyed by an arbitrary chord index.

        Args:
            diagram: Diagram
            index: Function giving each self chord its index value
            nonzero_only: Keep only chords with ind(c) != 0

        Returns:
            Dict[Hashable, int]: index value -> summed writhe, zero entries dropped
        """
        ind = self.indices.ind_all(diagram)
        out: Dict[Hashable, int] = {}
        for label in diagram.self_chords():
            if nonzero_only and ind[label] == 0:
                continue
            key = index(diagram, label)
            out[key] = out.get(key, 0) + diagram.sign(label)
        return {k: v for k, v in out.items() if v}

    # Smoothing invariants

    def smoothing_profile(self, diagram: GaussDiagram) -> Dict[str, LaurentPolynomial]:
        """Wbar of the smoothing at every chord"""
        return {label: self.flat_writhe_Wbar(self.moves.smooth(diagram, label)) for label in diagram.labels}

    def L_ts(self, diagram: GaussDiagram, profile: Optional[Dict[str, LaurentPolynomial]] = None) -> ExponentSum:
        """
        Sum over all chords of w(c) t^Wbar(L_c) minus w(L) t^Wbar(L).

        Args:
            diagram: Diagram
            profile: Precomputed smoothing_profile

        Returns:
            ExponentSum: Exponents are Laurent polynomials in s
        """
        # One term per chord, then the whole diagram's term
        profile = profile if profile is not None else self.smoothing_profile(diagram)
        total = ExponentSum((wbar, diagram.sign(label)) for label, wbar in profile.items())
        return total - ExponentSum.term(diagram.total_writhe(), self.flat_writhe_Wbar(diagram))

    def weight(self, diagram: GaussDiagram, label: str,
               profile: Optional[Dict[str, LaurentPolynomial]] = None) -> LaurentPolynomial:
        """ind(c) times Wbar of the smoothing at c"""
        index = self.indices.ind(diagram, label)
        if profile is not None:
            return index * profile[label]
        return index * self.flat_writhe_Wbar(self.moves.smooth(diagram, label))

    def B_ts(self, diagram: GaussDiagram, profile: Optional[Dict[str, LaurentPolynomial]] = None) -> ExponentSum:
        """
        Sum over self chords of w(c)(t^weight(c) - 1).

        The -1 terms stay in the sum as the coefficient of t^0.
        """
        profile = profile if profile is not None else self.smoothing_profile(diagram)
        ind = self.indices.ind_all(diagram)
        terms = []
        for label in diagram.self_chords():
            sign = diagram.sign(label)
            # w(c) t^weight(c), then -w(c) t^0
            terms.append((ind[label] * profile[label], sign))
            terms.append((LaurentPolynomial.zero(), -sign))
        return ExponentSum(terms)

    def Bbar_ts(self, diagram: GaussDiagram, profile: Optional[Dict[str, LaurentPolynomial]] = None) -> ExponentSum:
        """B(t, s) - B(t^-1, s); a flat invariant"""
        b = self.B_ts(diagram, profile)
        return b - b.invert_t()

    def chord_index_poly_F(self, diagram: GaussDiagram, index: Callable[[GaussDiagram, str], Union[int, LaurentPolynomial]],
                           fixed: Union[int, LaurentPolynomial] = 0) -> ExponentSum:
        """
        Sum over self chords of w(c)(t^index(c) - t^fixed).

        Args:
            diagram: Diagram
            index: Chord index; integer values are read as constant exponents
            fixed: Index value every kink takes

        Returns:
            ExponentSum: The polynomial built from the index
        """
        fixed_exp = _as_exponent(fixed)
        terms = []
        for label in diagram.self_chords():
            sign = diagram.sign(label)
            terms.append((_as_exponent(index(diagram, label)), sign))
            terms.append((fixed_exp, -sign))
        return ExponentSum(terms)

    def flat_closure(self, diagram: GaussDiagram, invariant: Callable[[GaussDiagram], T]) -> T:
        """F(L) + F(mirror of L) for an additive invariant F"""
        return invariant(diagram) + invariant(diagram.mirror_all())

    # Checks and bounds

    def mirror_W_formula_check(self, diagram: GaussDiagram) -> bool:
        """
        Compare W of the mirror with the sum of -t^span_i W_i(t^-1).

        Returns:
            bool: True when both sides agree
        """
        expected = LaurentPolynomial.zero()
        for part, span in zip(self.writhe_poly_components(diagram), self.indices.spans(diagram)):
            expected = expected - part.invert_variable().shift(span)
        return self.writhe_poly_W(diagram.mirror_all()) == expected

    def self_crossing_lower_bound(self, diagram: GaussDiagram) -> int:
        w = self.writhe_poly_W(diagram).coeff_abs_sum()
        b = self.B_ts(diagram).coeff_abs_sum(exclude_zero_exponent=True)
        return max(w, b)

    def real_crossing_lower_bound(self, diagram: GaussDiagram) -> int:
        """Number of chords whose smoothing must change Wbar, read off L_ts"""
        return self.L_ts(diagram).coeff_abs_sum_excluding(self.flat_writhe_Wbar(diagram))

    # Bundles

    def report(self, diagram: GaussDiagram, code: Optional[str] = None) -> InvariantReport:
        """
        Compute every invariant of a diagram.

        Args:
            diagram: Diagram
            code: Input text to echo; the serialized diagram when omitted

        Returns:
            InvariantReport: All invariants, bounds and flags
        """
        # Smoothings are shared by L, B and Bbar
        profile = self.smoothing_profile(diagram)
        w = self.writhe_poly_W(diagram)
        wbar = self.flat_writhe_Wbar(diagram)
        l_ts = self.L_ts(diagram, profile)
        b = self.B_ts(diagram, profile)
        bbar = b - b.invert_t()
        # P and f exist for knots only
        knot = diagram.num_components == 1
        bound_w = w.coeff_abs_sum()
        bound_b = b.coeff_abs_sum(exclude_zero_exponent=True)
        return InvariantReport(
            input=code if code is not None else serialize(diagram),
            components=diagram.num_components,
            spans=self.indices.span_multiset(diagram),
            writhe=diagram.total_writhe(),
            linking_writhe=self.linking_writhe(diagram),
            W=w.to_json(),
            Wbar=wbar.to_json(),
            W_i=[part.to_json() for part in self.writhe_poly_components(diagram)],
            W_mod_span=self.writhe_poly_mod_span(diagram).to_json(),
            P=self.affine_index_P(diagram).to_json() if knot else None,
            f=self.odd_writhe_f(diagram).to_json() if knot else None,
            L_ts=l_ts.to_json(),
            B=b.to_json(),
            Bbar=bbar.to_json(),
            self_crossing_lower_bound=max(bound_w, bound_b),
            self_crossing_bound_from_W=bound_w,
            self_crossing_bound_from_B=bound_b,
            real_crossing_lower_bound=l_ts.coeff_abs_sum_excluding(wbar),
            nonclassical=bool(w) or bool(l_ts) or bool(b),
            nontrivial_flat=bool(wbar) or bool(bbar),
        )

    def invariant_values(self, diagram: GaussDiagram, names: Sequence[str]) -> Dict[str, Any]:
        """
        Selected invariants by name.

        Args:
            diagram: Diagram
            names: Names from VERIFIABLE; P and f are skipped on links

        Returns:
            Dict[str, Any]: name -> value
        """
        unknown = [name for name in names if name not in VERIFIABLE]
        if unknown:
            raise VlinkError(f"Unknown invariant(s): {', '.join(unknown)}")
        # Smooth only when a smoothing invariant is asked for
        profile = self.smoothing_profile(diagram) if {"Lts", "B", "Bbar"} & set(names) else None
        compute: Dict[str, Callable[[], Any]] = {
            "W": lambda: self.writhe_poly_W(diagram),
            "Wbar": lambda: self.flat_writhe_Wbar(diagram),
            "P": lambda: self.affine_index_P(diagram),
            "f": lambda: self.odd_writhe_f(diagram),
            "Lts": lambda: self.L_ts(diagram, profile),
            "B": lambda: self.B_ts(diagram, profile),
            "Bbar": lambda: self.Bbar_ts(diagram, profile),
            "span": lambda: self.indices.span_multiset(diagram),
            "W_mod_span": lambda: self.writhe_poly_mod_span(diagram),
        }
        values = {}
        for name in names:
            if name in ("P", "f") and diagram.num_components != 1:
                continue
            values[name] = compute[name]()
        return values

    def verify(self, diagram: GaussDiagram, steps: int, seed: int, names: Sequence[str] = VERIFIABLE,
               fuzzer: Optional[EquivalenceFuzzer] = None, corrupt_step: Optional[int] = None) -> VerifyResult:
        """
        Fuzz a diagram and compare invariants at both ends of the move sequence.

        Args:
            diagram: Starting diagram
            steps: Moves to apply
            seed: Fuzzer seed
            names: Invariants to compare
            fuzzer: Fuzzer to use; a default one sharing this manager's moves when omitted
            corrupt_step: Inject a sign-corrupted bigon at this step (negative control)

        Returns:
            VerifyResult: Per-invariant verdicts and the replayable trace
        """
        # Fuzz, then replay the trace to get the far end
        fuzzer = fuzzer or EquivalenceFuzzer(self.moves)
        trace = fuzzer.fuzz_equivalent(diagram, steps, seed, corrupt_step=corrupt_step)
        final = self.moves.replay(trace)[-1]
        # Compare every requested invariant at both ends
        before = self.invariant_values(diagram, names)
        after = self.invariant_values(final, names)
        verdicts = {name: before[name] == after[name] for name in before}
        result = VerifyResult(input=serialize(diagram), steps=steps, seed=seed, verdicts=verdicts, trace=trace)
        if result.passed:
            logger.debug("Seed %d: all %d invariant(s) agree", seed, len(verdicts))
        else:
            logger.warning("Seed %d: invariants changed: %s", seed, ", ".join(result.failures()))
        return result


def _as_exponent(value: Union[int, LaurentPolynomial]) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.constant(value)
