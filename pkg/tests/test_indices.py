import random

import pytest

from tests.utils import f_s, naive_left_sum, random_diagram, random_knot
from vlink.errors import NotASelfChord
from vlink.gauss import Endpoint, Role, parse
from vlink.indices import VlinkIndexManager
from vlink.invariants import VlinkInvariantManager
from vlink.models import EndpointSignConvention, LeftArc


def convention(name: str) -> EndpointSignConvention:
    return EndpointSignConvention.preset(name)


class TestEndpointSign:
    def test_default_convention(self, index_manager):
        d = parse("O1+U1+")
        assert index_manager.convention == convention("d")
        assert index_manager.endpoint_sign(d, Endpoint("1", Role.OVER)) == -1
        assert index_manager.endpoint_sign(d, Endpoint("1", Role.UNDER)) == 1

    def test_endpoint_signs_of_a_chord_cancel(self, kishino):
        for name in ("a", "b", "c", "d"):
            manager = VlinkIndexManager(convention(name))
            for label in kishino.labels:
                total = sum(manager.endpoint_sign(kishino, Endpoint(label, role)) for role in Role)
                assert total == 0

    def test_factor_flip_negates_every_sign(self, kishino):
        plus, minus = VlinkIndexManager(convention("a")), VlinkIndexManager(convention("c"))
        for circle in kishino.circles:
            for endpoint in circle:
                assert plus.endpoint_sign(kishino, endpoint) == -minus.endpoint_sign(kishino, endpoint)

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            convention("e")


class TestLeftPart:
    def test_kink_has_empty_left_part(self, index_manager):
        assert index_manager.left_part(parse("O1+U1+"), "1") == []

    def test_over_to_under_arc(self):
        manager = VlinkIndexManager(convention("c"))
        assert manager.left_part(parse("O1+O2+U1+U2+"), "1") == [Endpoint("2", Role.OVER)]

    def test_kishino_first_chord(self, index_manager, kishino):
        part = index_manager.left_part(kishino, "1")
        assert sum(index_manager.endpoint_sign(kishino, e) for e in part) == -1

    def test_linking_chord_rejected(self, index_manager, hopf):
        with pytest.raises(NotASelfChord):
            index_manager.left_part(hopf, "1")
        with pytest.raises(NotASelfChord):
            index_manager.ind_prime(hopf, "1")


class TestChordIndices:
    def test_kink_index_is_zero(self, index_manager):
        assert index_manager.ind(parse("O1+U1+"), "1") == 0
        assert index_manager.ind(parse("U1-O1-"), "1") == 0

    def test_kishino_indices(self, index_manager, kishino):
        assert [index_manager.ind(kishino, label) for label in kishino.labels] == [-1, -1, -1, -1]

    def test_kishino_variant_indices(self, index_manager, kishino_variant):
        assert index_manager.ind_all(kishino_variant) == {"1": -1, "2": -1, "3": 1, "4": 1}

    def test_virtual_trefoil_indices(self, index_manager, virtual_trefoil):
        assert index_manager.ind(virtual_trefoil, "1") == 1
        assert index_manager.ind(virtual_trefoil, "2") == -1

    def test_linking_endpoints_enter_ind_prime_only(self, index_manager):
        d = parse("O1+O2+U1+U2+O3+;U3+")
        assert index_manager.ind(d, "1") == 1
        assert index_manager.ind(d, "2") == -1
        assert index_manager.ind_prime(d, "1") == 0
        assert index_manager.ind_prime(d, "2") == -2

    def test_eg1_link_indices(self, index_manager, eg1_link):
        assert index_manager.ind_all(eg1_link) == {"1": 1, "3": 1}
        assert index_manager.ind_prime_all(eg1_link) == {"1": 1, "3": 2}

    def test_tables_are_copies(self, index_manager, eg1_link):
        tables = index_manager.tables(eg1_link)
        assert tables.ind == index_manager.ind_all(eg1_link)
        assert tables.ind_prime == index_manager.ind_prime_all(eg1_link)
        assert list(tables.spans) == index_manager.spans(eg1_link)
        tables.ind["1"] = 99
        assert index_manager.ind(eg1_link, "1") == 1

    def test_kink_around_linking_endpoints_has_span_index(self, index_manager):
        d = parse("U3+O1+O2+O3+;U1+U2+")
        assert index_manager.span(d, 0) == -2
        assert index_manager.ind(d, "3") == 0
        assert index_manager.ind_prime(d, "3") == -2

    def test_ind_equals_ind_prime_on_knots(self, index_manager):
        rng = random.Random(17)
        for _ in range(100):
            d = random_knot(rng)
            assert index_manager.ind_all(d) == index_manager.ind_prime_all(d)

    def test_ind_equals_ind_prime_of_restriction(self, index_manager):
        rng = random.Random(19)
        for _ in range(100):
            d = random_diagram(rng)
            for circle in range(d.num_components):
                restricted = d.restrict_component(circle)
                for label in d.self_chords(circle):
                    assert index_manager.ind(d, label) == index_manager.ind_prime(restricted, label)

    @pytest.mark.parametrize("name", ["a", "b", "c", "d"])
    def test_prefix_sums_match_naive_walk(self, name):
        manager = VlinkIndexManager(convention(name))
        rng = random.Random(23)
        for _ in range(100):
            d = random_diagram(rng)
            for label in d.self_chords():
                assert manager.ind(d, label) == naive_left_sum(d, label, manager.convention, True)
                assert manager.ind_prime(d, label) == naive_left_sum(d, label, manager.convention, False)


class TestSpans:
    def test_knot_span_is_zero(self, index_manager, kishino):
        assert index_manager.span_multiset(kishino) == [0]

    def test_hopf_spans_cancel(self, hopf):
        for name in ("a", "b", "c", "d"):
            assert VlinkIndexManager(convention(name)).spans(hopf) == [0, 0]

    def test_parallel_linking_chords(self, index_manager):
        d = parse("O1+O2+;U1+U2+")
        assert index_manager.spans(d) == [-2, 2]
        assert index_manager.span_multiset(d) == [-2, 2]

    def test_spans_sum_to_zero(self, index_manager):
        rng = random.Random(29)
        for _ in range(100):
            assert sum(index_manager.spans(random_diagram(rng))) == 0


class TestIndexIdentities:
    def test_two_sidedness_on_knots(self):
        left, right = VlinkIndexManager(convention("c")), VlinkIndexManager(convention("d"))
        rng = random.Random(31)
        for _ in range(100):
            d = random_knot(rng)
            for label in d.labels:
                assert left.ind(d, label) + right.ind(d, label) == 0

    def test_two_sidedness_on_links(self):
        left, right = VlinkIndexManager(convention("c")), VlinkIndexManager(convention("d"))
        rng = random.Random(37)
        for _ in range(100):
            d = random_diagram(rng)
            for label in d.self_chords():
                circle = d.chord(label).over_end.circle
                assert left.ind_prime(d, label) + right.ind_prime(d, label) == right.span(d, circle)

    def test_crossing_change_identity(self, index_manager):
        rng = random.Random(41)
        for _ in range(100):
            d = random_diagram(rng)
            for label in d.self_chords():
                changed = d.crossing_change(label)
                circle = d.chord(label).over_end.circle
                assert (index_manager.ind_prime(d, label) + index_manager.ind_prime(changed, label)
                        == index_manager.span(d, circle))
                assert index_manager.spans(changed) == index_manager.spans(d)
                for other in d.self_chords():
                    if other != label:
                        assert index_manager.ind_prime(changed, other) == index_manager.ind_prime(d, other)


class TestConventionCalibration:
    def test_default_reproduces_kishino_data(self, kishino):
        manager = VlinkInvariantManager()
        assert all(value == -1 for value in manager.indices.ind_all(kishino).values())
        assert manager.flat_writhe_Wbar(manager.moves.smooth(kishino, "1")) == f_s().invert_variable()

    def test_only_one_preset_reproduces_both_facts(self, kishino):
        matching = []
        for name in ("a", "b", "c", "d"):
            manager = VlinkInvariantManager(convention(name))
            indices_ok = all(value == -1 for value in manager.indices.ind_all(kishino).values())
            smoothing_ok = manager.flat_writhe_Wbar(manager.moves.smooth(kishino, "1")) == f_s().invert_variable()
            if indices_ok and smoothing_ok:
                matching.append(name)
        assert matching == ["d"]

    def test_default_preset_fields(self):
        default = EndpointSignConvention()
        assert default.over_sign_factor == -1
        assert default.left_arc == LeftArc.UNDER_TO_OVER
        assert convention("default") == default
