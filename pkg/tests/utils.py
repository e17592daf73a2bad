"""Test utilities for vlink"""

import random
from typing import Dict, List

import sympy as sp

from vlink.gauss.vlink_gauss_diagram import Endpoint, GaussDiagram, Role
from vlink.models import EndpointSignConvention, LeftArc
from vlink.poly.vlink_laurent import LaurentPolynomial


def random_diagram(rng: random.Random, max_components: int = 3, max_chords: int = 7,
                   allow_empty: bool = True) -> GaussDiagram:
    """
    Random Gauss diagram: every endpoint lands on a random circle at a random position.

    Args:
        rng: Random generator
        max_components: Upper bound on circles
        max_chords: Upper bound on chords
        allow_empty: Permit diagrams with empty circles

    Returns:
        GaussDiagram: Diagram labeled 1..n
    """
    components = rng.randint(1, max_components)
    chords = rng.randint(0, max_chords)
    circles: List[List[Endpoint]] = [[] for _ in range(components)]
    signs: Dict[str, int] = {}
    for k in range(1, chords + 1):
        label = str(k)
        signs[label] = rng.choice((1, -1))
        for role in Role:
            circle = circles[rng.randrange(components)]
            circle.insert(rng.randint(0, len(circle)), Endpoint(label, role))
    if not allow_empty:
        for circle in circles:
            if not circle:
                label = str(len(signs) + 1)
                signs[label] = rng.choice((1, -1))
                circle.extend([Endpoint(label, Role.OVER), Endpoint(label, Role.UNDER)])
    return GaussDiagram(circles, signs)


def random_knot(rng: random.Random, max_chords: int = 7) -> GaussDiagram:
    return random_diagram(rng, max_components=1, max_chords=max_chords)


def naive_left_sum(diagram: GaussDiagram, label: str, convention: EndpointSignConvention,
                   own_component_only: bool) -> int:
    """
    Walk the left arc of a self chord and add up endpoint signs from scratch.

    Args:
        diagram: Diagram
        label: Self chord label
        convention: Sign convention to apply
        own_component_only: Count only endpoints of self chords of the same circle

    Returns:
        int: Signed endpoint count
    """
    over = diagram.locate(label, Role.OVER)
    under = diagram.locate(label, Role.UNDER)
    assert over.circle == under.circle
    circle = diagram.circles[over.circle]
    if convention.left_arc == LeftArc.OVER_TO_UNDER:
        start, stop = over.position, under.position
    else:
        start, stop = under.position, over.position

    total = 0
    k = (start + 1) % len(circle)
    while k != stop:
        endpoint = circle[k]
        other = diagram.locate(endpoint.label, endpoint.role.opposite)
        if not own_component_only or other.circle == over.circle:
            sign = diagram.sign(endpoint.label) * convention.over_sign_factor
            total += sign if endpoint.role == Role.OVER else -sign
        k = (k + 1) % len(circle)
    return total


def f_s() -> LaurentPolynomial:
    """s^-1 + s - 1 - s^2"""
    s = sp.Symbol("s")
    return LaurentPolynomial.from_expr(1 / s + s - 1 - s ** 2, s)


def lp(*terms) -> LaurentPolynomial:
    """Build a Laurent polynomial from (exponent, coefficient) pairs"""
    return LaurentPolynomial(terms)
