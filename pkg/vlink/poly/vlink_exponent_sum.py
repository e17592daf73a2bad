"""Formal integer sums of t-powers whose exponents are Laurent polynomials in s"""

from typing import Any, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

import sympy as sp

from vlink.poly.vlink_laurent import LaurentPolynomial

ExponentTerm = Tuple[LaurentPolynomial, int]


class ExponentSum:
    """
    Element of the group ring Z[t^g : g a Laurent polynomial in s].

    t^0 is the unit; a term is stored only when its coefficient is nonzero. Terms are
    ordered by the exponent's sorted (exponent, coefficient) sequence.

    Args:
        terms: Mapping or iterable of (exponent, coefficient)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[LaurentPolynomial, int], Iterable[ExponentTerm], None] = None):
        acc: Dict[LaurentPolynomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponent, coeff in items:
            acc[exponent] = acc.get(exponent, 0) + int(coeff)
        self._terms: Tuple[ExponentTerm, ...] = tuple(
            sorted(((g, c) for g, c in acc.items() if c != 0), key=lambda term: term[0].sort_key())
        )
        self._hash = hash(self._terms)

    @classmethod
    def zero(cls) -> "ExponentSum":
        return cls()

    @classmethod
    def term(cls, coeff: int, exponent: LaurentPolynomial) -> "ExponentSum":
        """coeff * t^exponent"""
        return cls({exponent: coeff})

    @classmethod
    def unit(cls, coeff: int = 1) -> "ExponentSum":
        return cls.term(coeff, LaurentPolynomial.zero())

    @property
    def terms(self) -> Tuple[ExponentTerm, ...]:
        return self._terms

    def coeff(self, exponent: LaurentPolynomial) -> int:
        return dict(self._terms).get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[ExponentTerm]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "ExponentSum") -> "ExponentSum":
        if not isinstance(other, ExponentSum):
            return NotImplemented
        return ExponentSum(self._terms + other._terms)

    def __radd__(self, other: Any) -> "ExponentSum":
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self) -> "ExponentSum":
        return ExponentSum((g, -c) for g, c in self._terms)

    def __sub__(self, other: "ExponentSum") -> "ExponentSum":
        if not isinstance(other, ExponentSum):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ExponentSum":
        return ExponentSum((g, scalar * c) for g, c in self._terms)

    def invert_t(self) -> "ExponentSum":
        """t -> t^-1: negate every exponent"""
        return ExponentSum((-g, c) for g, c in self._terms)

    def invert_s(self) -> "ExponentSum":
        """s -> s^-1 inside every exponent"""
        return ExponentSum((g.invert_variable(), c) for g, c in self._terms)

    def coeff_abs_sum(self, exclude_zero_exponent: bool = False) -> int:
        return sum(abs(c) for g, c in self._terms if not (exclude_zero_exponent and g.is_zero()))

    def coeff_abs_sum_excluding(self, exponent: LaurentPolynomial) -> int:
        """Sum of absolute coefficients over terms whose exponent differs from `exponent`"""
        return sum(abs(c) for g, c in self._terms if g != exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ExponentSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"coeff": c, "exp": g.to_json()} for g, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]]) -> "ExponentSum":
        return cls((LaurentPolynomial.from_json(item["exp"]), item["coeff"]) for item in data)

    def as_expr(self, var: sp.Symbol, exponent_var: sp.Symbol) -> sp.Expr:
        """The sum as a sympy expression in t = `var`, exponents expanded in s = `exponent_var`"""
        return sp.Add(*[c * var ** g.as_expr(exponent_var) for g, c in self._terms])

    @classmethod
    def from_expr(cls, expr: sp.Expr, var: sp.Symbol, exponent_var: sp.Symbol) -> "ExponentSum":
        """
        Read a sympy sum of integer multiples of powers of `var`.

        Products of powers of `var` are merged first, so t*t**s reads as t^(s + 1).

        Args:
            expr: Expression such as 2*t**(1/s + s - 1 - s**2) - 2
            var: Outer variable
            exponent_var: Variable of the exponents

        Returns:
            ExponentSum: Its canonical form

        Raises:
            ValueError: A term is not an integer times a power of `var`
        """
        terms: List[ExponentTerm] = []
        for power, coeff in sp.powsimp(expr).as_coefficients_dict().items():
            if not coeff.is_Integer:
                raise ValueError(f"Non-integer coefficient {coeff}")
            if power == 1:
                exponent = LaurentPolynomial.zero()
            else:
                base, exp = power.as_base_exp()
                if base != var:
                    raise ValueError(f"Not a power of {var}: {power}")
                exponent = LaurentPolynomial.from_expr(exp, exponent_var)
            terms.append((exponent, int(coeff)))
        return cls(terms)

    def format(self, var: str = "t", exponent_var: str = "s") -> str:
        """
        Human readable form.

        Args:
            var: Outer variable name
            exponent_var: Variable of the exponents

        Returns:
            str: e.g. "2t^(-s^-2 - 1 + s + s^-1) - 2"
        """
        if not self._terms:
            return "0"
        out = ""
        for i, (g, c) in enumerate(self._terms):
            mag = abs(c)
            if g.is_zero():
                body = str(mag)
            else:
                power = f"{var}^({g.format(exponent_var)})"
                body = power if mag == 1 else f"{mag}{power}"
            if i == 0:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ExponentSum({self.format()!r})"
