"""Exact Laurent polynomials in one variable with integer coefficients, on sympy's sparse ring Z[x]"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

Term = Tuple[int, int]

_EXPONENT_LIMIT = 2 ** 62

# x^shift * p with p in Z[x] and p(0) != 0
_RING, _X = ring("x", ZZ)
_SYMBOL = _RING.symbols[0]


class LaurentPolynomial:
    """
    Immutable integer Laurent polynomial.

    Held as a power of x times an element of sympy's sparse ring Z[x] with nonzero constant term, so
    every ring operation is exact sympy polynomial arithmetic. `terms` lists (exponent, coefficient)
    pairs sorted by exponent with no zero coefficient. The variable is only a name used when printing.

    Args:
        terms: Mapping or iterable of (exponent, coefficient); repeated exponents add up
    """

    __slots__ = ("_shift", "_poly", "_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Term], None] = None):
        acc: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponent, coeff in items:
            exponent, coeff = int(exponent), int(coeff)
            assert abs(exponent) < _EXPONENT_LIMIT, "exponent out of range"
            acc[exponent] = acc.get(exponent, 0) + coeff
        acc = {e: c for e, c in acc.items() if c != 0}
        shift = min(acc, default=0)
        self._shift = shift
        self._poly: PolyElement = _RING.from_dict({(e - shift,): c for e, c in acc.items()})
        self._terms: Optional[Tuple[Term, ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, shift: int, poly: PolyElement) -> "LaurentPolynomial":
        # pull the lowest power of x out of poly
        low = min((monom[0] for monom in poly.keys()), default=0)
        if low:
            poly = _RING.from_dict({(monom[0] - low,): c for monom, c in poly.items()})
        result = cls.__new__(cls)
        result._shift = shift + low if poly else 0
        result._poly = poly
        result._terms = None
        result._hash = None
        return result

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def from_expr(cls, expr: sp.Expr, variable: sp.Symbol) -> "LaurentPolynomial":
        """
        Read a sympy expression that expands to an integer Laurent polynomial in `variable`.

        Args:
            expr: Expression such as 1/s + s - 1 - s**2
            variable: The polynomial variable

        Returns:
            LaurentPolynomial: Its canonical form

        Raises:
            ValueError: A term has a non-integer coefficient or exponent
        """
        terms: List[Term] = []
        for term in sp.Add.make_args(sp.expand(expr)):
            coeff, exponent = term.as_coeff_exponent(variable)
            if not (coeff.is_Integer and exponent.is_Integer):
                raise ValueError(f"Not an integer Laurent polynomial in {variable}: {term}")
            terms.append((int(exponent), int(coeff)))
        return cls(terms)

    def as_expr(self, variable: Optional[sp.Symbol] = None) -> sp.Expr:
        """The polynomial as an expanded sympy expression in `variable` (x by default)"""
        variable = _SYMBOL if variable is None else variable
        return sp.expand(variable ** self._shift * self._poly.as_expr(variable))

    @property
    def terms(self) -> Tuple[Term, ...]:
        if self._terms is None:
            self._terms = tuple(sorted((monom[0] + self._shift, int(c)) for monom, c in self._poly.items()))
        return self._terms

    def coeff(self, exponent: int) -> int:
        return int(self._poly.get((exponent - self._shift,), 0))

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._poly)

    # Ring operations

    def __add__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        other = _coerce(other)
        if not other._poly:
            return self
        if not self._poly:
            return other
        low = min(self._shift, other._shift)
        poly = self._poly * _X ** (self._shift - low) + other._poly * _X ** (other._shift - low)
        return LaurentPolynomial._wrap(low, poly)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._wrap(self._shift, -self._poly)

    def __sub__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        other = _coerce(other)
        return LaurentPolynomial._wrap(self._shift + other._shift, self._poly * other._poly)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by x^k"""
        if not self._poly:
            return self
        return LaurentPolynomial._wrap(self._shift + k, self._poly)

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute x -> x^-1"""
        return LaurentPolynomial((-e, c) for e, c in self.terms)

    def evaluate(self, x: int) -> sp.Expr:
        """Value at an integer point, exact (a sympy Rational when x^-1 appears)"""
        return self.as_expr().subs(_SYMBOL, x)

    def coeff_abs_sum(self, exclude_zero_exponent: bool = False) -> int:
        """
        Sum of absolute coefficients.

        Args:
            exclude_zero_exponent: Skip the constant term

        Returns:
            int: The sum
        """
        return sum(abs(c) for e, c in self.terms if not (exclude_zero_exponent and e == 0))

    # Comparison and output

    def sort_key(self) -> Tuple[Term, ...]:
        return self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __lt__(self, other: "LaurentPolynomial") -> bool:
        return self.terms < other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def to_json(self) -> List[List[int]]:
        return [[e, c] for e, c in self.terms]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "LaurentPolynomial":
        return cls((e, c) for e, c in data)

    def format(self, var: str = "t") -> str:
        """
        Human readable form, ascending exponent.

        Args:
            var: Variable name

        Returns:
            str: e.g. "-t + t^2"
        """
        if not self._poly:
            return "0"
        out = ""
        for i, (e, c) in enumerate(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if i == 0:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.terms)!r})"


def _coerce(value: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    raise TypeError(f"Cannot combine LaurentPolynomial with {type(value).__name__}")
