from vlink.poly.vlink_laurent import LaurentPolynomial
from vlink.poly.vlink_exponent_sum import ExponentSum

__all__ = ["LaurentPolynomial", "ExponentSum"]
