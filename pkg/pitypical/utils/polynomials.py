from __future__ import annotations

from typing import List, Optional

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.series import PowerSeries

_TRANSFORMS = standard_transformations + (convert_xor,)
_PI = Symbol("varpi")


def parse_polynomial(spec: LocalFieldSpec, text: str, D: Optional[int] = None, var: str = "T") -> PowerSeries:
    """
    Read a polynomial such as ``pi*T + T^2`` into a truncated series.

    Coefficients are integer polynomials in ``pi``, the uniformizer of the field.
    """
    variable = Symbol(var)
    expr = parse_expr(text, local_dict={var: variable, "pi": _PI}, transformations=_TRANSFORMS)
    poly = Poly(expr, variable, _PI)
    if not all(c.is_integer for c in poly.coeffs()):
        raise ValueError(f"coefficients of {text!r} must be integers")

    degree = max((monom[0] for monom in poly.monoms()), default=0)
    D = degree if D is None else D
    coeffs = [OElement.zero(spec)] * (D + 1)
    pi = OElement.pi(spec)
    for (t_exp, pi_exp), c in zip(poly.monoms(), poly.coeffs()):
        if t_exp <= D:
            coeffs[t_exp] = coeffs[t_exp] + OElement.from_int(spec, int(c)) * pi ** pi_exp
    return PowerSeries(spec, tuple(coeffs), var)


def parse_integer_polynomial(text: str, var: str = "y") -> List[int]:
    """Integer coefficients of a univariate polynomial, low-degree first."""
    variable = Symbol(var)
    poly = Poly(parse_expr(text, local_dict={var: variable}, transformations=_TRANSFORMS), variable)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    return coeffs or [0]


def parse_eisenstein(text: str) -> List[List[int]]:
    """
    Rows of E(x) for strings like ``x^2 - 2`` or ``x - 2 - 2*y``.

    Row i lists the coefficients in y (low-degree first) of x^i; reduction
    modulo g happens when the field spec is built.
    """
    x, y = Symbol("x"), Symbol("y")
    expr = parse_expr(text, local_dict={"x": x, "y": y}, transformations=_TRANSFORMS)
    poly = Poly(expr, x, y)
    if not all(c.is_integer for c in poly.coeffs()):
        raise ValueError(f"coefficients of {text!r} must be integers")
    x_degree = max(monom[0] for monom in poly.monoms())
    y_degree = max(monom[1] for monom in poly.monoms())
    rows = [[0] * (y_degree + 1) for _ in range(x_degree + 1)]
    for (i, j), c in zip(poly.monoms(), poly.coeffs()):
        rows[i][j] = int(c)
    return rows
