"""Embedded catalog of the 36 H-primes of O_q(GL_3) and their attached data.

Every table below is stored data.  ``catalog_load`` rebuilds what it
can from first principles (generator formulas, permutation bookkeeping,
exponent vectors of display forms) and refuses to load on any mismatch.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .hopf import composite_name, is_anti, parse_composite
from .ideals import (
    Permutation,
    all_w,
    build_hprime,
    parse_w,
    permutation_table,
    w_key,
)
from .notation import factor_spec, parse_monomial, product
from .qmatrix import AlgebraElement, MinorSpec
from .qtorus import exponent_vector
from .scalars import PARAMETERS, LaurentScalar


class CatalogIntegrityError(RuntimeError):
    pass


class ParameterError(ValueError):
    pass


# H-prime generators, listed in an order that is a polynormal sequence.
HPRIME_GENERATORS: Dict[str, str] = {
    "321,321": "",
    "321,231": "[12|23]",
    "321,312": "X13",
    "321,132": "X13 X12",
    "321,213": "X13 X23",
    "321,123": "X13 X23 X12",
    "231,321": "X31",
    "231,231": "X31 [12|23]",
    "231,312": "X31 X13",
    "231,132": "X31 X13 X12",
    "231,213": "X31 X13 X23",
    "231,123": "X31 X13 X23 X12",
    "312,321": "[23|12]",
    "312,231": "[23|12] [12|23]",
    "312,312": "[23|12] X13",
    "312,132": "[23|12] X13 X12",
    "312,213": "[23|12] X13 X23",
    "312,123": "[23|12] X13 X23 X12",
    "132,321": "X31 X21",
    "132,231": "X31 X21 [12|23]",
    "132,312": "X31 X21 X13",
    "132,132": "X31 X21 X13 X12",
    "132,213": "X31 X21 X13 X23",
    "132,123": "X31 X21 X13 X23 X12",
    "213,321": "X31 X32",
    "213,231": "X31 X32 [12|23]",
    "213,312": "X31 X32 X13",
    "213,132": "X31 X32 X13 X12",
    "213,213": "X31 X32 X13 X23",
    "213,123": "X31 X32 X13 X23 X12",
    "123,321": "X31 X21 X32",
    "123,231": "X31 X21 X32 [12|23]",
    "123,312": "X31 X21 X32 X13",
    "123,132": "X31 X21 X32 X13 X12",
    "123,213": "X31 X21 X32 X13 X23",
    "123,123": "X31 X21 X32 X13 X23 X12",
}

# Generators of the denominator sets E^+_y (normal modulo Q^+_y) and E^-_y.
DENOMINATORS_PLUS: Dict[str, str] = {
    "321": "X31 [23|12]",
    "231": "X21 X32",
    "312": "X31 [13|12]",
    "132": "X11 X32 [23|23]",
    "213": "X21 [12|12] X33",
    "123": "X11 X22 X33",
}
DENOMINATORS_MINUS: Dict[str, str] = {
    "321": "[12|23] X13",
    "231": "[13|23] X13",
    "312": "X23 X12",
    "132": "[23|23] X23 X11",
    "213": "X33 X12 [12|12]",
    "123": "X33 X22 X11",
}

# Quantum-torus labels, rewrites F*P = q^k * R (mod Q_w) for display factors
# F that are not labels, and the center indeterminates as (display, vector).
TORUS = {
    "321,321": ("X11 X12 X13 X21 X31 [12|12] [12|23] [23|12] Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 0, 0, 1)), ("[23|12]*X13^-1", (0, 0, -1, 0, 0, 0, 0, 1, 0)), ("[12|23]*X31^-1", (0, 0, 0, 0, -1, 0, 1, 0, 0))]),
    "321,231": ("[23|12] X13 X11 X12 X21 X31 [13|23] Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 0, 1)), ("[23|12]*X13^-1", (1, -1, 0, 0, 0, 0, 0, 0))]),
    "321,312": ("X11 X12 X21 X23 X31 [12|12] [23|12] Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 0, 1)), ("X12*X23*X31^-1", (0, 1, 0, 1, -1, 0, 0, 0))]),
    "321,132": ("X11 X23 X31 X32 X33 [23|12] [23|23]", {"Dq": ("", "X11*[23|23]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 0, 1))]),
    "321,213": ("X33 X12 X31 X21 X11 [23|12] [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 0, 1))]),
    "321,123": ("X11 X21 X22 X31 [23|12] X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 0, 1)), ("X22*[23|12]*X31^-1", (0, 0, 1, -1, 1, 0))]),
    "231,321": ("X11 X21 X12 X32 X13 [12|12] [12|23] Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 0, 1)), ("X21*X32*X13^-1", (0, 1, 0, 1, -1, 0, 0, 0))]),
    "231,231": ("X13 X21 X32 X33 [13|23] [23|23] Dq", {"[12|13]": ("[13|23]", "X13*Dq", 0)},
        [("Dq", (0, 0, 0, 0, 0, 0, 1)), ("[13|23]*X21^-1", (0, -1, 0, 0, 1, 0, 0)), ("[12|13]*X32^-1", (1, 0, -1, 0, -1, 0, 1))]),
    "231,312": ("X11 X12 X21 X23 X32 X33 Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 1))]),
    "231,132": ("X11 X21 X32 X23 X33 [23|23]", {"Dq": ("", "X11*[23|23]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 1)), ("X11*X23*X32^-1", (1, 0, -1, 1, 0, 0))]),
    "231,213": ("X33 X32 X21 X12 X11 [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 1)), ("X12*X33*X21^-1", (1, 0, -1, 1, 0, 0))]),
    "231,123": ("X11 X21 X22 X32 X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 1))]),
    "312,321": ("[12|23] X31 X11 X12 X13 X21 [13|12] Dq", {},
        [("Dq", (0, 0, 0, 0, 0, 0, 0, 1)), ("[12|23]*X31^-1", (1, -1, 0, 0, 0, 0, 0, 0))]),
    "312,231": ("X11 X12 X13 X21 X31 [13|12] [13|23]", {"Dq": ("X12*X31", "X21*[13|12]*[13|23]", -1)},
        [("Dq", (0, -1, 0, 1, -1, 1, 1))]),
    "312,312": ("X31 X23 X12 X11 [13|12] [12|12] Dq", {"[23|13]": ("[13|12]", "X31*Dq", 0)},
        [("Dq", (0, 0, 0, 0, 0, 0, 1)), ("[23|13]*X12^-1", (1, 0, -1, 0, -1, 0, 1)), ("[13|12]*X23^-1", (0, -1, 0, 0, 1, 0, 0))]),
    "312,132": ("X11 X32 X23 X21 X31 [23|23]", {"Dq": ("", "X11*[23|23]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 1)), ("X11*X32*X23^-1", (1, 1, -1, 0, 0, 0))]),
    "312,213": ("X21 X33 X12 X11 X31 [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (0, 1, 0, 0, 0, 1)), ("X21*X33*X12^-1", (1, 1, -1, 0, 0, 0))]),
    "312,123": ("X11 X22 X31 X33 [13|12]", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 1, 0, 1, 0))]),
    "132,321": ("X11 X32 X13 X23 X33 [12|23] [23|23]", {"Dq": ("", "X11*[23|23]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 0, 1))]),
    "132,231": ("X11 X23 X32 X12 X13 [13|23]", {"Dq": ("X13", "X11*X23*[13|23]", 0)},
        [("Dq", (1, 1, 0, 0, -1, 1)), ("X11*X23*X32^-1", (1, 1, -1, 0, 0, 0))]),
    "132,312": ("X11 X12 X23 X32 X33 [23|23]", {"Dq": ("", "X11*[23|23]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 1)), ("X11*X32*X23^-1", (1, 0, -1, 1, 0, 0))]),
    "132,132": ("X11 [23|23] X23 X32 X33", {},
        [("X11", (1, 0, 0, 0, 0)), ("[23|23]", (0, 1, 0, 0, 0)), ("X23*X32^-1", (0, 0, 1, -1, 0))]),
    "132,213": ("X11 X12 X22 X32 X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 1))]),
    "132,123": ("X11 X22 X32 X33", {},
        [("X11", (1, 0, 0, 0)), ("X22*X33", (0, 1, 0, 1))]),
    "213,321": ("X33 X21 X13 X12 X11 [12|23] [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 0, 1))]),
    "213,231": ("X12 X33 X21 X11 X13 [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (0, 1, 0, 0, 0, 1)), ("X12*X33*X21^-1", (1, 1, -1, 0, 0, 0))]),
    "213,312": ("X33 X23 X12 X21 X11 [12|12]", {"Dq": ("", "X33*[12|12]", 0)},
        [("Dq", (1, 0, 0, 0, 0, 1)), ("X21*X33*X12^-1", (1, 0, -1, 1, 0, 0))]),
    "213,132": ("X11 X21 X22 X23 X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 1))]),
    "213,213": ("X33 [12|12] X12 X21 X11", {},
        [("X33", (1, 0, 0, 0, 0)), ("[12|12]", (0, 1, 0, 0, 0)), ("X12*X21^-1", (0, 0, 1, -1, 0))]),
    "213,123": ("X11 X21 X22 X33", {},
        [("X11*X22", (1, 0, 1, 0)), ("X33", (0, 0, 0, 1))]),
    "123,321": ("X11 X12 X22 X13 [12|23] X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 0, 1)), ("X22*[12|23]*X13^-1", (0, 0, 1, -1, 1, 0))]),
    "123,231": ("X11 X13 X22 X33 [13|23]", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 1, 0))]),
    "123,312": ("X11 X12 X22 X23 X33", {"Dq": ("", "X11*X22*X33", 0)},
        [("Dq", (1, 0, 1, 0, 1))]),
    "123,132": ("X11 X22 X23 X33", {},
        [("X11", (1, 0, 0, 0)), ("X22*X33", (0, 1, 0, 1))]),
    "123,213": ("X11 X12 X22 X33", {},
        [("X11*X22", (1, 0, 1, 0)), ("X33", (0, 0, 0, 1))]),
    "123,123": ("X11 X22 X33", {},
        [("X11", (1, 0, 0)), ("X22", (0, 1, 0)), ("X33", (0, 0, 1))]),
}

# Further congruences used to move between generating systems, as
# (lhs, [(coefficient, product), ...], ideal key or "" for the zero ideal).
FRACTION_IDENTITIES: List[Tuple[str, str, List[Tuple[str, str]], str]] = [
    ("X11 in the (231,231) torus", "[23|23]*X11", [("1", "Dq"), ("q^-1", "[13|23]*X21")], "231,231"),
    ("X12 in the (231,231) torus", "X12*X33", [("1", "[13|23]"), ("q", "X13*X32")], "231,231"),
    ("X22 in the (231,231) torus", "[13|23]*X22", [("q", "[23|23]*X12")], "231,231"),
    ("X23 in the (231,231) torus", "[13|23]*X23", [("q", "[23|23]*X13")], "231,231"),
    ("X32 in the (321,123) torus", "X21*X32", [("q", "X22*X31"), ("1", "[23|12]")], ""),
    ("X13*Dq modulo [12|23]", "X13*Dq", [("1", "[12|13]*[13|23]")], "321,231"),
]

# Row-by-row anchored congruences for the determinant and two minors.
DQ_DECOMPOSITIONS: Dict[str, Tuple[str, str]] = {
    # y -> (product congruent to Dq modulo Q^+_y, same modulo Q^-_y)
    "132": ("X11*[23|23]", "X11*[23|23]"),
    "213": ("[12|12]*X33", "[12|12]*X33"),
    "123": ("X11*X22*X33", "X11*X22*X33"),
}
MINOR_DECOMPOSITIONS: List[Tuple[str, str, str, str]] = [
    # (minor, product, sign, y): minor congruent to product modulo Q^sign_y
    ("[23|12]", "X21*X32", "+", "231"),
    ("[12|23]", "X12*X23", "-", "312"),
]

# Generators c = e - p*f of primitive ideals over Q_w, as (e, p, f).
PRIMITIVES: Dict[str, List[Tuple[str, str, str]]] = {
    "321,321": [("Dq", "alpha", "1"), ("[23|12]", "beta", "X13"), ("[12|23]", "gamma", "X31")],
    "321,231": [("Dq", "alpha", "1"), ("[23|12]", "beta", "X13")],
    "321,312": [("Dq", "alpha", "1"), ("X12*X23", "beta", "X31")],
    "321,132": [("Dq", "alpha", "1")],
    "321,213": [("Dq", "alpha", "1")],
    "321,123": [("Dq", "alpha", "1"), ("X22*[23|12]", "beta", "X31")],
    "231,321": [("Dq", "alpha", "1"), ("X21*X32", "beta", "X13")],
    "231,231": [("Dq", "alpha", "1"), ("[13|23]", "beta", "X21"), ("[12|13]", "gamma", "X32")],
    "231,312": [("Dq", "alpha", "1")],
    "231,132": [("Dq", "alpha", "1"), ("X11*X23", "beta", "X32")],
    "231,213": [("Dq", "alpha", "1"), ("X12*X33", "beta", "X21")],
    "231,123": [("Dq", "alpha", "1")],
    "312,321": [("Dq", "alpha", "1"), ("[12|23]", "beta", "X31")],
    "312,231": [("Dq", "alpha", "1")],
    "312,312": [("Dq", "alpha", "1"), ("[23|13]", "beta", "X12"), ("[13|12]", "gamma", "X23")],
    "312,132": [("Dq", "alpha", "1"), ("X11*X32", "beta", "X23")],
    "312,213": [("Dq", "alpha", "1"), ("X21*X33", "beta", "X12")],
    "312,123": [("Dq", "alpha", "1")],
    "132,321": [("Dq", "alpha", "1")],
    "132,231": [("Dq", "alpha", "1"), ("X11*X23", "beta", "X32")],
    "132,312": [("Dq", "alpha", "1"), ("X11*X32", "beta", "X23")],
    "132,132": [("X11", "alpha", "1"), ("[23|23]", "beta", "1"), ("X23", "gamma", "X32")],
    "132,213": [("Dq", "alpha", "1")],
    "132,123": [("X11", "alpha", "1"), ("X22*X33", "beta", "1")],
    "213,321": [("Dq", "alpha", "1")],
    "213,231": [("Dq", "alpha", "1"), ("X12*X33", "beta", "X21")],
    "213,312": [("Dq", "alpha", "1"), ("X21*X33", "beta", "X12")],
    "213,132": [("Dq", "alpha", "1")],
    "213,213": [("X33", "alpha", "1"), ("[12|12]", "beta", "1"), ("X12", "gamma", "X21")],
    "213,123": [("X11*X22", "alpha", "1"), ("X33", "beta", "1")],
    "123,321": [("Dq", "alpha", "1"), ("X22*[12|23]", "beta", "X13")],
    "123,231": [("Dq", "alpha", "1")],
    "123,312": [("Dq", "alpha", "1")],
    "123,132": [("X11", "alpha", "1"), ("X22*X33", "beta", "1")],
    "123,213": [("X11*X22", "alpha", "1"), ("X33", "beta", "1")],
    "123,123": [("X11", "alpha", "1"), ("X22", "beta", "1"), ("X33", "gamma", "1")],
}

# The O_q(SL_3) variant: D_q - alpha entries dropped, then parameters renamed.
PRIMITIVES_SL: Dict[str, List[Tuple[str, str, str]]] = {
    "321,321": [("[23|12]", "beta", "X13"), ("[12|23]", "gamma", "X31")],
    "321,231": [("[23|12]", "beta", "X13")],
    "321,312": [("X12*X23", "beta", "X31")],
    "321,132": [],
    "321,213": [],
    "321,123": [("X22*[23|12]", "beta", "X31")],
    "231,321": [("X21*X32", "beta", "X13")],
    "231,231": [("[13|23]", "beta", "X21"), ("[12|13]", "gamma", "X32")],
    "231,312": [],
    "231,132": [("X11*X23", "beta", "X32")],
    "231,213": [("X12*X33", "beta", "X21")],
    "231,123": [],
    "312,321": [("[12|23]", "beta", "X31")],
    "312,231": [],
    "312,312": [("[23|13]", "beta", "X12"), ("[13|12]", "gamma", "X23")],
    "312,132": [("X11*X32", "beta", "X23")],
    "312,213": [("X21*X33", "beta", "X12")],
    "312,123": [],
    "132,321": [],
    "132,231": [("X11*X23", "beta", "X32")],
    "132,312": [("X11*X32", "beta", "X23")],
    "132,132": [("X11", "alpha", "1"), ("[23|23]", "alpha^-1", "1"), ("X23", "gamma", "X32")],
    "132,213": [],
    "132,123": [("X11", "alpha", "1"), ("X22*X33", "alpha^-1", "1")],
    "213,321": [],
    "213,231": [("X12*X33", "beta", "X21")],
    "213,312": [("X21*X33", "beta", "X12")],
    "213,132": [],
    "213,213": [("X33", "alpha", "1"), ("[12|12]", "alpha^-1", "1"), ("X12", "gamma", "X21")],
    "213,123": [("X11*X22", "alpha", "1"), ("X33", "alpha^-1", "1")],
    "123,321": [("X22*[12|23]", "beta", "X13")],
    "123,231": [],
    "123,312": [],
    "123,132": [("X11", "alpha", "1"), ("X22*X33", "alpha^-1", "1")],
    "123,213": [("X11*X22", "alpha", "1"), ("X33", "alpha^-1", "1")],
    "123,123": [("X11", "alpha", "1"), ("X22", "beta", "1"), ("X33", "alpha^-1*beta^-1", "1")],
}

# Parameter renaming forced by D_q = 1 once D_q factors modulo Q_w.
SL_SUBSTITUTIONS: Dict[str, Dict[str, str]] = {
    "132,132": {"beta": "alpha^-1"},
    "132,123": {"beta": "alpha^-1"},
    "213,213": {"beta": "alpha^-1"},
    "213,123": {"beta": "alpha^-1"},
    "123,132": {"beta": "alpha^-1"},
    "123,213": {"beta": "alpha^-1"},
    "123,123": {"gamma": "alpha^-1*beta^-1"},
}

# (Anti-)isomorphisms among the localizations: each row starts from a base
# algebra and lists (target, composite map, anti?) with the map acting on the base.
SYMMETRY_ROWS: List[Tuple[str, List[Tuple[str, str, bool]]]] = [
    ("321,321", []),
    ("231,321", [("321,312", "tau", False), ("312,321", "S^-1", True), ("321,231", "S^-1 tau", True)]),
    ("132,321", [("321,132", "tau", False), ("213,321", "rho", True), ("321,213", "rho tau", True)]),
    ("123,321", [("321,123", "tau", False)]),
    ("231,231", [("312,312", "rho tau", True)]),
    ("312,231", [("231,312", "S", True)]),
    ("132,231", [
        ("132,312", "S", True), ("231,132", "tau S", True), ("213,312", "rho S", False),
        ("231,213", "rho tau S", False), ("312,132", "S^-1 tau S", False),
        ("213,231", "S^-1 rho S", True), ("312,213", "S^-1 rho tau S", True),
    ]),
    ("123,231", [("123,312", "S", True), ("231,123", "tau S", True), ("312,123", "S^-1 tau S", False)]),
    ("132,132", [("213,213", "rho", True)]),
    ("213,132", [("132,213", "tau", False)]),
    ("123,132", [("132,123", "tau", False), ("123,213", "rho", True), ("213,123", "rho tau", True)]),
    ("123,123", []),
]

# The bookkeeping table y, y^-1, w0 y^-1 w0, w0 y w0.
PERMUTATION_TABLE: List[Tuple[str, str, str, str]] = [
    ("321", "321", "321", "321"),
    ("231", "312", "231", "312"),
    ("312", "231", "312", "231"),
    ("132", "132", "213", "213"),
    ("213", "213", "132", "132"),
    ("123", "123", "123", "123"),
]


# ---------------------------------------------------------------------------

_PARAM = re.compile(r"^(alpha|beta|gamma)(?:\^(-?\d+))?$")


def parse_parameter(text: str, params: Optional[Mapping[str, object]] = None):
    """Evaluate 'alpha^-1*beta^-1' symbolically or with the given values."""
    out = LaurentScalar.const(1)
    for tok in text.split("*"):
        mt = _PARAM.match(tok.strip())
        if not mt:
            raise CatalogIntegrityError(f"bad parameter expression {text!r}")
        name, e = mt.group(1), int(mt.group(2) or 1)
        value = PARAMETERS[name] if params is None or name not in params else params[name]
        out = out * LaurentScalar.coerce(value) ** e
    return out


def _words(text: str) -> List[str]:
    return text.split()


@dataclass(frozen=True)
class Binomial:
    e: str
    parameter: str
    f: str

    def element(self, params: Optional[Mapping[str, object]] = None) -> AlgebraElement:
        return product(self.e) - product(self.f).scale(parse_parameter(self.parameter, params))

    def render(self) -> str:
        f = "" if self.f == "1" else "*" + self.f
        return f"{self.e} - {self.parameter}{f}"


@dataclass(frozen=True)
class Rewrite:
    factor: str
    multiplier: str  # P, possibly empty
    target: str  # R
    q_power: int

    def sides(self) -> Tuple[str, str]:
        lhs = self.factor if not self.multiplier else f"{self.factor}*{self.multiplier}"
        return lhs, self.target


@dataclass
class CatalogEntry:
    w: Tuple[Permutation, Permutation]
    hprime_generators: List[MinorSpec]
    denominators_plus: List[str]
    denominators_minus: List[str]
    torus_labels: List[str]
    center_displays: List[str]
    center_vectors: List[Tuple[int, ...]]
    rewrites: List[Rewrite]
    primitive_generators: List[Binomial]
    sl3_generators: List[Binomial]
    sl3_substitution: Dict[str, str] = field(default_factory=dict)
    dq_decomposition: Optional[Tuple[str, str]] = None  # (product, "+" or "-")

    @property
    def key(self) -> str:
        return w_key(self.w)

    @property
    def denominators(self) -> List[str]:
        return self.denominators_plus + [d for d in self.denominators_minus if d not in self.denominators_plus]


@dataclass(frozen=True)
class SymmetryTableEntry:
    source: str
    target: str
    maps: Tuple[str, ...]  # application order
    anti: bool

    @property
    def name(self) -> str:
        return composite_name(self.maps)


@dataclass
class Catalog:
    entries: Dict[str, CatalogEntry]
    symmetries: List[SymmetryTableEntry]
    permutation_table: List[Tuple[str, str, str, str]]
    fraction_identities: List[Tuple[str, str, List[Tuple[str, str]], str]]
    minor_decompositions: List[Tuple[str, str, str, str]]
    dq_decompositions: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    def __getitem__(self, key) -> CatalogEntry:
        if not isinstance(key, str):
            key = w_key(key)
        return self.entries[key]

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)


def _dq_decomposition(key: str) -> Optional[Tuple[str, str]]:
    plus, minus = key.split(",")
    if plus in DQ_DECOMPOSITIONS:
        return DQ_DECOMPOSITIONS[plus][0], "+"
    if minus in DQ_DECOMPOSITIONS:
        return DQ_DECOMPOSITIONS[minus][1], "-"
    return None


def _entry(key: str) -> CatalogEntry:
    plus, minus = key.split(",")
    labels, rewrites, claims = TORUS[key]
    return CatalogEntry(
        w=parse_w(key),
        hprime_generators=[factor_spec(t) for t in _words(HPRIME_GENERATORS[key])],
        denominators_plus=_words(DENOMINATORS_PLUS[plus]),
        denominators_minus=_words(DENOMINATORS_MINUS[minus]),
        torus_labels=_words(labels),
        center_displays=[d for d, _ in claims],
        center_vectors=[tuple(v) for _, v in claims],
        rewrites=[Rewrite(f, p, r, k) for f, (p, r, k) in rewrites.items()],
        primitive_generators=[Binomial(*t) for t in PRIMITIVES[key]],
        sl3_generators=[Binomial(*t) for t in PRIMITIVES_SL[key]],
        sl3_substitution=dict(SL_SUBSTITUTIONS.get(key, {})),
        dq_decomposition=_dq_decomposition(key),
    )


def symmetry_table() -> List[SymmetryTableEntry]:
    out = []
    for source, rows in SYMMETRY_ROWS:
        for target, name, anti in rows:
            out.append(SymmetryTableEntry(source, target, parse_composite(name), anti))
    return out


def sl_variant_expected(entry: CatalogEntry) -> List[Binomial]:
    """Drop the D_q - alpha rows and apply the stored parameter renaming."""
    out = []
    for b in entry.primitive_generators:
        if b.e == "Dq" and b.f == "1":
            continue
        out.append(Binomial(b.e, entry.sl3_substitution.get(b.parameter, b.parameter), b.f))
    return out


def validate(cat: Catalog) -> None:
    """Cross-check the stored data; raise CatalogIntegrityError on mismatch."""
    keys = [w_key(w) for w in all_w()]
    if sorted(cat.entries) != sorted(keys) or len(cat.entries) != 36:
        raise CatalogIntegrityError("the catalog must have exactly one entry per w in S3 x S3")
    for key in keys:
        entry = cat.entries[key]
        built = build_hprime(key)
        if set(built.generators) != set(entry.hprime_generators) or len(entry.hprime_generators) != len(built.generators):
            raise CatalogIntegrityError(
                f"entry {key}: stored generators {[str(s) for s in entry.hprime_generators]} "
                f"differ from the formula output {[str(s) for s in built.generators]}"
            )
        if len(entry.torus_labels) != 3 + entry.w[0].length() + entry.w[1].length():
            raise CatalogIntegrityError(f"entry {key}: wrong number of torus labels")
        rw = {r.factor: (r.multiplier.split("*") if r.multiplier else [], r.target.split("*")) for r in entry.rewrites}
        for display, vec in zip(entry.center_displays, entry.center_vectors):
            try:
                got = exponent_vector(display, entry.torus_labels, rw)
            except (KeyError, ValueError) as exc:
                raise CatalogIntegrityError(f"entry {key}: {exc}") from exc
            if got != tuple(vec):
                raise CatalogIntegrityError(f"entry {key}: display {display} has vector {got}, stored {vec}")
        if len(entry.primitive_generators) != len(entry.center_displays):
            raise CatalogIntegrityError(f"entry {key}: one primitive generator per center indeterminate expected")
        if sl_variant_expected(entry) != entry.sl3_generators:
            raise CatalogIntegrityError(f"entry {key}: SL_3 variant does not match the substitution note")
        for b in entry.primitive_generators + entry.sl3_generators:
            for name in (b.e, b.f):
                parse_monomial(name)
            parse_parameter(b.parameter)
    computed = permutation_table()
    if [tuple(r) for r in computed] != [tuple(r) for r in cat.permutation_table]:
        raise CatalogIntegrityError(f"permutation table mismatch: computed {computed}")
    for s in cat.symmetries:
        if is_anti(s.maps) != s.anti:
            raise CatalogIntegrityError(f"symmetry {s.name}: {s.source} -> {s.target} has the wrong iso/anti flag")
        if predicted_target(s.source, s.maps) != s.target:
            raise CatalogIntegrityError(
                f"symmetry {s.name}: {s.source} maps to {predicted_target(s.source, s.maps)}, not {s.target}"
            )


def predicted_target(source: str, maps: Sequence[str]) -> str:
    """Index bookkeeping: tau, S and rho act on w by the ideal-level laws."""
    wp, wm = parse_w(source)
    for k in maps:
        if k == "tau":
            wp, wm = wm.inverse(), wp.inverse()
        elif k in ("S", "S-1"):
            wp, wm = wp.inverse(), wm.inverse()
        elif k == "rho":
            wp, wm = wp.inverse().conj_w0(), wm.inverse().conj_w0()
        else:
            raise ValueError(k)
    return w_key((wp, wm))


@lru_cache(maxsize=None)
def catalog_load() -> Catalog:
    cat = Catalog(
        entries={w_key(w): _entry(w_key(w)) for w in all_w()},
        symmetries=symmetry_table(),
        permutation_table=list(PERMUTATION_TABLE),
        fraction_identities=list(FRACTION_IDENTITIES),
        minor_decompositions=list(MINOR_DECOMPOSITIONS),
        dq_decompositions=dict(DQ_DECOMPOSITIONS),
    )
    validate(cat)
    return cat


def _check_params(params: Optional[Mapping[str, object]]) -> Optional[Dict[str, LaurentScalar]]:
    if params is None:
        return None
    out = {}
    for name, value in params.items():
        if name not in PARAMETERS:
            raise ParameterError(f"unknown parameter {name!r}")
        if value is None:
            continue
        s = LaurentScalar.coerce(Fraction(value) if isinstance(value, str) else value)
        if s.is_zero():
            raise ParameterError(f"parameter {name} must be nonzero")
        out[name] = s
    return out


def primitive_ideal_generators(w, params: Optional[Mapping[str, object]] = None, sl: bool = False) -> List[AlgebraElement]:
    """Generators of Q_w followed by the instantiated binomials at position w."""
    key = w if isinstance(w, str) else w_key(w)
    entry = catalog_load()[key]
    values = _check_params(params)
    binomials = entry.sl3_generators if sl else entry.primitive_generators
    return build_hprime(key).elements() + [b.element(values) for b in binomials]
