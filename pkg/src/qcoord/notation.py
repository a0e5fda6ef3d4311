"""Parsing of the compact element notation used in the catalog.

A product is written with '*' between factors; a factor is a generator
``X13``, a quantum minor ``[12|23]``, the quantum determinant ``Dq`` or
``1``.  Laurent forms allow integer exponents such as ``X13^-1``.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .qmatrix import AlgebraElement, MinorSpec, quantum_determinant, quantum_minor

_FACTOR = re.compile(r"^(X(\d)(\d)|\[(\d+)\|(\d+)\]|Dq|1)(?:\^(-?\d+))?$")


class NotationError(ValueError):
    pass


def parse_factor(token: str) -> Tuple[str, int]:
    """Split 'X13^-1' into ('X13', -1); names are canonical."""
    mt = _FACTOR.match(token.strip())
    if not mt:
        raise NotationError(f"cannot parse factor {token!r}")
    exp = int(mt.group(6)) if mt.group(6) else 1
    return mt.group(1), exp


def factor_spec(name: str):
    """MinorSpec for a minor or generator, 'Dq' or '1' otherwise."""
    mt = _FACTOR.match(name)
    if not mt:
        raise NotationError(f"cannot parse factor {name!r}")
    if mt.group(2):
        return MinorSpec((int(mt.group(2)),), (int(mt.group(3)),))
    if mt.group(4):
        return MinorSpec(tuple(int(c) for c in mt.group(4)), tuple(int(c) for c in mt.group(5)))
    return mt.group(1)


def factor_element(name: str, n: int = 3) -> AlgebraElement:
    spec = factor_spec(name)
    if spec == "Dq":
        return quantum_determinant(n)
    if spec == "1":
        return AlgebraElement.one(n)
    return quantum_minor(spec, n)


def parse_monomial(text: str) -> List[Tuple[str, int]]:
    text = text.strip()
    if not text:
        raise NotationError("empty product")
    return [parse_factor(tok) for tok in text.split("*")]


def product(text: str, n: int = 3) -> AlgebraElement:
    """The ordered product named by ``text``; exponents must be nonnegative."""
    out = AlgebraElement.one(n)
    for name, e in parse_monomial(text):
        if e < 0:
            raise NotationError(f"negative exponent in polynomial product {text!r}")
        out = out * factor_element(name, n) ** e
    return out


def spec_name(spec: MinorSpec) -> str:
    return str(spec)
