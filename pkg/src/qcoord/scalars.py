"""Exact Laurent-polynomial scalars in q, alpha, beta, gamma and
fraction-free linear algebra over them.

A scalar is a finite map from exponent vectors in Z^4 to nonzero rationals.
Coefficients are kept as ``int`` whenever they are integral, which is the
common case for structure constants of the quantum matrix algebras.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

VARIABLES = ("q", "alpha", "beta", "gamma")
NVARS = 4
EXP_LIMIT = 2**31 - 1

Exponent = Tuple[int, int, int, int]
Coeff = "int | Fraction"

_ZERO_EXP: Exponent = (0, 0, 0, 0)


class DivisibilityError(ArithmeticError):
    """Raised when an exact division does not stay inside the Laurent ring."""


class ZeroDivisor(ZeroDivisionError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _check_exp(e: Exponent) -> Exponent:
    for x in e:
        if x > EXP_LIMIT or x < -EXP_LIMIT:
            raise OverflowError(f"exponent {x} exceeds the supported width")
    return e


class LaurentScalar:
    """Element of Q[q^{+-1}, alpha^{+-1}, beta^{+-1}, gamma^{+-1}]."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exponent, object]] = None, _trusted: bool = False):
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != NVARS:
                    raise ValueError(f"exponent vector {e} must have length {NVARS}")
                c = _norm(Fraction(c)) if not isinstance(c, int) else c
                if c:
                    clean[_check_exp(e)] = c
            self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "LaurentScalar":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls({_ZERO_EXP: c}, _trusted=True) if c else cls()

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "LaurentScalar":
        return cls({tuple(exp): coeff})

    @classmethod
    def qpow(cls, k: int, coeff=1) -> "LaurentScalar":
        return cls({(k, 0, 0, 0): coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentScalar":
        if isinstance(x, LaurentScalar):
            return x
        return cls.const(x)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        """True for units of the Laurent ring: c * q^a alpha^b beta^c gamma^d."""
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(_ZERO_EXP) == 1

    def is_qpower(self) -> Optional[int]:
        """Return k if self == q^k exactly (coefficient +1), else None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if c != 1 or e[1] or e[2] or e[3]:
            return None
        return e[0]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            other = LaurentScalar.const(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = _norm(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentScalar(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            other = LaurentScalar.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other) -> "LaurentScalar":
        if not isinstance(other, LaurentScalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return LaurentScalar()
                return LaurentScalar({e: _norm(c * other) for e, c in self.terms.items()}, _trusted=True)
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentScalar()
        if len(a) == 1 and len(b) == 1:
            (ea, ca), = a.items()
            (eb, cb), = b.items()
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
            return LaurentScalar({_check_exp(e): _norm(ca * cb)}, _trusted=True)
        out: Dict[Exponent, object] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        clean = {}
        for e, c in out.items():
            c = _norm(c)
            if c:
                clean[_check_exp(e)] = c
        return LaurentScalar(clean, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "LaurentScalar":
        """Inverse of a unit (a single-term scalar)."""
        if not self.terms:
            raise ZeroDivisor("inverse of zero")
        if len(self.terms) != 1:
            raise DivisibilityError(f"{self} is not a unit of the Laurent ring")
        (e, c), = self.terms.items()
        return LaurentScalar({tuple(-x for x in e): _norm(Fraction(1) / c)}, _trusted=True)

    def exact_div(self, other) -> "LaurentScalar":
        return exact_div(self, LaurentScalar.coerce(other))

    def __truediv__(self, other) -> "LaurentScalar":
        return exact_div(self, LaurentScalar.coerce(other))

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentScalar):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentScalar.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- misc -------------------------------------------------------------
    def min_exponents(self) -> Exponent:
        it = iter(self.terms)
        lo = list(next(it))
        for e in it:
            for i in range(NVARS):
                if e[i] < lo[i]:
                    lo[i] = e[i]
        return tuple(lo)

    def shift(self, exp: Sequence[int]) -> "LaurentScalar":
        """Multiply by the Laurent monomial with exponent ``exp``."""
        d = tuple(exp)
        return LaurentScalar(
            {_check_exp(tuple(e[i] + d[i] for i in range(NVARS))): c for e, c in self.terms.items()},
            _trusted=True,
        )

    def unit_content(self) -> "LaurentScalar":
        """The unit u (rational times Laurent monomial) with self/u primitive.

        The result makes the quotient have integer coefficients with gcd 1,
        minimal exponent 0 in every variable and a positive leading coefficient.
        """
        if not self.terms:
            return ONE
        lo = self.min_exponents()
        nums = 0
        den = 1
        for c in self.terms.values():
            if type(c) is Fraction:
                nums = gcd(nums, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
            else:
                nums = gcd(nums, c)
        content = Fraction(nums, den)
        lead = self.terms[max(self.terms)]
        if lead < 0:
            content = -content
        return LaurentScalar({lo: _norm(content)}, _trusted=True)

    def evaluate(self, q=None, alpha=None, beta=None, gamma=None):
        """Substitute rational values; unset variables stay symbolic.

        Returns a Fraction when every variable present is substituted,
        otherwise a LaurentScalar.
        """
        vals = (q, alpha, beta, gamma)
        out: Dict[Exponent, object] = {}
        for e, c in self.terms.items():
            c = Fraction(c)
            new_e = list(e)
            for i, v in enumerate(vals):
                if v is not None and e[i]:
                    v = Fraction(v)
                    if v == 0:
                        raise ZeroDivisor(f"cannot substitute 0 for {VARIABLES[i]}")
                    c *= v ** e[i]
                    new_e[i] = 0
            k = tuple(new_e)
            out[k] = out.get(k, 0) + c
        res = LaurentScalar({e: c for e, c in out.items() if c})
        if all(v is not None for v in vals) or all(
            (e == _ZERO_EXP) for e in res.terms
        ):
            return Fraction(res.terms.get(_ZERO_EXP, 0))
        return res

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (VARIABLES[i] if e[i] == 1 else f"{VARIABLES[i]}^{e[i]}")
                for i in range(NVARS)
                if e[i]
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"LaurentScalar({self.render()})"

    __str__ = render

    def to_json(self) -> Dict[str, str]:
        return {",".join(map(str, e)): str(c) for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "LaurentScalar":
        return cls({tuple(int(x) for x in k.split(",")): Fraction(v) for k, v in data.items()})


ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)
Q = LaurentScalar.qpow(1)
QINV = LaurentScalar.qpow(-1)
QHAT = Q - QINV
ALPHA = LaurentScalar.monomial((0, 1, 0, 0))
BETA = LaurentScalar.monomial((0, 0, 1, 0))
GAMMA = LaurentScalar.monomial((0, 0, 0, 1))
PARAMETERS = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}


def minus_q_pow(k: int) -> LaurentScalar:
    """(-q)^k."""
    return LaurentScalar.qpow(k, -1 if k % 2 else 1)


def exact_div(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    """Quotient a/b inside the Laurent ring, or DivisibilityError."""
    if not b.terms:
        raise ZeroDivisor("division by the zero scalar")
    if not a.terms:
        return ZERO
    if len(b.terms) == 1:
        return a * b.inverse()
    # Strip monomial factors; the remaining divisor is coprime to every
    # variable, so Laurent divisibility reduces to polynomial divisibility.
    la, lb = a.min_exponents(), b.min_exponents()
    a0 = a.shift(tuple(-x for x in la)).terms
    b0 = b.shift(tuple(-x for x in lb)).terms
    lt_b = max(b0)
    lc_b = b0[lt_b]
    rem = dict(a0)
    quot: Dict[Exponent, object] = {}
    while rem:
        lt = max(rem)
        d = (lt[0] - lt_b[0], lt[1] - lt_b[1], lt[2] - lt_b[2], lt[3] - lt_b[3])
        if min(d) < 0:
            raise DivisibilityError(f"{b.render()} does not divide {a.render()}")
        c = _norm(Fraction(rem[lt]) / lc_b)
        quot[d] = c
        for e, cb in b0.items():
            k = (e[0] + d[0], e[1] + d[1], e[2] + d[2], e[3] + d[3])
            v = _norm(rem.get(k, 0) - c * cb)
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    shift = tuple(la[i] - lb[i] for i in range(NVARS))
    return LaurentScalar(quot, _trusted=True).shift(shift)


def scalar_arith(a, b, op: str) -> LaurentScalar:
    a, b = LaurentScalar.coerce(a), LaurentScalar.coerce(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "exact_div":
        return exact_div(a, b)
    raise ValueError(f"unknown scalar operation {op!r}")


def try_exact_div(a: LaurentScalar, b: LaurentScalar) -> Optional[LaurentScalar]:
    try:
        return exact_div(a, b)
    except DivisibilityError:
        return None


# ---------------------------------------------------------------------------
# Sparse fraction-free echelon bases
# ---------------------------------------------------------------------------

Row = Dict[Hashable, LaurentScalar]


def _strip_units(row: Row) -> Tuple[Row, LaurentScalar]:
    """Divide a row by the unit content shared by all entries.

    Returns the new row and the unit that was divided out.
    """
    if not row:
        return row, ONE
    lo = None
    num = 0
    den = 1
    for s in row.values():
        m = s.min_exponents()
        lo = list(m) if lo is None else [min(lo[i], m[i]) for i in range(NVARS)]
        for c in s.terms.values():
            if type(c) is Fraction:
                num = gcd(num, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
            else:
                num = gcd(num, c)
    unit = LaurentScalar({tuple(lo): _norm(Fraction(num, den))}, _trusted=True)
    if unit.is_one():
        return row, ONE
    inv = unit.inverse()
    return {k: s * inv for k, s in row.items()}, unit


class EchelonBasis:
    """Row-echelon basis of a space of sparse rows over the Laurent ring.

    ``order`` maps a column label to a sort key; the pivot of a row is its
    column with the largest key.  Eliminations are fraction-free: a row is
    cross-multiplied by a pivot entry and only ever divided by units, or by
    a scalar that has been checked to divide every entry exactly.
    """

    def __init__(self, order: Callable[[Hashable], object]):
        self.order = order
        self.rows: Dict[Hashable, Row] = {}
        self._pivots: List[Hashable] = []  # sorted by descending key
        self._sorted = True

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[Hashable]:
        if not self._sorted:
            self._pivots.sort(key=self.order, reverse=True)
            self._sorted = True
        return self._pivots

    def _lead(self, row: Row) -> Hashable:
        return max(row, key=self.order)

    def reduce(self, row: Row) -> Tuple[Row, LaurentScalar]:
        """Return (r, c) with r = c*row - (element of the span), r free of pivots.

        ``c`` is a nonzero scalar; r is canonical up to a nonzero scalar
        factor, which makes proportionality tests between remainders exact.
        """
        v = dict(row)
        factor = ONE
        if not v or not self.rows:
            return v, factor
        for p in self.pivots():
            a = v.get(p)
            if a is None:
                continue
            b = self.rows[p]
            d = b[p]
            if d.is_one():
                for k, s in b.items():
                    nv = v.get(k, ZERO) - a * s
                    if nv.terms:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            else:
                # v <- d*v - a*b
                for k in list(v):
                    v[k] = d * v[k]
                for k, s in b.items():
                    nv = v.get(k, ZERO) - a * s
                    if nv.terms:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                factor = factor * d
                v, u = _strip_units(v)
                if not u.is_one():
                    factor = factor * u.inverse()
            if not v:
                break
        return v, factor

    def insert(self, row: Row) -> bool:
        """Add a row to the span; returns True if the rank grew."""
        r, _ = self.reduce(row)
        if not r:
            return False
        self._insert_reduced(r)
        return True

    def _insert_reduced(self, r: Row) -> None:
        r, _ = _strip_units(r)
        p = self._lead(r)
        d = r[p]
        if not d.is_one():
            scaled = {}
            for k, s in r.items():
                t = try_exact_div(s, d)
                if t is None:
                    scaled = None
                    break
                scaled[k] = t
            if scaled is not None:
                r = scaled
        self.rows[p] = r
        self._pivots.append(p)
        self._sorted = False

    def contains(self, row: Row) -> bool:
        r, _ = self.reduce(row)
        return not r

    def basis(self) -> List[Row]:
        return [self.rows[p] for p in self.pivots()]


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------


class ScalarMatrix:
    """Rectangular matrix of LaurentScalars with opaque column labels."""

    def __init__(self, rows: Iterable[Sequence], columns: Optional[Sequence[Hashable]] = None):
        rows = [[LaurentScalar.coerce(x) for x in r] for r in rows]
        if columns is None:
            ncols = len(rows[0]) if rows else 0
            columns = list(range(ncols))
        columns = list(columns)
        for r in rows:
            if len(r) != len(columns):
                raise ValueError("ScalarMatrix rows must all have one entry per column")
        self.rows = rows
        self.columns = columns

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    def __repr__(self) -> str:
        return f"ScalarMatrix({[[s.render() for s in r] for r in self.rows]})"


def row_reduce(m: ScalarMatrix) -> Tuple[ScalarMatrix, int, List[Hashable]]:
    """Fraction-free echelon form of the row space of ``m``.

    Columns are eliminated left to right. Returns (basis, rank, pivot columns).
    """
    index = {c: i for i, c in enumerate(m.columns)}
    ech = EchelonBasis(order=lambda c: -index[c])
    for r in m.rows:
        ech.insert({m.columns[j]: s for j, s in enumerate(r) if s.terms})
    pivots = ech.pivots()
    rows = []
    for p in pivots:
        sparse = ech.rows[p]
        rows.append([sparse.get(c, ZERO) for c in m.columns])
    return ScalarMatrix(rows, m.columns), ech.rank, list(pivots)
