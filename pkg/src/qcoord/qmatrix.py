"""PBW normal forms for the quantum matrix algebra O_q(M_n) and its
localization O_q(GL_n) at the quantum determinant.

Monomials are exponent tuples over the generators X_11, X_12, ..., X_nn in
row-major order; a monomial stands for the ordered product of its factors.
Multiplication is computed by moving generators into place with the
straightening rules for an out-of-order adjacent pair X_uv X_st:

    same row            X_uv X_st = q^-1 X_st X_uv
    same column         X_uv X_st = q^-1 X_st X_uv
    u > s, v < t        X_uv X_st = X_st X_uv
    u > s, v > t        X_uv X_st = X_st X_uv - (q - q^-1) X_sv X_ut
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import ONE, QHAT, QINV, ZERO, LaurentScalar, minus_q_pow

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, LaurentScalar]


class DimensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Index helpers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Generator:
    row: int
    col: int

    def index(self, n: int) -> int:
        if not (1 <= self.row <= n and 1 <= self.col <= n):
            raise DimensionError(f"X{self.row}{self.col} is not a generator for n={n}")
        return (self.row - 1) * n + (self.col - 1)

    def __str__(self) -> str:
        return f"X{self.row}{self.col}"


@dataclass(frozen=True)
class MinorSpec:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs nonempty index sets of equal size, got {rows}|{cols}")
        for s in (rows, cols):
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"index set {s} must be strictly increasing")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        if self.size == 1:
            return f"X{self.rows[0]}{self.cols[0]}"
        return "[" + "".join(map(str, self.rows)) + "|" + "".join(map(str, self.cols)) + "]"

    def sort_key(self):
        return (self.size, self.rows, self.cols)

    def to_json(self):
        return {"rows": list(self.rows), "cols": list(self.cols)}

    @classmethod
    def from_json(cls, data) -> "MinorSpec":
        return cls(tuple(data["rows"]), tuple(data["cols"]))


def complement(indices: Iterable[int], n: int) -> Tuple[int, ...]:
    s = set(indices)
    return tuple(i for i in range(1, n + 1) if i not in s)


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b])


# ---------------------------------------------------------------------------
# The multiplication engine
# ---------------------------------------------------------------------------


class PbwEngine:
    """Cached straightening for a fixed n."""

    _CACHE_LIMIT = 400_000

    def __init__(self, n: int):
        if n < 1:
            raise DimensionError("n must be positive")
        self.n = n
        self.nvars = n * n
        self.pos = [((k // n) + 1, (k % n) + 1) for k in range(self.nvars)]
        # rule[top][g] for top > g: (c_swap, extra) with extra = (c, a, b) or None
        self.rule: Dict[Tuple[int, int], Tuple[LaurentScalar, Optional[Tuple[int, int]]]] = {}
        for hi in range(self.nvars):
            for lo in range(hi):
                self.rule[(hi, lo)] = self._pair_rule(hi, lo)
        self._right: Dict[Tuple[Monomial, int], Terms] = {}
        self._left: Dict[Tuple[int, Monomial], Terms] = {}
        self._mono: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self.one: Monomial = (0,) * self.nvars

    def _pair_rule(self, hi: int, lo: int):
        (u, v), (s, t) = self.pos[hi], self.pos[lo]
        n = self.n
        if u == s or v == t:
            return QINV, None
        if v < t:
            return ONE, None
        # u > s and v > t
        a = (s - 1) * n + (v - 1)
        b = (u - 1) * n + (t - 1)
        return ONE, (a, b)

    def weight_of(self, m: Monomial) -> Tuple[int, ...]:
        n = self.n
        rows = [0] * n
        cols = [0] * n
        for k, e in enumerate(m):
            if e:
                rows[k // n] += e
                cols[k % n] += e
        return tuple(rows) + tuple(cols)

    @staticmethod
    def _bump(m: Monomial, k: int, d: int = 1) -> Monomial:
        lst = list(m)
        lst[k] += d
        return tuple(lst)

    def right_gen(self, m: Monomial, g: int) -> Terms:
        """Normal form of m * X_g."""
        key = (m, g)
        hit = self._right.get(key)
        if hit is not None:
            return hit
        top = -1
        for k in range(self.nvars - 1, -1, -1):
            if m[k]:
                top = k
                break
        if top <= g:
            out = {self._bump(m, g): ONE}
        else:
            c1, extra = self.rule[(top, g)]
            rest = self._bump(m, top, -1)
            out: Terms = {}
            for m1, s1 in self.right_gen(rest, g).items():
                _acc(out, self._bump(m1, top), s1 * c1)
            if extra is not None:
                a, b = extra
                for m1, s1 in self.right_gen(rest, a).items():
                    for m2, s2 in self.right_gen(m1, b).items():
                        _acc(out, m2, -(s1 * s2 * QHAT))
        if len(self._right) > self._CACHE_LIMIT:
            self._right.clear()
        self._right[key] = out
        return out

    def left_gen(self, g: int, m: Monomial) -> Terms:
        """Normal form of X_g * m."""
        key = (g, m)
        hit = self._left.get(key)
        if hit is not None:
            return hit
        low = self.nvars
        for k in range(self.nvars):
            if m[k]:
                low = k
                break
        if g <= low:
            out = {self._bump(m, g): ONE}
        else:
            c1, extra = self.rule[(g, low)]
            rest = self._bump(m, low, -1)
            out = {}
            for m1, s1 in self.left_gen(g, rest).items():
                _acc(out, self._bump(m1, low), s1 * c1)
            if extra is not None:
                a, b = extra
                for m1, s1 in self.left_gen(b, rest).items():
                    for m2, s2 in self.left_gen(a, m1).items():
                        _acc(out, m2, -(s1 * s2 * QHAT))
        if len(self._left) > self._CACHE_LIMIT:
            self._left.clear()
        self._left[key] = out
        return out

    def mono_mul(self, m1: Monomial, m2: Monomial) -> Terms:
        key = (m1, m2)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        cur: Terms = {m1: ONE}
        for k, e in enumerate(m2):
            for _ in range(e):
                nxt: Terms = {}
                for m, s in cur.items():
                    for mm, ss in self.right_gen(m, k).items():
                        _acc(nxt, mm, s * ss)
                cur = nxt
        if len(self._mono) > self._CACHE_LIMIT:
            self._mono.clear()
        self._mono[key] = cur
        return cur

    def monomials_of_degree(self, d: int) -> List[Monomial]:
        out = []
        for combo in itertools.combinations_with_replacement(range(self.nvars), d):
            m = [0] * self.nvars
            for k in combo:
                m[k] += 1
            out.append(tuple(m))
        return out


def _acc(out: Terms, m: Monomial, s: LaurentScalar) -> None:
    if not s.terms:
        return
    v = out.get(m)
    if v is None:
        out[m] = s
    else:
        v = v + s
        if v.terms:
            out[m] = v
        else:
            del out[m]


_ENGINES: Dict[int, PbwEngine] = {}


def engine(n: int) -> PbwEngine:
    e = _ENGINES.get(n)
    if e is None:
        e = _ENGINES[n] = PbwEngine(n)
    return e


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


def mono_order_key(m: Monomial):
    """Total degree first, then lexicographic in the row-major variable order."""
    return (sum(m), m)


class AlgebraElement:
    """An element of O_q(M_n) in PBW coordinates."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Optional[Terms] = None):
        self.n = n
        self.terms: Terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {engine(n).one: ONE})

    @classmethod
    def scalar(cls, n: int, c) -> "AlgebraElement":
        c = LaurentScalar.coerce(c)
        return cls(n, {engine(n).one: c} if c.terms else {})

    @classmethod
    def gen(cls, n: int, i: int, j: int) -> "AlgebraElement":
        k = Generator(i, j).index(n)
        m = [0] * (n * n)
        m[k] = 1
        return cls(n, {tuple(m): ONE})

    @classmethod
    def monomial(cls, n: int, m: Sequence[int], coeff=1) -> "AlgebraElement":
        m = tuple(m)
        if len(m) != n * n or any(e < 0 for e in m):
            raise DimensionError(f"bad exponent vector {m} for n={n}")
        c = LaurentScalar.coerce(coeff)
        return cls(n, {m: c} if c.terms else {})

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise DimensionError(f"cannot combine elements of O_q(M_{self.n}) and O_q(M_{other.n})")

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return AlgebraElement.scalar(self.n, other)

    def __add__(self, other) -> "AlgebraElement":
        other = self._lift(other)
        out = dict(self.terms)
        for m, s in other.terms.items():
            _acc(out, m, s)
        return AlgebraElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {m: -s for m, s in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return self._lift(other) - self

    def scale(self, c) -> "AlgebraElement":
        c = LaurentScalar.coerce(c)
        if not c.terms:
            return AlgebraElement(self.n, {})
        return AlgebraElement(self.n, {m: s * c for m, s in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        eng = engine(self.n)
        out: Terms = {}
        for m1, s1 in self.terms.items():
            for m2, s2 in other.terms.items():
                s12 = s1 * s2
                for m, s in eng.mono_mul(m1, m2).items():
                    _acc(out, m, s * s12)
        return AlgebraElement(self.n, out)

    def __rmul__(self, other) -> "AlgebraElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined in O_q(M_n)")
        out = AlgebraElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def left_mul_gen(self, g: int) -> "AlgebraElement":
        eng = engine(self.n)
        out: Terms = {}
        for m, s in self.terms.items():
            for mm, ss in eng.left_gen(g, m).items():
                _acc(out, mm, s * ss)
        return AlgebraElement(self.n, out)

    def right_mul_gen(self, g: int) -> "AlgebraElement":
        eng = engine(self.n)
        out: Terms = {}
        for m, s in self.terms.items():
            for mm, ss in eng.right_gen(m, g).items():
                _acc(out, mm, s * ss)
        return AlgebraElement(self.n, out)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, LaurentScalar)):
            return self.terms == AlgebraElement.scalar(self.n, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def degrees(self) -> List[int]:
        return sorted({sum(m) for m in self.terms})

    def max_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def coefficient(self, m: Sequence[int]) -> LaurentScalar:
        return self.terms.get(tuple(m), ZERO)

    def map_scalars(self, f) -> "AlgebraElement":
        out = {}
        for m, s in self.terms.items():
            t = f(s)
            if t.terms:
                out[m] = t
        return AlgebraElement(self.n, out)

    def components(self, key) -> Dict[object, "AlgebraElement"]:
        """Split into pieces grouped by ``key(monomial)``."""
        parts: Dict[object, Terms] = {}
        for m, s in self.terms.items():
            parts.setdefault(key(m), {})[m] = s
        return {k: AlgebraElement(self.n, t) for k, t in parts.items()}

    # -- rendering --------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_order_key(kv[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        n = self.n
        pieces = []
        for m, s in self.sorted_terms():
            factors = []
            for k, e in enumerate(m):
                if e:
                    name = f"X{k // n + 1}{k % n + 1}"
                    factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            coeff = s.render()
            if not mono:
                pieces.append(f"({coeff})" if len(s.terms) > 1 else coeff)
            elif s.is_one():
                pieces.append(mono)
            elif len(s.terms) == 1 and s == -ONE:
                pieces.append("-" + mono)
            else:
                pieces.append(f"({coeff})*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self.render()})"

    __str__ = render

    def to_json(self):
        return [
            {"monomial": list(m), "coefficient": s.to_json()}
            for m, s in sorted(self.terms.items(), key=lambda kv: mono_order_key(kv[0]))
        ]

    @classmethod
    def from_json(cls, n: int, data) -> "AlgebraElement":
        out: Terms = {}
        for t in data:
            _acc(out, tuple(t["monomial"]), LaurentScalar.from_json(t["coefficient"]))
        return cls(n, out)


def X(i: int, j: int, n: int = 3) -> AlgebraElement:
    return AlgebraElement.gen(n, i, j)


def generators(n: int = 3) -> List[AlgebraElement]:
    return [X(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)]


def algebra_ops(a: AlgebraElement, b, op: str):
    if isinstance(b, AlgebraElement):
        a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "equal":
        return a == b
    raise ValueError(f"unknown algebra operation {op!r}")


# ---------------------------------------------------------------------------
# Independent rewriting on words (used as an oracle for the cached engine)
# ---------------------------------------------------------------------------


def normal_form(word: Sequence, n: int = 3, strategy: str = "leftmost") -> AlgebraElement:
    """Expand a product of generators by rewriting words directly.

    ``word`` holds Generator objects or (row, col) pairs.  The rewriting picks
    the leftmost or rightmost out-of-order adjacent pair; the result does not
    depend on that choice.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    eng = engine(n)
    idx = []
    for g in word:
        if not isinstance(g, Generator):
            g = Generator(*g)
        idx.append(g.index(n))
    pending: Dict[Tuple[int, ...], LaurentScalar] = {tuple(idx): ONE}
    done: Terms = {}
    while pending:
        w, s = pending.popitem()
        descents = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not descents:
            m = [0] * eng.nvars
            for k in w:
                m[k] += 1
            _acc(done, tuple(m), s)
            continue
        p = descents[0] if strategy == "leftmost" else descents[-1]
        hi, lo = w[p], w[p + 1]
        c1, extra = eng.rule[(hi, lo)]
        _acc(pending, w[:p] + (lo, hi) + w[p + 2 :], s * c1)
        if extra is not None:
            a, b = extra
            _acc(pending, w[:p] + (a, b) + w[p + 2 :], -(s * QHAT))
    return AlgebraElement(n, done)


# ---------------------------------------------------------------------------
# Gradings
# ---------------------------------------------------------------------------


class NotHomogeneous:
    """Marker returned by weight() for elements mixing several weights."""

    def __repr__(self) -> str:
        return "NotHomogeneous"


class ZeroWeight:
    """Marker returned by weight(0): the zero element has every weight."""

    def __repr__(self) -> str:
        return "ZeroWeight"


NOT_HOMOGENEOUS = NotHomogeneous()
ZERO_WEIGHT = ZeroWeight()


@dataclass(frozen=True)
class HWeight:
    row_degrees: Tuple[int, ...]
    col_degrees: Tuple[int, ...]

    def __add__(self, other: "HWeight") -> "HWeight":
        return HWeight(
            tuple(a + b for a, b in zip(self.row_degrees, other.row_degrees)),
            tuple(a + b for a, b in zip(self.col_degrees, other.col_degrees)),
        )

    def __neg__(self) -> "HWeight":
        return HWeight(tuple(-a for a in self.row_degrees), tuple(-a for a in self.col_degrees))

    def __sub__(self, other: "HWeight") -> "HWeight":
        return self + (-other)

    def flat(self) -> Tuple[int, ...]:
        return self.row_degrees + self.col_degrees

    @classmethod
    def from_flat(cls, v: Sequence[int]) -> "HWeight":
        h = len(v) // 2
        return cls(tuple(v[:h]), tuple(v[h:]))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.row_degrees))}|{','.join(map(str, self.col_degrees))})"


def weight(a):
    """Common torus weight of a (an AlgebraElement or GlElement)."""
    dq_shift = 0
    if isinstance(a, GlElement):
        dq_shift = a.dq_power
        a = a.numerator
    if not a.terms:
        return ZERO_WEIGHT
    eng = engine(a.n)
    ws = {eng.weight_of(m) for m in a.terms}
    if len(ws) != 1:
        return NOT_HOMOGENEOUS
    w = ws.pop()
    return HWeight.from_flat(tuple(x - dq_shift for x in w))


# ---------------------------------------------------------------------------
# Quantum minors
# ---------------------------------------------------------------------------


def quantum_minor(spec: MinorSpec, n: int = 3) -> AlgebraElement:
    rows, cols = spec.rows, spec.cols
    if max(rows + cols) > n:
        raise DimensionError(f"{spec} does not fit in an {n}x{n} matrix")
    eng = engine(n)
    t = len(rows)
    terms: Terms = {}
    for perm in itertools.permutations(range(t)):
        m = [0] * eng.nvars
        for r, p in zip(rows, perm):
            m[(r - 1) * n + cols[p] - 1] += 1
        # factors X_{r_1, c_pi(1)} ... taken in increasing row order are PBW-ordered
        _acc(terms, tuple(m), minus_q_pow(inversions(perm)))
    return AlgebraElement(n, terms)


def minor(rows: Sequence[int], cols: Sequence[int], n: int = 3) -> AlgebraElement:
    return quantum_minor(MinorSpec(tuple(rows), tuple(cols)), n)


def quantum_determinant(n: int) -> AlgebraElement:
    if n < 1:
        raise DimensionError("n must be positive")
    full = tuple(range(1, n + 1))
    return quantum_minor(MinorSpec(full, full), n)


def cominor(i: int, j: int, n: int) -> AlgebraElement:
    """[~i|~j]: the minor on the complementary row and column sets."""
    if n == 1:
        return AlgebraElement.one(1)
    return minor(complement([i], n), complement([j], n), n)


def laplace_check(n: int, i: int, l: int, side: str) -> bool:
    if not (1 <= i <= n and 1 <= l <= n):
        raise DimensionError(f"indices ({i},{l}) out of range for n={n}")
    total = AlgebraElement.zero(n)
    for j in range(1, n + 1):
        if side == "row":
            total = total + (X(i, j, n) * cominor(l, j, n)).scale(minus_q_pow(j - l))
        elif side == "col":
            total = total + (cominor(j, i, n) * X(j, l, n)).scale(minus_q_pow(i - j))
        else:
            raise ValueError(f"side must be 'row' or 'col', not {side!r}")
    expected = quantum_determinant(n) if i == l else AlgebraElement.zero(n)
    return total == expected


# ---------------------------------------------------------------------------
# The localization at D_q
# ---------------------------------------------------------------------------


class GlElement:
    """numerator * D_q^(-dq_power) in O_q(GL_n)."""

    __slots__ = ("numerator", "dq_power")

    def __init__(self, numerator: AlgebraElement, dq_power: int = 0):
        if dq_power < 0:
            numerator = numerator * quantum_determinant(numerator.n) ** (-dq_power)
            dq_power = 0
        self.numerator = numerator
        self.dq_power = dq_power

    @property
    def n(self) -> int:
        return self.numerator.n

    @classmethod
    def dq_inverse(cls, n: int) -> "GlElement":
        return cls(AlgebraElement.one(n), 1)

    def lift(self, power: int) -> AlgebraElement:
        """numerator * D_q^(power - dq_power), for power >= dq_power."""
        if power < self.dq_power:
            raise ValueError("cannot clear fewer D_q powers than the element carries")
        return self.numerator * quantum_determinant(self.n) ** (power - self.dq_power)

    def __mul__(self, other) -> "GlElement":
        if isinstance(other, GlElement):
            # D_q is central, so the inverse powers collect on the right.
            return GlElement(self.numerator * other.numerator, self.dq_power + other.dq_power)
        if isinstance(other, AlgebraElement):
            return GlElement(self.numerator * other, self.dq_power)
        return GlElement(self.numerator.scale(other), self.dq_power)

    def __rmul__(self, other) -> "GlElement":
        if isinstance(other, AlgebraElement):
            return GlElement(other * self.numerator, self.dq_power)
        return GlElement(self.numerator.scale(other), self.dq_power)

    def __add__(self, other) -> "GlElement":
        if isinstance(other, AlgebraElement):
            other = GlElement(other, 0)
        p = max(self.dq_power, other.dq_power)
        return GlElement(self.lift(p) + other.lift(p), p)

    def __neg__(self) -> "GlElement":
        return GlElement(-self.numerator, self.dq_power)

    def __sub__(self, other) -> "GlElement":
        if isinstance(other, AlgebraElement):
            other = GlElement(other, 0)
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            other = GlElement(other, 0)
        if not isinstance(other, GlElement):
            return NotImplemented
        return gl_equal(self, other)

    __hash__ = None  # equality is not structural

    def render(self) -> str:
        if self.dq_power == 0:
            return self.numerator.render()
        inv = "Dq^-1" if self.dq_power == 1 else f"Dq^-{self.dq_power}"
        return f"({self.numerator.render()})*{inv}"

    def __repr__(self) -> str:
        return f"GlElement({self.render()})"


def gl_equal(a: GlElement, b: GlElement) -> bool:
    if a.n != b.n:
        raise DimensionError("GlElements of different sizes")
    # D_q is central and regular, so only the difference of the powers matters.
    k = a.dq_power - b.dq_power
    dq = quantum_determinant(a.n)
    if k >= 0:
        return a.numerator == b.numerator * dq**k
    return a.numerator * dq ** (-k) == b.numerator
