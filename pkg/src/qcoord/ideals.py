"""Torus-invariant prime ideals of O_q(M_3) and exact ideal membership.

Membership in an ideal generated by torus-homogeneous elements is decided
weight by weight: the weight-W part of the two-sided ideal is spanned by the
generators of weight W together with X_x * I_{W - wt(x)} and
I_{W - wt(x)} * X_x, which is complete because every m1*g*m2 with a nonempty
outer factor starts or ends with some generator X_x.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import lattice
from .qmatrix import (
    AlgebraElement,
    MinorSpec,
    complement,
    engine,
    mono_order_key,
    quantum_minor,
)
from .scalars import EchelonBasis, LaurentScalar, try_exact_div

Weight = Tuple[int, ...]
Row = Dict[Tuple[int, ...], LaurentScalar]

DEFAULT_MAX_DEGREE = 5


class HomogeneityError(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def parse(cls, text: Union[str, "Permutation"]) -> "Permutation":
        if isinstance(text, Permutation):
            return text
        return cls(tuple(int(c) for c in str(text).strip()))

    @classmethod
    def longest(cls, n: int = 3) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def image_set(self, indices: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(self(i) for i in indices))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def length(self) -> int:
        imgs = self.images
        return sum(1 for a, b in itertools.combinations(range(self.n), 2) if imgs[a] > imgs[b])

    def conj_w0(self) -> "Permutation":
        w0 = Permutation.longest(self.n)
        return w0 * self * w0

    def __str__(self) -> str:
        return "".join(map(str, self.images))


# Row/column order used throughout the tables.
S3_ORDER: Tuple[Permutation, ...] = tuple(
    Permutation.parse(s) for s in ("321", "231", "312", "132", "213", "123")
)

WPair = Tuple[Permutation, Permutation]


def all_w() -> List[WPair]:
    return [(a, b) for a in S3_ORDER for b in S3_ORDER]


def w_key(w: WPair) -> str:
    return f"{w[0]},{w[1]}"


def parse_w(text: str) -> WPair:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'w+,w-', got {text!r}")
    a, b = (Permutation.parse(p) for p in parts)
    if a.n != 3 or b.n != 3:
        raise ValueError(f"{text!r} is not a pair of permutations of 1,2,3")
    return a, b


def permutation_table() -> List[Tuple[str, str, str, str]]:
    """Rows (y, y^-1, w0 y^-1 w0, w0 y w0) for y in S_3."""
    out = []
    for y in S3_ORDER:
        out.append((str(y), str(y.inverse()), str(y.inverse().conj_w0()), str(y.conj_w0())))
    return out


# ---------------------------------------------------------------------------
# The H-prime generating sets
# ---------------------------------------------------------------------------


def index_le(I: Sequence[int], J: Sequence[int]) -> bool:
    """Componentwise order on ascending index sets of equal size."""
    return all(i <= j for i, j in zip(sorted(I), sorted(J)))


def _subsets(k: int, n: int = 3):
    return list(itertools.combinations(range(1, n + 1), k))


def plus_generators(y: Permutation) -> List[MinorSpec]:
    out = []
    for (i,) in _subsets(1):
        if not index_le((i,), (y(1),)):
            out.append(MinorSpec((i,), (1,)))
    for (i,) in _subsets(1):
        if not index_le((i,), (y(1),)) and not index_le((i,), (y(2),)):
            out.append(MinorSpec((i,), (2,)))
    for I in _subsets(2):
        if not index_le(I, y.image_set((1, 2))):
            out.append(MinorSpec(I, (1, 2)))
    return out


def minus_generators(y: Permutation) -> List[MinorSpec]:
    n = 3
    out = []
    for (i,) in _subsets(1):
        if not index_le((i,), (y(1),)):
            out.append(MinorSpec(complement([i], n), complement([1], n)))
    for I in _subsets(2):
        if not index_le(I, y.image_set((1, 2))):
            out.append(MinorSpec(complement(I, n), complement((1, 2), n)))
    for I in _subsets(2):
        if not index_le(I, y.image_set((1, 2))) and not index_le(I, y.image_set((1, 3))):
            out.append(MinorSpec(complement(I, n), complement((1, 3), n)))
    return out


def drop_redundant(specs: Sequence[MinorSpec]) -> List[MinorSpec]:
    """Remove larger minors already forced by the 1x1 minors in the list.

    A minor is dropped when every term of its expansion contains one of the
    listed generators X_ij, so it lies in the ideal those generators span.
    """
    singles = {(s.rows[0], s.cols[0]) for s in specs if s.size == 1}
    out = []
    for s in specs:
        if s.size > 1:
            forced = all(
                any((r, s.cols[p]) in singles for r, p in zip(s.rows, perm))
                for perm in itertools.permutations(range(s.size))
            )
            if forced:
                continue
        out.append(s)
    return out


def _unique(specs: Iterable[MinorSpec]) -> List[MinorSpec]:
    seen = []
    for s in specs:
        if s not in seen:
            seen.append(s)
    return seen


@dataclass(frozen=True)
class HPrimeSpec:
    """Q_w = Q^+_{w+} + Q^-_{w-}.

    ``formula_generators`` is the full output of the index-set formulas;
    ``generators`` omits 2x2 minors that are forced by listed 1x1 minors,
    which is the form in which the catalog stores the generating sets.  Both
    lists generate the same ideal.
    """

    w: WPair
    generators: Tuple[MinorSpec, ...]
    formula_generators: Tuple[MinorSpec, ...]
    plus: Tuple[MinorSpec, ...] = ()
    minus: Tuple[MinorSpec, ...] = ()

    @property
    def key(self) -> str:
        return w_key(self.w)

    def elements(self, n: int = 3) -> List[AlgebraElement]:
        return [quantum_minor(s, n) for s in self.generators]

    def height(self) -> int:
        return self.w[0].length() + self.w[1].length()

    def __str__(self) -> str:
        return f"Q_({self.key})"


def build_hprime(w: Union[WPair, str]) -> HPrimeSpec:
    if isinstance(w, str):
        w = parse_w(w)
    wp, wm = Permutation.parse(w[0]), Permutation.parse(w[1])
    plus = _unique(plus_generators(wp))
    minus = _unique(minus_generators(wm))
    raw = _unique(plus + minus)
    reduced = _unique(drop_redundant(plus) + drop_redundant(minus))
    return HPrimeSpec((wp, wm), tuple(reduced), tuple(raw), tuple(drop_redundant(plus)), tuple(drop_redundant(minus)))


def zero_ideal_spec() -> HPrimeSpec:
    return build_hprime("321,321")


# ---------------------------------------------------------------------------
# Graded membership
# ---------------------------------------------------------------------------


def _mul_left(g: int, row: Row, n: int) -> Row:
    eng = engine(n)
    out: Row = {}
    for m, s in row.items():
        for mm, ss in eng.left_gen(g, m).items():
            v = out.get(mm)
            t = s * ss
            v = t if v is None else v + t
            if v.terms:
                out[mm] = v
            else:
                out.pop(mm, None)
    return out


def _mul_right(row: Row, g: int, n: int) -> Row:
    eng = engine(n)
    out: Row = {}
    for m, s in row.items():
        for mm, ss in eng.right_gen(m, g).items():
            v = out.get(mm)
            t = s * ss
            v = t if v is None else v + t
            if v.terms:
                out[mm] = v
            else:
                out.pop(mm, None)
    return out


class _MonomialIndex:
    """All monomials up to a degree, grouped by weight."""

    _cache: Dict[Tuple[int, int], "_MonomialIndex"] = {}

    def __init__(self, n: int, max_degree: int):
        eng = engine(n)
        self.by_weight: Dict[Weight, List[Tuple[int, ...]]] = {}
        for d in range(max_degree + 1):
            for m in eng.monomials_of_degree(d):
                self.by_weight.setdefault(eng.weight_of(m), []).append(m)

    @classmethod
    def get(cls, n: int, max_degree: int) -> "_MonomialIndex":
        key = (n, max_degree)
        if key not in cls._cache:
            cls._cache[key] = _MonomialIndex(n, max_degree)
        return cls._cache[key]


class GradedIdeal:
    """Two-sided ideal generated by torus-homogeneous elements.

    Weight components are built on demand and cached; ``per_degree``
    aggregates them into the degree-graded view.
    """

    def __init__(self, gens: Sequence[AlgebraElement], max_degree: int = DEFAULT_MAX_DEGREE, n: int = 3):
        self.n = n
        self.max_degree = max_degree
        self.generators = [g for g in gens if g.terms]
        eng = engine(n)
        self._gens_by_weight: Dict[Weight, List[Row]] = {}
        for g in self.generators:
            if g.n != n:
                raise HomogeneityError(f"generator {g} lives in dimension {g.n}, not {n}")
            ws = {eng.weight_of(m) for m in g.terms}
            if len(ws) != 1:
                raise HomogeneityError(f"generator {g.render()} is not torus-homogeneous")
            self._gens_by_weight.setdefault(ws.pop(), []).append(dict(g.terms))
        self._gen_weights = list(self._gens_by_weight)
        self._components: Dict[Weight, EchelonBasis] = {}
        self._gen_weights_vec = [tuple(eng.weight_of(tuple(int(i == k) for i in range(n * n)))) for k in range(n * n)]

    def _reachable(self, W: Weight) -> bool:
        return any(all(a <= b for a, b in zip(gw, W)) for gw in self._gen_weights)

    def component(self, W: Weight) -> EchelonBasis:
        comp = self._components.get(W)
        if comp is not None:
            return comp
        n = self.n
        deg = sum(W[:n])
        if deg > self.max_degree:
            raise BoundExceeded(f"weight {W} has degree {deg} above the bound {self.max_degree}")
        ech = EchelonBasis(order=mono_order_key)
        if min(W) >= 0 and sum(W[:n]) == sum(W[n:]) and self._reachable(W):
            full = len(_MonomialIndex.get(n, self.max_degree).by_weight.get(W, ()))
            for row in self._gens_by_weight.get(W, ()):
                ech.insert(row)
            for x in range(n * n):
                if ech.rank >= full:
                    break
                wx = self._gen_weights_vec[x]
                lower = tuple(a - b for a, b in zip(W, wx))
                if min(lower) < 0:
                    continue
                low = self.component(lower)
                for row in low.basis():
                    if ech.rank >= full:
                        break
                    ech.insert(_mul_left(x, row, n))
                    if ech.rank >= full:
                        break
                    ech.insert(_mul_right(row, x, n))
        self._components[W] = ech
        return ech

    def split(self, a: AlgebraElement) -> Dict[Weight, Row]:
        eng = engine(self.n)
        parts: Dict[Weight, Row] = {}
        for m, s in a.terms.items():
            parts.setdefault(eng.weight_of(m), {})[m] = s
        return parts

    def reduce(self, a: AlgebraElement) -> Dict[Weight, Tuple[Row, LaurentScalar]]:
        """Per-weight remainders (r, c): r = c * component - (ideal element)."""
        if a.n != self.n:
            raise HomogeneityError("dimension mismatch")
        out = {}
        for W, row in self.split(a).items():
            if sum(W[: self.n]) > self.max_degree:
                raise BoundExceeded(f"degree {sum(W[:self.n])} exceeds the bound {self.max_degree}")
            out[W] = self.component(W).reduce(row)
        return out

    def contains(self, a: AlgebraElement) -> bool:
        return all(not r for r, _ in self.reduce(a).values())

    def remainder(self, a: AlgebraElement) -> AlgebraElement:
        """A canonical-up-to-scalars witness: the pivot-free remainder."""
        terms = {}
        for r, _ in self.reduce(a).values():
            terms.update(r)
        return AlgebraElement(self.n, terms)

    def dimension(self, degree: int) -> int:
        """Dimension of the degree-d component of the ideal."""
        if degree > self.max_degree:
            raise BoundExceeded(f"degree {degree} exceeds the bound {self.max_degree}")
        idx = _MonomialIndex.get(self.n, self.max_degree)
        return sum(self.component(W).rank for W in idx.by_weight if sum(W[: self.n]) == degree)

    @property
    def per_degree(self) -> Dict[int, int]:
        return {d: self.dimension(d) for d in range(self.max_degree + 1)}

    def basis(self, degree: int) -> List[AlgebraElement]:
        idx = _MonomialIndex.get(self.n, self.max_degree)
        out = []
        for W in sorted(idx.by_weight):
            if sum(W[: self.n]) == degree:
                out.extend(AlgebraElement(self.n, dict(r)) for r in self.component(W).basis())
        return out


# Alias matching the data-model name.
GradedIdealBasis = GradedIdeal


def graded_basis(gens: Sequence[AlgebraElement], max_degree: int = DEFAULT_MAX_DEGREE) -> GradedIdeal:
    n = gens[0].n if gens else 3
    return GradedIdeal(gens, max_degree, n)


def member(a: AlgebraElement, basis: GradedIdeal) -> bool:
    return basis.contains(a)


_IDEAL_CACHE: Dict[Tuple, GradedIdeal] = {}


def ideal_of(spec_or_gens, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedIdeal:
    """GradedIdeal for an HPrimeSpec, a GradedIdeal, or a list of generators (cached)."""
    if isinstance(spec_or_gens, GradedIdeal):
        return spec_or_gens
    if isinstance(spec_or_gens, HPrimeSpec):
        key = ("spec", spec_or_gens.key, spec_or_gens.generators, max_degree)
        gens = spec_or_gens.elements()
    else:
        gens = list(spec_or_gens)
        key = ("gens", tuple(gens), max_degree)
    hit = _IDEAL_CACHE.get(key)
    if hit is None:
        hit = _IDEAL_CACHE[key] = GradedIdeal(gens, max_degree, gens[0].n if gens else 3)
    return hit


def clear_ideal_cache() -> None:
    _IDEAL_CACHE.clear()


# ---------------------------------------------------------------------------
# Filtered membership for ideals with non-homogeneous generators
# ---------------------------------------------------------------------------

MEMBER = "member"
NOT_MEMBER_UP_TO_BOUND = "not_member_up_to_bound"


class FilteredIdeal:
    """Degree-bounded membership for ideals such as Q_w + <D_q - alpha>.

    Each generator must be homogeneous for the coarsened grading by
    Z^{2n}/L, where L is spanned by weight differences inside generators.
    The span of m1*g*m2 with deg(m1) + topdeg(g) + deg(m2) <= bound is
    assembled per coset class.  A positive answer is exact; a negative one
    is evidence at the stated bound only.
    """

    def __init__(self, gens: Sequence[AlgebraElement], bound: int, n: int = 3):
        self.n = n
        self.bound = bound
        self.generators = [g for g in gens if g.terms]
        eng = engine(n)
        diffs = []
        for g in self.generators:
            ws = sorted({eng.weight_of(m) for m in g.terms})
            diffs.extend(tuple(a - b for a, b in zip(w, ws[0])) for w in ws[1:])
        self.lattice = lattice.lattice_hnf(diffs)
        self._gens: Dict[Tuple, List[Tuple[int, Row]]] = {}
        for g in self.generators:
            cls_ = self.klass(next(iter(g.terms)))
            self._gens.setdefault(cls_, []).append((g.max_degree(), dict(g.terms)))
        self._min_top = min((g.max_degree() for g in self.generators), default=bound + 1)
        self._monos_by_class: Dict[Tuple[int, Tuple], int] = {}
        for d in range(bound + 1):
            for m in eng.monomials_of_degree(d):
                for dd in range(d, bound + 1):
                    k = (dd, self.klass(m))
                    self._monos_by_class[k] = self._monos_by_class.get(k, 0) + 1
        self._gen_shift = [self.klass(tuple(int(i == k) for i in range(n * n))) for k in range(n * n)]
        self._spans: Dict[Tuple[int, Tuple], EchelonBasis] = {}

    def klass(self, m) -> Tuple:
        return lattice.coset_rep(self.lattice, engine(self.n).weight_of(m))

    def _shift(self, C: Tuple, x: int) -> Tuple:
        wx = engine(self.n).weight_of(tuple(int(i == x) for i in range(self.n * self.n)))
        return lattice.coset_rep(self.lattice, tuple(a - b for a, b in zip(C, wx)))

    def span(self, d: int, C: Tuple) -> EchelonBasis:
        key = (d, C)
        hit = self._spans.get(key)
        if hit is not None:
            return hit
        ech = EchelonBasis(order=mono_order_key)
        if d >= self._min_top:
            full = self._monos_by_class.get(key, 0)
            for top, row in self._gens.get(C, ()):
                if top <= d:
                    ech.insert(row)
            for x in range(self.n * self.n):
                if ech.rank >= full:
                    break
                low = self.span(d - 1, self._shift(C, x))
                for row in low.basis():
                    if ech.rank >= full:
                        break
                    ech.insert(_mul_left(x, row, self.n))
                    if ech.rank >= full:
                        break
                    ech.insert(_mul_right(row, x, self.n))
        self._spans[key] = ech
        return ech

    def member(self, a: AlgebraElement) -> str:
        if a.max_degree() > self.bound:
            raise BoundExceeded(f"element of degree {a.max_degree()} exceeds the bound {self.bound}")
        parts: Dict[Tuple, Row] = {}
        for m, s in a.terms.items():
            parts.setdefault(self.klass(m), {})[m] = s
        for C, row in parts.items():
            if not self.span(self.bound, C).contains(row):
                return NOT_MEMBER_UP_TO_BOUND
        return MEMBER


def filtered_member(a: AlgebraElement, gens: Sequence[AlgebraElement], bound: int) -> str:
    return FilteredIdeal(gens, bound, a.n).member(a)


# ---------------------------------------------------------------------------
# Commutation scalars and normality
# ---------------------------------------------------------------------------


class _Marker:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def render(self) -> str:
        return self.name


BOTH_IN_IDEAL = _Marker("BothInIdeal")
NO_SCALAR = _Marker("NoScalar")


def proportional(u: AlgebraElement, v: AlgebraElement, ideal) -> Union[LaurentScalar, _Marker]:
    """lambda with u = lambda * v modulo the ideal, compared via canonical remainders."""
    I = ideal_of(ideal) if not isinstance(ideal, GradedIdeal) else ideal
    ru_all = {W: rc for W, rc in I.reduce(u).items() if rc[0]}
    rv_all = {W: rc for W, rc in I.reduce(v).items() if rc[0]}
    if not ru_all and not rv_all:
        return BOTH_IN_IDEAL
    if set(ru_all) != set(rv_all):
        return NO_SCALAR
    lam = None
    for W in ru_all:
        ru, cu = ru_all[W]
        rv, cv = rv_all[W]
        if set(ru) != set(rv):
            return NO_SCALAR
        k = next(iter(ru))
        # ru / cu = lam * rv / cv
        cand = try_exact_div(ru[k] * cv, cu * rv[k])
        if cand is None:
            return NO_SCALAR
        if lam is None:
            lam = cand
        elif cand != lam:
            return NO_SCALAR
        for kk in ru:
            if ru[kk] * cv != lam * cu * rv[kk]:
                return NO_SCALAR
    return lam


def commutation_scalar(a: AlgebraElement, x: AlgebraElement, ideal) -> Union[LaurentScalar, _Marker]:
    """lambda with a*x = lambda * x*a modulo the ideal, or a marker."""
    return proportional(a * x, x * a, ideal)


def _scalar_ok(s) -> bool:
    return s is BOTH_IN_IDEAL or (isinstance(s, LaurentScalar) and s.is_monomial())


@dataclass
class NormalityReport:
    element: AlgebraElement
    ideal: str
    scalars: Dict[str, object]
    verdict: bool
    second: Optional[AlgebraElement] = None

    def render_scalars(self) -> Dict[str, str]:
        return {k: (v.render() if hasattr(v, "render") else str(v)) for k, v in self.scalars.items()}


def _ideal_name(ideal) -> str:
    if isinstance(ideal, HPrimeSpec):
        return str(ideal)
    if isinstance(ideal, GradedIdeal):
        return "<" + ", ".join(g.render() for g in ideal.generators) + ">"
    return "<" + ", ".join(g.render() for g in ideal) + ">"


def _gen_label(i: int, j: int) -> str:
    return f"X{i}{j}"


def is_normal(a: AlgebraElement, ideal) -> NormalityReport:
    n = a.n
    scalars = {}
    ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = commutation_scalar(a, AlgebraElement.gen(n, i, j), ideal)
            scalars[_gen_label(i, j)] = s
            ok = ok and _scalar_ok(s)
    return NormalityReport(a, _ideal_name(ideal), scalars, ok)


def is_normal_binomial(e: AlgebraElement, f: AlgebraElement, ideal) -> NormalityReport:
    n = e.n
    scalars = {}
    ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = AlgebraElement.gen(n, i, j)
            se = commutation_scalar(e, x, ideal)
            sf = commutation_scalar(f, x, ideal)
            scalars[_gen_label(i, j)] = (se, sf)
            if se is BOTH_IN_IDEAL or sf is BOTH_IN_IDEAL:
                other = sf if se is BOTH_IN_IDEAL else se
                agree = _scalar_ok(other)
            else:
                agree = _scalar_ok(se) and _scalar_ok(sf) and se == sf
            ok = ok and agree
    rep = NormalityReport(e, _ideal_name(ideal), scalars, ok, second=f)
    return rep


@dataclass
class PrefixResult:
    index: int
    element: AlgebraElement
    normal: bool
    not_member: bool

    @property
    def ok(self) -> bool:
        return self.normal and self.not_member


def check_polynormal(gens: Sequence[AlgebraElement], base=None, max_degree: int = DEFAULT_MAX_DEGREE) -> List[PrefixResult]:
    """For each i: gens[i] normal and not a member modulo base + gens[:i]."""
    base_gens = [] if base is None else (base.elements() if isinstance(base, HPrimeSpec) else list(base))
    out = []
    for i, g in enumerate(gens):
        I = ideal_of(base_gens + list(gens[:i]), max_degree)
        nonmember = not I.contains(g)
        normal = is_normal(g, I).verdict if nonmember else False
        out.append(PrefixResult(i, g, normal, nonmember))
    return out


# ---------------------------------------------------------------------------
# Containment among the 36 H-primes
# ---------------------------------------------------------------------------


@dataclass
class Poset:
    keys: List[str]
    contains: Dict[Tuple[str, str], bool]  # (v, w) -> Q_v contains Q_w

    def le(self, w: str, v: str) -> bool:
        """Q_w subset of Q_v."""
        return self.contains[(v, w)]

    def proper(self) -> List[Tuple[str, str]]:
        return [(w, v) for w in self.keys for v in self.keys if w != v and self.le(w, v)]

    def covers(self) -> Dict[str, List[str]]:
        out = {k: [] for k in self.keys}
        prop = set(self.proper())
        for w, v in prop:
            if not any((w, u) in prop and (u, v) in prop for u in self.keys):
                out[w].append(v)
        return out

    def antisymmetric(self) -> bool:
        return all(
            not (self.le(a, b) and self.le(b, a)) for a in self.keys for b in self.keys if a != b
        )

    def transitive(self) -> bool:
        ks = self.keys
        return all(
            self.le(a, c)
            for a in ks
            for b in ks
            if self.le(a, b)
            for c in ks
            if self.le(b, c)
        )

    def to_json(self):
        prop = self.proper()
        return {
            "nodes": list(self.keys),
            "order": {k: sorted(v for (w, v) in prop if w == k) for k in self.keys},
            "covers": {k: sorted(v) for k, v in self.covers().items()},
        }


def containment_poset(max_degree: int = DEFAULT_MAX_DEGREE) -> Poset:
    specs = [build_hprime(w) for w in all_w()]
    keys = [s.key for s in specs]
    table = {}
    for v in specs:
        Iv = ideal_of(v, max_degree)
        for w in specs:
            table[(v.key, w.key)] = all(Iv.contains(g) for g in w.elements())
    return Poset(keys, table)
