"""Projective column/row spaces of 2x2 matrices and their isometry theory.

A 2-generated convex set in the projective tropical line is empty, a single
point, or a closed interval; these are the values of the column-space and
row-space maps and they index the R- and L-classes of the matrix monoid.
Isometry between two such sets is decided combinatorially through a
five-way isometry type (empty, point, finite interval of a given diameter,
half-infinite interval, full line), and isometric *embedding* totally
orders the types.  Orientation-reversing isometries are allowed, so the two
half-infinite orientations form a single type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrix import TropMatrix, TropVector, residual_vector
from .semiring import (
    NEG_INF,
    POS_INF,
    ExtDistance,
    ProjPoint,
    TropScalar,
    delta,
    ext_sub,
)


class ConvexSet:
    """A closed convex subset of the projective line.

    Canonical form: empty (no endpoints), a point (equal endpoints), or an
    interval with ``lo < hi`` strictly.  Construct through ``empty()``,
    ``point()`` and ``interval()``; the latter sorts its endpoints and
    collapses equal ones to a point.
    """

    __slots__ = ("_lo", "_hi")

    def __init__(self, lo: ProjPoint | None, hi: ProjPoint | None):
        self._lo = lo
        self._hi = hi

    @classmethod
    def empty(cls) -> "ConvexSet":
        return cls(None, None)

    @classmethod
    def point(cls, p) -> "ConvexSet":
        p = ProjPoint(p)
        return cls(p, p)

    @classmethod
    def interval(cls, a, b) -> "ConvexSet":
        a, b = ProjPoint(a), ProjPoint(b)
        if b < a:
            a, b = b, a
        return cls(a, b)

    @classmethod
    def full_line(cls) -> "ConvexSet":
        return cls(NEG_INF, POS_INF)

    @property
    def is_empty(self) -> bool:
        return self._lo is None

    @property
    def is_point(self) -> bool:
        return self._lo is not None and self._lo == self._hi

    @property
    def is_interval(self) -> bool:
        return self._lo is not None and self._lo != self._hi

    @property
    def lo(self) -> ProjPoint:
        if self._lo is None:
            raise ValueError("the empty set has no endpoints")
        return self._lo

    @property
    def hi(self) -> ProjPoint:
        if self._hi is None:
            raise ValueError("the empty set has no endpoints")
        return self._hi

    def contains(self, p) -> bool:
        if self._lo is None:
            return False
        p = ProjPoint(p)
        return self._lo <= p <= self._hi

    def negated(self) -> "ConvexSet":
        """The pointwise negation; swaps and negates the endpoints."""
        if self._lo is None:
            return self
        return ConvexSet(-self._hi, -self._lo)

    def __eq__(self, other):
        if not isinstance(other, ConvexSet):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi

    def __hash__(self):
        return hash((self._lo, self._hi))

    def __str__(self):
        if self.is_empty:
            return "empty"
        if self.is_point:
            return "{" + str(self._lo) + "}"
        return f"[{self._lo},{self._hi}]"

    def __repr__(self):
        return f"ConvexSet.parse({str(self)!r})"

    @staticmethod
    def parse(text: str) -> "ConvexSet":
        token = text.strip()
        if token == "empty":
            return ConvexSet.empty()
        if token.startswith("{") and token.endswith("}"):
            return ConvexSet.point(ProjPoint(token[1:-1].strip()))
        if token.startswith("[") and token.endswith("]"):
            parts = token[1:-1].split(",")
            if len(parts) != 2:
                raise ValueError(
                    f"bad set literal {text!r}: expected two comma-separated endpoints"
                )
            lo, hi = ProjPoint(parts[0].strip()), ProjPoint(parts[1].strip())
            if hi < lo:
                raise ValueError(f"bad set literal {text!r}: endpoints out of order")
            return ConvexSet.interval(lo, hi)
        raise ValueError(
            f"bad set literal {text!r}: expected 'empty', '{{p}}', or '[lo,hi]'"
        )


parse_set = ConvexSet.parse

_ISO_RANK = {"empty": 0, "point": 1, "interval": 2, "halfinf": 3, "fullline": 4}


@dataclass(frozen=True)
class IsoType:
    """Isometry class of a closed convex subset of the projective line.

    ``interval`` carries its (positive, finite) diameter; the other kinds
    carry none.  Isometric embedding totally orders the types, realized by
    ``key()``.
    """

    kind: str
    diameter: Fraction | None = None

    def __post_init__(self):
        if self.kind not in _ISO_RANK:
            raise ValueError(f"unknown isometry type {self.kind!r}")
        if self.kind == "interval":
            if self.diameter is None or self.diameter <= 0:
                raise ValueError("interval types carry a positive finite diameter")
        elif self.diameter is not None:
            raise ValueError(f"{self.kind} types carry no diameter")

    def key(self) -> tuple[int, Fraction]:
        return (_ISO_RANK[self.kind], self.diameter or Fraction(0))

    def __str__(self):
        if self.kind == "interval":
            return f"interval:{self.diameter}"
        return self.kind

    @staticmethod
    def parse(text: str) -> "IsoType":
        token = text.strip()
        if token.startswith("interval:"):
            d = Fraction(token[len("interval:"):])
            return IsoType("interval", d)
        return IsoType(token)


parse_iso_type = IsoType.parse


def _require_2x2(a: TropMatrix):
    if a.n != 2:
        raise ValueError(f"the classification theory is specific to 2x2 matrices, got {a.n}x{a.n}")


def proj_point_of(v: TropVector) -> ProjPoint:
    """The projective image of a nonzero 2-vector (x1, x2), namely x2 - x1
    under extended subtraction."""
    if v.n != 2:
        raise ValueError("projectivisation here is for 2-vectors")
    if v.is_zero:
        raise ValueError("the zero vector has no projective image")
    return ext_sub(v[1], v[0])


def proj_column_space(a: TropMatrix) -> ConvexSet:
    """The projectivised column space of a 2x2 matrix.

    Empty for the zero matrix; a point when one column is the zero vector
    (the image of the other); otherwise the closed interval spanned by the
    images of the two columns.
    """
    _require_2x2(a)
    if a.is_zero:
        return ConvexSet.empty()
    c0, c1 = a.column(0), a.column(1)
    if c0.is_zero:
        return ConvexSet.point(proj_point_of(c1))
    if c1.is_zero:
        return ConvexSet.point(proj_point_of(c0))
    return ConvexSet.interval(proj_point_of(c0), proj_point_of(c1))


def proj_row_space(a: TropMatrix) -> ConvexSet:
    """The projectivised row space: the column space of the transpose."""
    return proj_column_space(a.transpose())


def diameter(s: ConvexSet) -> ExtDistance:
    """sup of pairwise distances: 0 for the empty set and points, the
    endpoint distance for intervals."""
    if s.is_empty or s.is_point:
        return ExtDistance(0)
    return delta(s.lo, s.hi)


def iso_type(s: ConvexSet) -> IsoType:
    if s.is_empty:
        return IsoType("empty")
    if s.is_point:
        return IsoType("point")
    if s.lo.is_neg_inf and s.hi.is_pos_inf:
        return IsoType("fullline")
    if s.lo.is_neg_inf or s.hi.is_pos_inf:
        return IsoType("halfinf")
    return IsoType("interval", s.hi.frac - s.lo.frac)


def isometric(s: ConvexSet, t: ConvexSet) -> bool:
    """Whether a distance-preserving bijection exists (orientation may flip):
    equivalent to having equal isometry types."""
    return iso_type(s) == iso_type(t)


def _as_iso_type(x) -> IsoType:
    if isinstance(x, IsoType):
        return x
    if isinstance(x, ConvexSet):
        return iso_type(x)
    raise TypeError(f"expected a convex set or isometry type, got {x!r}")


def embeds_isometrically(s, t) -> bool:
    """Whether s embeds isometrically into t (arguments may be sets or types).

    The embedding order is total on isometry types: empty, then points, then
    finite intervals by diameter, then half-infinite intervals, then the full
    line.
    """
    return _as_iso_type(s).key() <= _as_iso_type(t).key()


def subset(s: ConvexSet, t: ConvexSet) -> bool:
    """Literal containment of closed convex sets."""
    if s.is_empty:
        return True
    if t.is_empty:
        return False
    return t.lo <= s.lo and s.hi <= t.hi


def in_column_space(v: TropVector, a: TropMatrix) -> bool:
    """Whether v is a tropical linear combination of a's columns.

    Decided by residuation: v is attainable iff the materialized greatest
    subsolution x of ``a @ x <= v`` attains it.  The zero vector is always a
    member (scale every column by ``-inf``).
    """
    _require_2x2(a)
    if a.n != v.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {v.n}")
    if v.is_zero:
        return True
    coeffs = residual_vector(a, v)
    x = TropVector(
        [TropScalar(0) if c.is_pos_inf else c.to_scalar() for c in coeffs]
    )
    return a @ x == v


def embed_image(s: ConvexSet, t: ConvexSet) -> ConvexSet:
    """A concrete isometric copy of s inside t.

    Exists exactly when s embeds isometrically in t; raises otherwise.
    """
    if not embeds_isometrically(s, t):
        raise ValueError(f"{s} does not embed isometrically in {t}")
    if s.is_empty:
        return ConvexSet.empty()
    if s.is_point:
        if t.is_point or t.lo.is_finite:
            return ConvexSet.point(t.lo)
        if t.hi.is_finite:
            return ConvexSet.point(t.hi)
        return ConvexSet.point(ProjPoint(0))
    st = iso_type(s)
    if st.kind == "interval":
        d = st.diameter
        if t.lo.is_finite:
            return ConvexSet.interval(t.lo, ProjPoint(t.lo.frac + d))
        if t.hi.is_finite:
            return ConvexSet.interval(ProjPoint(t.hi.frac - d), t.hi)
        return ConvexSet.interval(ProjPoint(0), ProjPoint(d))
    if st.kind == "halfinf":
        if iso_type(t).kind == "halfinf":
            return t
        return ConvexSet.interval(ProjPoint(0), POS_INF)
    return t  # full line only embeds in the full line


def canonical_set(t: IsoType) -> ConvexSet:
    """A canonical representative of an isometry type."""
    if t.kind == "empty":
        return ConvexSet.empty()
    if t.kind == "point":
        return ConvexSet.point(ProjPoint(0))
    if t.kind == "interval":
        return ConvexSet.interval(ProjPoint(0), ProjPoint(t.diameter))
    if t.kind == "halfinf":
        return ConvexSet.interval(NEG_INF, ProjPoint(0))
    return ConvexSet.full_line()
