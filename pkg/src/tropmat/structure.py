"""Idempotents, regularity witnesses, and maximal subgroups of 2x2 tropical
matrices.

Every 2x2 idempotent falls into one of four parametrized families (upper,
diagonal, lower, zero), each constrained by a nonpositive tropical product
of its off-diagonal parameters.  An H-class indexed by a column-space /
row-space pair (M, N) contains an idempotent iff M and N are mutually
negated singletons-or-intervals in the precise sense of
``idempotent_in_H``; those H-classes are the maximal subgroups, and their
abstract type depends only on the shape of M: trivial, the reals, the reals
times the order-2 group, or the reals wreath the order-2 group.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .geometry import ConvexSet, in_column_space, iso_type, proj_column_space, proj_row_space
from .matrix import TropMatrix, TropVector, residual_scalar, right_residual
from .semiring import BOTTOM, POS_INF, ProjPoint, TropScalar


@dataclass(frozen=True)
class IdempotentForm:
    """One of the four idempotent families, with its parameters.

    upper:    [[0, x], [y, x*y]]      diagonal: [[0, x], [y, 0]]
    lower:    [[x*y, x], [y, 0]]      zero:     all -inf
    (tropical product x*y = x + y, constrained <= 0).
    """

    kind: str
    x: TropScalar | None = None
    y: TropScalar | None = None

    def __post_init__(self):
        if self.kind not in ("zero", "diagonal", "upper", "lower"):
            raise ValueError(f"unknown idempotent family {self.kind!r}")

    def matrix(self) -> TropMatrix:
        if self.kind == "zero":
            return TropMatrix.zero(2)
        x, y = self.x, self.y
        if self.kind == "diagonal":
            return TropMatrix([[0, x], [y, 0]])
        if self.kind == "upper":
            return TropMatrix([[0, x], [y, x * y]])
        return TropMatrix([[x * y, x], [y, 0]])

    def params(self) -> dict[str, str]:
        if self.kind == "zero":
            return {}
        return {"x": str(self.x), "y": str(self.y)}


class GroupType(enum.Enum):
    """Abstract isomorphism type of a maximal subgroup."""

    TRIVIAL = "trivial"
    REALS = "reals"
    REALS_TIMES_S2 = "reals-x-s2"
    REALS_WREATH_S2 = "reals-wr-s2"


_ZERO = TropScalar(0)


def is_idempotent(a: TropMatrix) -> bool:
    return a @ a == a


def in_idempotent_family(a: TropMatrix) -> bool:
    """Shape-based membership test for the four idempotent families.

    Used as the classification side of the exhaustive idempotent check; it
    never multiplies matrices.
    """
    if a.n != 2:
        raise ValueError("the idempotent families are 2x2")
    if a.is_zero:
        return True
    prod = a[0, 1] * a[1, 0]
    if a[0, 0] == _ZERO and a[1, 1] == _ZERO:
        return prod <= _ZERO
    if a[0, 0] == _ZERO and a[1, 1] == prod:
        return prod <= _ZERO
    if a[1, 1] == _ZERO and a[0, 0] == prod:
        return prod <= _ZERO
    return False


def idempotent_form(e: TropMatrix) -> IdempotentForm:
    """Classify an idempotent into its family, with fixed priority zero,
    diagonal, upper, lower when parameters land on an overlap."""
    if e.n != 2:
        raise ValueError("the idempotent families are 2x2")
    if not is_idempotent(e):
        raise ValueError("matrix is not idempotent")
    if e.is_zero:
        return IdempotentForm("zero")
    x, y = e[0, 1], e[1, 0]
    if e[0, 0] == _ZERO and e[1, 1] == _ZERO:
        return IdempotentForm("diagonal", x, y)
    if e[0, 0] == _ZERO:
        return IdempotentForm("upper", x, y)
    return IdempotentForm("lower", x, y)


def _signed_sum_nonpositive(x: ProjPoint, y: ProjPoint) -> bool:
    # x + y <= 0 in the extended sense; callers exclude the {-inf, +inf} mix
    if x.is_neg_inf or y.is_neg_inf:
        return True
    if x.is_pos_inf or y.is_pos_inf:
        return False
    return x.frac + y.frac <= 0


def idempotent_in_H(m: ConvexSet, n: ConvexSet) -> TropMatrix | None:
    """The idempotent in the H-class with column space m and row space n,
    or None when that H-class has none (or is empty).

    An idempotent exists exactly when (i) m = {x} and n = {y} are singletons
    with {x, y} not the mixed pair {-inf, +inf}, or (ii) m is the pointwise
    negation of n and n is not a singleton.
    """
    if m.is_point and n.is_point:
        x, y = m.lo, n.lo
        if (x.is_neg_inf and y.is_pos_inf) or (x.is_pos_inf and y.is_neg_inf):
            return None
        if _signed_sum_nonpositive(x, y):
            xs, ys = x.to_scalar(), y.to_scalar()
            e = TropMatrix([[0, ys], [xs, xs * ys]])
        else:
            # negate into the lower family; safe since neither point is -inf
            nx = BOTTOM if x.is_pos_inf else TropScalar(-x.frac)
            ny = BOTTOM if y.is_pos_inf else TropScalar(-y.frac)
            e = TropMatrix([[nx * ny, nx], [ny, 0]])
    elif m == n.negated() and not n.is_point:
        if m.is_empty:
            e = TropMatrix.zero(2)
        else:
            # m = [x, y] with x < y, so y > -inf and x < +inf
            neg_hi = BOTTOM if m.hi.is_pos_inf else TropScalar(-m.hi.frac)
            lo = m.lo.to_scalar()
            e = TropMatrix([[0, neg_hi], [lo, 0]])
    else:
        return None
    assert is_idempotent(e) and proj_column_space(e) == m and proj_row_space(e) == n, (
        f"idempotent construction defect for ({m}, {n})"
    )
    return e


def group_type_of_H(m: ConvexSet, n: ConvexSet) -> GroupType:
    """The abstract group carried by the maximal subgroup at (m, n)."""
    if idempotent_in_H(m, n) is None:
        raise ValueError(f"the H-class at ({m}, {n}) contains no idempotent")
    t = iso_type(m)
    if t.kind == "empty":
        return GroupType.TRIVIAL
    if t.kind in ("point", "halfinf"):
        return GroupType.REALS
    if t.kind == "interval":
        return GroupType.REALS_TIMES_S2
    return GroupType.REALS_WREATH_S2


def regular_witness(a: TropMatrix) -> TropMatrix:
    """A matrix y with ``a @ y @ a = a``, verified exactly before returning.

    The candidate is the greatest subsolution of ``a @ y @ a <= a`` obtained
    by two nested residuals, with unconstrained coordinates set to 0.  Every
    2x2 tropical matrix admits such a witness; a verification failure would
    be a defect, never a normal return.
    """
    if a.n != 2:
        raise ValueError("regularity witnesses are for 2x2 matrices")
    w = right_residual(a, a)  # greatest W with W @ a <= a
    n = a.n
    rows = []
    for k in range(n):
        row = []
        for j in range(n):
            best = POS_INF
            for i in range(n):
                cand = residual_scalar(w[i, j], a[i, k])
                if cand < best:
                    best = cand
            row.append(best)
        rows.append(row)
    y = TropMatrix(
        [
            [TropScalar(0) if e.is_pos_inf else e.to_scalar() for e in row]
            for row in rows
        ]
    )
    assert a @ y @ a == a, "regularity witness defect"
    return y


_FAMILY_NAMES = ("W", "X", "Y", "Z")


def subgroup_element(family: str, a, x=None, y=None) -> TropMatrix:
    """An element of one of the explicit maximal-subgroup families.

    W(a)            = [[a, -inf], [-inf, -inf]]      (singleton classes)
    X(a; x, y)      = [[a, a-y], [a+x, a]]           (interval [x, y], x < y)
    Y(a; x, y)      = [[a, a-x], [a+y, a]]           (same interval)
    Z(a; x)         = [[a, -inf], [a+x, a]]          (half-infinite classes)

    The X elements form the identity component; Y(.)**2 lands back in it,
    realizing the order-2 part of the interval subgroups.
    """
    if family not in _FAMILY_NAMES:
        raise ValueError(f"unknown family {family!r}: expected one of {_FAMILY_NAMES}")
    a = TropScalar(a)
    if a.is_bottom:
        raise ValueError("the group parameter must be a rational, not -inf")
    af = a.frac
    if family == "W":
        return TropMatrix([[af, "-inf"], ["-inf", "-inf"]])
    if family == "Z":
        if x is None:
            raise ValueError("family Z needs the finite interval endpoint x")
        xf = TropScalar(x).frac
        return TropMatrix([[af, "-inf"], [af + xf, af]])
    if x is None or y is None:
        raise ValueError(f"family {family} needs interval endpoints x < y")
    xf, yf = TropScalar(x).frac, TropScalar(y).frac
    if xf is None or yf is None or xf >= yf:
        raise ValueError("interval endpoints must be rationals with x < y")
    if family == "X":
        return TropMatrix([[af, af - yf], [af + xf, af]])
    return TropMatrix([[af, af - xf], [af + yf, af]])


def fixes_image(e: TropMatrix, v: TropVector) -> bool:
    """Whether the idempotent e fixes v; true for every member of e's column
    space (idempotents act as projections onto their image)."""
    if not is_idempotent(e):
        raise ValueError("matrix is not idempotent")
    if not in_column_space(v, e):
        raise ValueError("vector is outside the idempotent's column space")
    return e @ v == v
