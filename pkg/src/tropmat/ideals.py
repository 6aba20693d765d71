"""The two-sided ideal calculus of the 2x2 tropical matrix monoid.

Every two-sided ideal is faithfully described by a single convex subset of
the projective line drawn from: the closed convex sets (isometry types), the
open intervals of finite diameter, and the open full line.  A matrix belongs
to the ideal iff its projective column space embeds isometrically into the
descriptor; for an open descriptor of width w that means finite diameter
strictly below w.  The descriptors, hence the ideals, are totally ordered,
and an ideal is principal iff its descriptor is closed; the non-principal
ones are exactly a principal ideal minus its generating J-class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .geometry import IsoType, iso_type, proj_column_space
from .matrix import TropMatrix

_EMBED_RANK = {"empty": 0, "point": 1, "interval": 2, "halfinf": 4, "fullline": 5}


@dataclass(frozen=True)
class IdealDescriptor:
    """Descriptor of a two-sided ideal: a closed isometry type, an open
    interval of finite positive width, or the open full line.

    Half-infinite open intervals are unrepresentable by construction: no
    ideal corresponds to one.
    """

    kind: str  # "closed" | "open" | "openline"
    iso: IsoType | None = None
    width: Fraction | None = None

    def __post_init__(self):
        if self.kind == "closed":
            if self.iso is None or self.width is not None:
                raise ValueError("closed descriptors carry exactly an isometry type")
        elif self.kind == "open":
            if self.iso is not None or self.width is None or self.width <= 0:
                raise ValueError("open descriptors carry exactly a positive width")
        elif self.kind == "openline":
            if self.iso is not None or self.width is not None:
                raise ValueError("the open-line descriptor carries no parameters")
        else:
            raise ValueError(f"unknown descriptor kind {self.kind!r}")

    @classmethod
    def closed(cls, t: IsoType) -> "IdealDescriptor":
        return cls("closed", iso=t)

    @classmethod
    def open_finite(cls, w) -> "IdealDescriptor":
        return cls("open", width=Fraction(w))

    @classmethod
    def open_line(cls) -> "IdealDescriptor":
        return cls("openline")

    def key(self) -> tuple:
        """Sort key realizing the containment order of the ideals.

        Closed empty < closed point < ... open(w) < closed interval(w) <
        open(w') ... < open line < closed half-infinite < closed full line.
        """
        if self.kind == "closed":
            rank = _EMBED_RANK[self.iso.kind]
            if self.iso.kind == "interval":
                return (2, self.iso.diameter, 1)
            return (rank, Fraction(0), 0)
        if self.kind == "open":
            return (2, self.width, 0)
        return (3, Fraction(0), 0)

    def __str__(self):
        if self.kind == "closed":
            return f"closed:{self.iso}"
        if self.kind == "open":
            return f"open:{self.width}"
        return "openline"

    @staticmethod
    def parse(text: str) -> "IdealDescriptor":
        token = text.strip()
        if token == "openline":
            return IdealDescriptor.open_line()
        if token.startswith("open:"):
            try:
                w = Fraction(token[len("open:"):])
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad open-ideal width in {text!r}: {exc}") from exc
            if w <= 0:
                raise ValueError(f"open-ideal width must be positive, got {w}")
            return IdealDescriptor.open_finite(w)
        if token.startswith("closed:"):
            return IdealDescriptor.closed(IsoType.parse(token[len("closed:"):]))
        raise ValueError(
            f"bad ideal descriptor {text!r}: expected closed:<type>, open:<w>, or openline"
        )


parse_descriptor = IdealDescriptor.parse


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def ideal_contains(d: IdealDescriptor, a: TropMatrix) -> bool:
    """Membership of a matrix in the ideal described by d."""
    t = iso_type(proj_column_space(a))
    if d.kind == "closed":
        return t.key() <= d.iso.key()
    if d.kind == "open":
        if t.kind in ("empty", "point"):
            return True
        return t.kind == "interval" and t.diameter < d.width
    return t.kind in ("empty", "point", "interval")


def principal_ideal_of(b: TropMatrix) -> IdealDescriptor:
    """The descriptor of the two-sided principal ideal generated by b."""
    return IdealDescriptor.closed(iso_type(proj_column_space(b)))


def ideal_compare(d1: IdealDescriptor, d2: IdealDescriptor) -> Ordering:
    """The total containment order on ideals."""
    k1, k2 = d1.key(), d2.key()
    if k1 < k2:
        return Ordering.LESS
    if k1 > k2:
        return Ordering.GREATER
    return Ordering.EQUAL


def ideal_from_generators(generators: list[TropMatrix]) -> IdealDescriptor:
    """The ideal generated by finitely many matrices: the maximum of their
    principal descriptors, so finitely generated ideals are principal."""
    if not generators:
        raise ValueError("need at least one generator")
    best = principal_ideal_of(generators[0])
    for g in generators[1:]:
        cand = principal_ideal_of(g)
        if cand.key() > best.key():
            best = cand
    return best


def is_principal(d: IdealDescriptor) -> bool:
    return d.kind == "closed"


def decompose(d: IdealDescriptor) -> tuple[IdealDescriptor, IsoType | None]:
    """Express an ideal as (principal ideal, removed J-class or None).

    Open descriptors name the least closed descriptor strictly above every
    member class; removing that class's own J-class recovers the ideal.
    """
    if d.kind == "closed":
        return (d, None)
    if d.kind == "open":
        t = IsoType("interval", d.width)
    else:
        t = IsoType("halfinf")
    return (IdealDescriptor.closed(t), t)
