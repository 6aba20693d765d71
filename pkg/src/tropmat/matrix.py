"""Tropical matrix and vector arithmetic, plus the residuation solver.

Matrices are square grids of exact max-plus scalars for arbitrary n; the
product is ``(A @ B)[i,j] = max_k A[i,k] + B[k,j]``.  Residuation computes
the greatest X with ``B @ X <= A`` entrywise.  Residual entries live in the
completed carrier that also contains ``+inf`` (a residual coordinate is
``+inf`` exactly when nothing constrains it, i.e. the matching column of the
divisor is the zero vector); such entries are quarantined in
``ResidualMatrix`` and replaced by 0 when a concrete solution over the plain
semiring is materialized.  This makes ``A = B @ X`` decidable:  it is
solvable iff the materialized greatest subsolution attains A.
"""

from __future__ import annotations

import json

from .semiring import BOTTOM, NEG_INF, POS_INF, ProjPoint, TropScalar


class TropVector:
    """An n-tuple of tropical scalars."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        self._entries = tuple(TropScalar(e) for e in entries)
        if not self._entries:
            raise ValueError("vectors must have positive dimension")

    @classmethod
    def zero(cls, n: int) -> "TropVector":
        return cls([BOTTOM] * n)

    @property
    def n(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[TropScalar, ...]:
        return self._entries

    @property
    def is_zero(self) -> bool:
        return all(e.is_bottom for e in self._entries)

    def scaled(self, lam) -> "TropVector":
        lam = TropScalar(lam)
        return TropVector([lam * e for e in self._entries])

    def __getitem__(self, i: int) -> TropScalar:
        return self._entries[i]

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other):
        if not isinstance(other, TropVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self._entries) + ")"

    def __repr__(self):
        return f"TropVector({[str(e) for e in self._entries]!r})"


class TropMatrix:
    """An n-by-n matrix of tropical scalars.

    ``A @ B`` is the max-plus product, ``A + B`` the entrywise max, and
    ``A @ v`` the action on column vectors.  Instances are immutable.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        self._rows = tuple(tuple(TropScalar(e) for e in row) for row in rows)
        n = len(self._rows)
        if n == 0 or any(len(row) != n for row in self._rows):
            raise ValueError("matrix must be square and nonempty")

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls([[0 if i == j else BOTTOM for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "TropMatrix":
        return cls([[BOTTOM] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[TropScalar, ...], ...]:
        return self._rows

    def row(self, i: int) -> TropVector:
        return TropVector(self._rows[i])

    def column(self, j: int) -> TropVector:
        return TropVector([self._rows[i][j] for i in range(self.n)])

    @property
    def is_zero(self) -> bool:
        return all(e.is_bottom for row in self._rows for e in row)

    def __getitem__(self, ij) -> TropScalar:
        i, j = ij
        return self._rows[i][j]

    def _same_size(self, other: "TropMatrix"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __matmul__(self, other):
        if isinstance(other, TropVector):
            if self.n != other.n:
                raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
            out = []
            for i in range(self.n):
                acc = BOTTOM
                for k in range(self.n):
                    acc = acc + self._rows[i][k] * other[k]
                out.append(acc)
            return TropVector(out)
        if isinstance(other, TropMatrix):
            self._same_size(other)
            n = self.n
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = BOTTOM
                    for k in range(n):
                        acc = acc + self._rows[i][k] * other._rows[k][j]
                    row.append(acc)
                out.append(row)
            return TropMatrix(out)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        self._same_size(other)
        return TropMatrix(
            [
                [self._rows[i][j] + other._rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def transpose(self) -> "TropMatrix":
        return TropMatrix(
            [[self._rows[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def is_monomial(self) -> bool:
        """True iff exactly one entry per row and per column is not ``-inf``.

        These are precisely the invertible elements of the matrix monoid.
        """
        n = self.n
        col_counts = [0] * n
        for i in range(n):
            row_count = 0
            for j in range(n):
                if not self._rows[i][j].is_bottom:
                    row_count += 1
                    col_counts[j] += 1
            if row_count != 1:
                return False
        return all(c == 1 for c in col_counts)

    def leq(self, other: "TropMatrix") -> bool:
        """Entrywise order."""
        self._same_size(other)
        return all(
            self._rows[i][j] <= other._rows[i][j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def to_tokens(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __str__(self):
        return json.dumps(self.to_tokens())

    def __repr__(self):
        return f"TropMatrix({self.to_tokens()!r})"


def parse_matrix(text: str) -> TropMatrix:
    """Parse the JSON interchange form, e.g. ``[["0","-inf"],["1/2","3"]]``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad matrix JSON at offset {exc.pos}: {exc.msg}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a JSON array of arrays of scalar tokens")
    rows = []
    for i, row in enumerate(data):
        out = []
        for j, tok in enumerate(row):
            try:
                out.append(TropScalar(tok))
            except (ValueError, TypeError) as exc:
                raise ValueError(f"matrix entry ({i},{j}): {exc}") from exc
        rows.append(out)
    return TropMatrix(rows)


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    return a @ b


def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    return a + b


def transpose(a: TropMatrix) -> TropMatrix:
    return a.transpose()


def is_monomial(a: TropMatrix) -> bool:
    return a.is_monomial()


def mat_vec(a: TropMatrix, v: TropVector) -> TropVector:
    return a @ v


def scale(lam, v: TropVector) -> TropVector:
    return v.scaled(lam)


def monomial_inverse(a: TropMatrix) -> TropMatrix:
    """The two-sided inverse of a monomial matrix: negate each finite entry
    and transpose its position."""
    if not a.is_monomial():
        raise ValueError("matrix is not monomial, hence not invertible")
    n = a.n
    rows = [[BOTTOM] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if not a[i, j].is_bottom:
                rows[j][i] = -a[i, j]
    return TropMatrix(rows)


def residual_scalar(target, divisor) -> ProjPoint:
    """The greatest t with divisor + t <= target, in the completed order.

    Unconstrained when the divisor is ``-inf`` (yielding ``+inf``), and
    ``-inf`` when a ``-inf`` target meets a finite divisor.  The target may
    itself be ``+inf`` (residuals of residuals), which is also unconstraining.
    """
    target = target if isinstance(target, ProjPoint) else ProjPoint(target)
    divisor = TropScalar(divisor)
    if divisor.is_bottom or target.is_pos_inf:
        return POS_INF
    if target.is_neg_inf:
        return NEG_INF
    return ProjPoint(target.frac - divisor.frac)


class ResidualMatrix:
    """Greatest-subsolution matrix over the completed carrier.

    Entries are projective-line values; ``+inf`` marks coordinates the
    divisor leaves unconstrained.  ``witness()`` returns a concrete plain
    solution by putting 0 in those coordinates (any finite value there
    multiplies only ``-inf`` entries of the divisor, so the choice is free).
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        self._rows = tuple(tuple(ProjPoint(e) for e in row) for row in rows)
        n = len(self._rows)
        if n == 0 or any(len(row) != n for row in self._rows):
            raise ValueError("residual matrix must be square and nonempty")

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[ProjPoint, ...], ...]:
        return self._rows

    def __getitem__(self, ij) -> ProjPoint:
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> "ResidualMatrix":
        return ResidualMatrix(
            [[self._rows[j][i] for j in range(self.n)] for i in range(self.n)]
        )

    def witness(self) -> TropMatrix:
        return TropMatrix(
            [
                [TropScalar(0) if e.is_pos_inf else e.to_scalar() for e in row]
                for row in self._rows
            ]
        )

    def dominates(self, x: TropMatrix) -> bool:
        """Entrywise x <= self, with ``+inf`` maximal."""
        if self.n != x.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {x.n}")
        return all(
            ProjPoint(x[i, j]) <= self._rows[i][j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def __eq__(self, other):
        if not isinstance(other, ResidualMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"ResidualMatrix({[[str(e) for e in row] for row in self._rows]!r})"


def left_residual(b: TropMatrix, a: TropMatrix) -> ResidualMatrix:
    """The greatest X with ``b @ X <= a`` entrywise: X[k,j] = min_i (a[i,j] - b[i,k])
    under the residuated subtraction of ``residual_scalar``."""
    if b.n != a.n:
        raise ValueError(f"dimension mismatch: {b.n} vs {a.n}")
    n = b.n
    rows = []
    for k in range(n):
        row = []
        for j in range(n):
            best = POS_INF
            for i in range(n):
                cand = residual_scalar(a[i, j], b[i, k])
                if cand < best:
                    best = cand
            row.append(best)
        rows.append(row)
    return ResidualMatrix(rows)


def right_residual(a: TropMatrix, b: TropMatrix) -> ResidualMatrix:
    """The greatest X with ``X @ b <= a``; the transpose dual of left_residual."""
    return left_residual(b.transpose(), a.transpose()).transpose()


def solves_right(b: TropMatrix, a: TropMatrix) -> bool:
    """Whether ``a = b @ X`` is solvable, i.e. a lies in b's right ideal.

    Decided by residuation: the equation is solvable iff the materialized
    greatest subsolution attains a.
    """
    return b @ left_residual(b, a).witness() == a


def residual_vector(a: TropMatrix, v: TropVector) -> tuple[ProjPoint, ...]:
    """Greatest x with ``a @ x <= v`` coordinatewise."""
    if a.n != v.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {v.n}")
    out = []
    for k in range(a.n):
        best = POS_INF
        for i in range(a.n):
            cand = residual_scalar(v[i], a[i, k])
            if cand < best:
                best = cand
        out.append(best)
    return tuple(out)
