"""Exact linear algebra over a field object from .fields.

Matrices are dense lists of rows. Subspaces are stored as canonical
column-echelon basis matrices: each basis column has a leading 1 at a pivot
row, pivot rows strictly increase left to right, and pivot rows are zero in
every other column. Two subspaces are equal iff their canonical matrices are
equal, which makes subspace sets and dedup keys cheap.
"""

from __future__ import annotations

from .errors import NonUniqueError, NoSolutionError, ShapeMismatchError


class Mat:
    __slots__ = ("field", "rows", "cols", "a")

    def __init__(self, field, rows: int, cols: int, entries):
        self.field = field
        self.rows = rows
        self.cols = cols
        a = [list(r) for r in entries]
        if len(a) != rows or any(len(r) != cols for r in a):
            raise ShapeMismatchError(
                f"expected {rows}x{cols} entries, got {[len(r) for r in a]}"
            )
        self.a = a

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Mat":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n: int) -> "Mat":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.a[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, entries, cols: int | None = None) -> "Mat":
        entries = [[field.of(x) for x in r] for r in entries]
        rows = len(entries)
        if cols is None:
            if rows == 0:
                raise ShapeMismatchError("cols required for a 0-row matrix")
            cols = len(entries[0])
        return cls(field, rows, cols, entries)

    @classmethod
    def column(cls, field, vec) -> "Mat":
        return cls(field, len(vec), 1, [[field.of(v)] for v in vec])

    def copy(self) -> "Mat":
        return Mat(self.field, self.rows, self.cols, self.a)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        f = self.field
        out = Mat.zeros(f, self.rows, other.cols)
        for i in range(self.rows):
            ai = self.a[i]
            oi = out.a[i]
            for k in range(self.cols):
                c = ai[k]
                if c == f.zero:
                    continue
                bk = other.a[k]
                for j in range(other.cols):
                    if bk[j] != f.zero:
                        oi[j] = f.add(oi[j], f.mul(c, bk[j]))
        return out

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(
            f,
            self.rows,
            self.cols,
            [
                [f.add(x, y) for x, y in zip(r, s)]
                for r, s in zip(self.a, other.a)
            ],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        f = self.field
        return Mat(
            f,
            self.rows,
            self.cols,
            [
                [f.sub(x, y) for x, y in zip(r, s)]
                for r, s in zip(self.a, other.a)
            ],
        )

    def __neg__(self) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [[f.neg(x) for x in r] for r in self.a])

    def scale(self, c) -> "Mat":
        f = self.field
        return Mat(f, self.rows, self.cols, [[f.mul(c, x) for x in r] for r in self.a])

    def t(self) -> "Mat":
        return Mat(
            self.field,
            self.cols,
            self.rows,
            [[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack row mismatch")
        return Mat(
            self.field,
            self.rows,
            self.cols + other.cols,
            [r + s for r, s in zip(self.a, other.a)],
        )

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ShapeMismatchError("vstack col mismatch")
        return Mat(self.field, self.rows + other.rows, self.cols, self.a + other.a)

    def col(self, j: int) -> list:
        return [self.a[i][j] for i in range(self.rows)]

    def take_cols(self, idx) -> "Mat":
        return Mat(
            self.field,
            self.rows,
            len(idx),
            [[r[j] for j in idx] for r in self.a],
        )

    def take_rows(self, idx) -> "Mat":
        return Mat(self.field, len(idx), self.cols, [self.a[i] for i in idx])

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for r in self.a for x in r)

    def key(self) -> tuple:
        return (self.rows, self.cols, tuple(tuple(r) for r in self.a))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.key() == other.key()
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, {self.a})"

    def to_lists(self) -> list:
        return [list(r) for r in self.a]

    def _same_shape(self, other: "Mat") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatchError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Row-reduced echelon form and the pivot column list."""
    f = m.field
    a = [list(r) for r in m.a]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if a[i][c] != f.zero:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = f.inv(a[r][c])
        if a[r][c] != f.one:
            a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != f.zero:
                coef = a[i][c]
                a[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return Mat(f, m.rows, m.cols, a), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def col_space(m: Mat) -> Mat:
    """Canonical column-echelon basis of the column span."""
    r, pivots = rref(m.t())
    basis_rows = [r.a[i] for i in range(len(pivots))]
    return Mat(m.field, m.rows, len(pivots), list(map(list, zip(*basis_rows)))) \
        if basis_rows else Mat(m.field, m.rows, 0, [[] for _ in range(m.rows)])


def pivot_rows(w: Mat) -> list[int]:
    """Pivot rows of a canonical column-echelon matrix."""
    f = w.field
    out = []
    for j in range(w.cols):
        for i in range(w.rows):
            if w.a[i][j] != f.zero:
                out.append(i)
                break
    return out


def kernel(m: Mat) -> Mat:
    """Canonical basis of the right null space, as columns."""
    f = m.field
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    cols = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(r.a[i][fc])
        cols.append(v)
    if not cols:
        return Mat(f, m.cols, 0, [[] for _ in range(m.cols)])
    raw = Mat(f, m.cols, len(cols), list(map(list, zip(*cols))))
    return col_space(raw)


def solve_right(a: Mat, b: Mat) -> Mat | None:
    """One solution X of A X = B, or None. Free variables are set to zero."""
    f = a.field
    aug = a.hstack(b)
    r, pivots = rref(aug)
    pivots_a = [c for c in pivots if c < a.cols]
    if len(pivots_a) != len(pivots):
        return None
    x = Mat.zeros(f, a.cols, b.cols)
    for i, pc in enumerate(pivots_a):
        for j in range(b.cols):
            x.a[pc][j] = r.a[i][a.cols + j]
    return x


def solve_unique(a: Mat, b: Mat) -> Mat:
    """The unique solution of A X = B; raises if none or many."""
    x = solve_right(a, b)
    if x is None:
        raise NoSolutionError("linear system has no solution")
    if kernel(a).cols != 0:
        raise NonUniqueError("linear system has a nontrivial null space")
    return x


def membership_residual(w: Mat) -> Mat:
    """R with R v = 0 iff v lies in the span of canonical basis w."""
    f = w.field
    piv = pivot_rows(w)
    sel = Mat.zeros(f, w.cols, w.rows)
    for j, p in enumerate(piv):
        sel.a[j][p] = f.one
    return Mat.identity(f, w.rows) - (w @ sel)


def contains_vector(w: Mat, v: list) -> bool:
    return (membership_residual(w) @ Mat.column(w.field, v)).is_zero()


def subspace_contains(w: Mat, u: Mat) -> bool:
    """Whether span(u) is inside span(w); both are basis matrices."""
    return (membership_residual(w) @ u).is_zero()


def subspace_sum(a: Mat, b: Mat) -> Mat:
    return col_space(a.hstack(b))


def subspace_intersect(a: Mat, b: Mat) -> Mat:
    ra = membership_residual(a)
    rb = membership_residual(b)
    return kernel(ra.vstack(rb))


def preimage(x: Mat, w: Mat) -> Mat:
    """Canonical basis of {v : X v in span(w)}; w over the target space."""
    return kernel(membership_residual(w) @ x)


def coords_in(w: Mat, b: Mat) -> Mat:
    """Coordinates of the columns of b in the canonical basis w."""
    f = w.field
    piv = pivot_rows(w)
    c = b.take_rows(piv) if piv else Mat(f, 0, b.cols, [])
    if (w @ c).key() != b.key():
        raise NoSolutionError("columns do not lie in the given subspace")
    return c


def char_poly(m: Mat) -> list:
    """Coefficients of det(tI - M), lowest degree first. Rationals only."""
    f = m.field
    if f.char != 0:
        raise ShapeMismatchError("char_poly requires rational entries")
    n = m.rows
    coeffs = [f.zero] * (n + 1)
    coeffs[n] = f.one
    mk = Mat.identity(f, n)
    for k in range(1, n + 1):
        mk = m @ mk
        tr = f.zero
        for i in range(n):
            tr = f.add(tr, mk.a[i][i])
        ck = f.mul(f.inv(f.of(k)), tr)
        coeffs[n - k] = f.neg(ck)
        for i in range(n):
            mk.a[i][i] = f.sub(mk.a[i][i], ck)
    return coeffs


def det(m: Mat):
    """Exact determinant by fraction-free-ish elimination through the field."""
    f = m.field
    if m.rows != m.cols:
        raise ShapeMismatchError("determinant of a non-square matrix")
    n = m.rows
    a = [list(r) for r in m.a]
    sign = 1
    acc = f.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if a[i][c] != f.zero:
                pr = i
                break
        if pr is None:
            return f.zero
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            sign = -sign
        piv = a[c][c]
        acc = f.mul(acc, piv)
        inv = f.inv(piv)
        for i in range(c + 1, n):
            if a[i][c] != f.zero:
                coef = f.mul(a[i][c], inv)
                a[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(a[i], a[c])]
    return acc if sign == 1 else f.neg(acc)


def mat_over(field, m: Mat) -> Mat:
    """Re-coerce a matrix entrywise into another field (e.g. reduce mod p)."""
    return Mat(field, m.rows, m.cols, [[field.of(x) for x in r] for r in m.a])
