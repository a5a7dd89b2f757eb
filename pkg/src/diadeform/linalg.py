"""Dense exact matrices with rank / solve / kernel over a field.

Normalized Gaussian elimination is the backbone; everything is exact, so
all identities asserted elsewhere (delta^2 = 0 and friends) hold with zero
tolerance.  Matrices are immutable after construction.
"""

from .errors import MixedFields, ShapeMismatch


def _coerce(field, x):
    if isinstance(x, int):
        return field.from_int(x)
    if field.owns(x):
        return x
    raise MixedFields("entry %r does not belong to %r" % (x, field))


class Matrix:
    """A rows x cols matrix of exact field elements, row-major."""

    __slots__ = ("field", "rows", "cols", "entries", "_ech")

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows:
            raise ShapeMismatch("expected %d rows, got %d" % (rows, len(entries)))
        grid = []
        for row in entries:
            if len(row) != cols:
                raise ShapeMismatch(
                    "expected %d cols, got %d" % (cols, len(row)))
            grid.append(tuple(_coerce(field, x) for x in row))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(grid))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n,
                   [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field, rows):
        r = len(rows)
        c = len(rows[0]) if rows else 0
        return cls(field, r, c, rows)

    @classmethod
    def column(cls, field, vec):
        return cls(field, len(vec), 1, [[x] for x in vec])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.entries == other.entries
                and self.rows == other.rows and self.cols == other.cols)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.rows, self.cols, self.field)

    def _check_same_field(self, other):
        if self.field != other.field:
            raise MixedFields("%r vs %r" % (self.field, other.field))

    def __add__(self, other):
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix subtraction shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      [[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols,
                      [[-a for a in row] for row in self.entries])

    def scale(self, c):
        c = _coerce(self.field, c)
        return Matrix(self.field, self.rows, self.cols,
                      [[c * a for a in row] for row in self.entries])

    def __mul__(self, other):
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols))
        z = self.field.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = z
                for k in range(self.cols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(s)
            out.append(row)
        return Matrix(self.field, self.rows, other.cols, out)

    def apply(self, vec):
        """Matrix-vector product, vec given and returned as a tuple."""
        if len(vec) != self.cols:
            raise ShapeMismatch("vector length %d, expected %d"
                                % (len(vec), self.cols))
        z = self.field.zero
        out = []
        for i in range(self.rows):
            s = z
            for k in range(self.cols):
                s = s + self.entries[i][k] * vec[k]
            out.append(s)
        return tuple(out)

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def hstack(self, other):
        self._check_same_field(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [list(r1) + list(r2)
                       for r1, r2 in zip(self.entries, other.entries)])

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.entries for x in row)

    # -- elimination ----------------------------------------------------

    def _echelon(self):
        """Reduced row echelon form; returns (rref rows, pivot columns).

        Memoized: rank and kernel queries against the same matrix reuse
        one elimination.
        """
        try:
            return self._ech
        except AttributeError:
            pass
        m = [list(row) for row in self.entries]
        z = self.field.zero
        pivots = []
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            pr = None
            for i in range(r, self.rows):
                if m[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c]
            m[r] = [x / inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != z:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        object.__setattr__(self, "_ech", (m, pivots))
        return m, pivots

    def rank(self):
        return len(self._echelon()[1])

    def kernel_basis(self):
        """A basis of ker(self), as a list of tuples; exact."""
        m, pivots = self._echelon()
        z, o = self.field.zero, self.field.one
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = o
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """Any exact solution x of self * x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise ShapeMismatch("rhs length %d, expected %d"
                                % (len(b), self.rows))
        aug = self.hstack(Matrix.column(self.field, b))
        m, pivots = aug._echelon()
        z = self.field.zero
        if self.cols in pivots:
            return None
        x = [z] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = m[r][self.cols]
        return tuple(x)
