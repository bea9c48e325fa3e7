"""Dense exact linear algebra over a coefficient field, plus an
incremental row-echelon span used for graded ideal computations.

Matrices are immutable after construction. Pivoting is deterministic
(first nonzero entry left to right), so all outputs are reproducible.
"""

from .errors import DimensionMismatchError


class Matrix:
    """A dense rows x cols matrix of exact scalars over one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatchError("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatchError(f"ncols={ncols} but rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def mul_vector(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} vs {self.ncols} columns")
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, b in zip(row, v):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def rref(self):
        """Reduced row echelon form: returns (R, rank, pivot_columns)."""
        f = self.field
        rows = [f.reduce_row(list(r)) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot_row = None
            for i in range(r, nrows):
                if not f.is_zero(rows[i][c]):
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            head = rows[r][c]
            if head != f.one:
                inv = f.inv(head)
                rows[r] = [f.mul(inv, x) for x in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i == r:
                    continue
                factor = rows[i][c]
                if f.is_zero(factor):
                    continue
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], prow)]
                if i > r:
                    rows[i] = f.reduce_row(rows[i])
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return Matrix(f, rows, ncols=ncols), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self):
        """A basis of the right kernel in pivot-parameterized canonical form."""
        f = self.field
        R, rank, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [f.zero] * self.ncols
            v[free] = f.one
            for i, c in enumerate(pivots):
                v[c] = f.neg(R.rows[i][free])
            basis.append(v)
        return basis

    def solve(self, b):
        """One exact solution of M v = b (free variables set to 0), or None."""
        if len(b) != self.nrows:
            raise DimensionMismatchError(f"rhs of length {len(b)} vs {self.nrows} rows")
        f = self.field
        augmented = Matrix(f, [row + [val] for row, val in zip(self.rows, b)], ncols=self.ncols + 1)
        if self.nrows == 0:
            return [f.zero] * self.ncols
        R, rank, pivots = augmented.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        v = [f.zero] * self.ncols
        for i, c in enumerate(pivots):
            v[c] = R.rows[i][self.ncols]
        return v

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"


class RowSpan:
    """Incremental echelon span of sparse rows keyed by comparable labels.

    Rows are dicts mapping a column label to a nonzero scalar; the leading
    label of a row is its maximum key. Adding a row reduces it against the
    stored pivot rows and either absorbs it (rank unchanged) or installs a
    new pivot. Sparse near-monomial data stays cheap this way.
    """

    __slots__ = ("field", "_pivots")

    def __init__(self, field):
        self.field = field
        self._pivots = {}  # leading label -> row dict with leading coeff 1

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def rows(self):
        return list(self._pivots.values())

    def _reduce(self, v):
        f = self.field
        v = {k: c for k, c in v.items() if not f.is_zero(c)}
        while v:
            lead = max(v)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return v, lead
            factor = v[lead]
            for k, c in pivot.items():
                cur = f.sub(v.get(k, f.zero), f.mul(factor, c))
                if f.is_zero(cur):
                    v.pop(k, None)
                else:
                    v[k] = cur
        return v, None

    def add(self, v) -> bool:
        """Insert a row; returns True iff it enlarges the span."""
        v, lead = self._reduce(v)
        if lead is None:
            return False
        f = self.field
        head = v[lead]
        if head != f.one:
            inv = f.inv(head)
            v = {k: f.mul(inv, c) for k, c in v.items()}
        self._pivots[lead] = v
        return True

    def contains(self, v) -> bool:
        return self._reduce(v)[1] is None
