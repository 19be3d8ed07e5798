"""Exact dense linear algebra over Q or a prime field F_p.

Scalars are plain values (fractions.Fraction for Q, small ints in [0, p) for
F_p); a Field object supplies the arithmetic.  Everything downstream funnels
its rank / kernel / solve / intersection questions through this module, so
all echelon forms here are the canonical reduced row echelon form: two spans
are equal iff their echelonized bases compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


class Field:
    """Abstract exact field; concrete: RationalField, PrimeField."""

    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def from_fraction(self, fr):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def format(self, a) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, fr):
        return Fraction(fr)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def format(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError("F_p needs a prime p, got %r" % (p,))
        self.p = p
        self.name = "F%d" % p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if fr.denominator % self.p == 0:
            raise FieldError("denominator divisible by %d" % self.p)
        return (fr.numerator * pow(fr.denominator, -1, self.p)) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def format(self, a) -> str:
        return "%d mod %d" % (a % self.p, self.p)


QQ = RationalField()


def field_from_spec(spec: str) -> Field:
    """Parse a field spec string: "Q" or "F<p>"."""
    if spec == "Q":
        return QQ
    if spec.startswith("F") and spec[1:].isdigit():
        return PrimeField(int(spec[1:]))
    raise FieldError("unknown field spec %r (expected Q or F<p>)" % (spec,))


@dataclass
class Matrix:
    """Dense row-major matrix over an exact field."""

    field: Field
    rows: int
    cols: int
    entries: list

    @staticmethod
    def zero(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, rows, cols, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        m = Matrix.zero(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one()
        return m

    @staticmethod
    def from_rows(field: Field, rows: list) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return Matrix(field, len(rows), ncols, rows)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def mat_vec(self, v: list) -> list:
        f = self.field
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        out = []
        for row in self.entries:
            s = f.zero()
            for a, x in zip(row, v):
                if not f.is_zero(a) and not f.is_zero(x):
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        f = self.field
        out = Matrix.zero(f, self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                a = row[k]
                if f.is_zero(a):
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )


def _rref_in_place(field: Field, rows: list) -> tuple:
    """Reduce rows to canonical RREF; returns (rank, pivot_columns)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        # find a pivot row at or below r
        sel = None
        for i in range(r, nrows):
            if not field.is_zero(rows[i][c]):
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        # normalize pivot to 1
        inv = field.inv(rows[r][c])
        if not field.is_zero(field.sub(inv, field.one())):
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        # eliminate everywhere else
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if field.is_zero(factor):
                continue
            rowi = rows[i]
            for j in range(c, ncols):
                if not field.is_zero(prow[j]):
                    rowi[j] = field.sub(rowi[j], field.mul(factor, prow[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rref(m: Matrix) -> tuple:
    """Canonical reduced row echelon form: (Matrix, rank, pivot_columns)."""
    work = [row[:] for row in m.entries]
    rank, pivots = _rref_in_place(m.field, work)
    return Matrix(m.field, m.rows, m.cols, work), rank, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel(m: Matrix) -> "Subspace":
    """Canonical basis of the right null space; dim = cols - rank."""
    f = m.field
    red, rk, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for fc in free:
        v = [f.zero()] * m.cols
        v[fc] = f.one()
        for r_i, pc in enumerate(pivots):
            # pivot row r_i: x_pc + sum(red[r_i][j] x_j over free j) = 0
            v[pc] = f.neg(red.entries[r_i][fc])
        vectors.append(v)
    return Subspace.from_vectors(f, m.cols, vectors)


def solve(m: Matrix, rhs: list) -> list | None:
    """A particular solution of m x = rhs, or None when inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length %d != rows %d" % (len(rhs), m.rows))
    f = m.field
    work = [row[:] + [rhs[i]] for i, row in enumerate(m.entries)]
    if m.rows == 0:
        return [f.zero()] * m.cols
    _rref_in_place(f, work)
    sol = [f.zero()] * m.cols
    for row in work:
        lead = None
        for j in range(m.cols):
            if not f.is_zero(row[j]):
                lead = j
                break
        if lead is None:
            if not f.is_zero(row[m.cols]):
                return None
            continue
        # free variables stay 0, so x_lead = rhs-part
        sol[lead] = row[m.cols]
    # paranoia: verify by substitution
    if m.mat_vec(sol) != [f.add(x, f.zero()) for x in rhs]:
        check = m.mat_vec(sol)
        for a, b in zip(check, rhs):
            if not f.is_zero(f.sub(a, b)):
                return None
    return sol


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^ambient_dim with a canonical RREF basis.

    Equality of subspaces is literal equality of the stored bases.
    """

    field: Field
    ambient_dim: int
    basis: tuple  # tuple of coordinate tuples, RREF rows, no zero rows

    @staticmethod
    def from_vectors(field: Field, ambient_dim: int, vectors) -> "Subspace":
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient_dim")
        if rows:
            rank_, _ = _rref_in_place(field, rows)
            rows = rows[:rank_]
        return Subspace(field, ambient_dim, tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, ())

    @staticmethod
    def full(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(
            field, ambient_dim, Matrix.identity(field, ambient_dim).entries
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivot_map(self) -> dict:
        f = self.field
        piv = {}
        for i, row in enumerate(self.basis):
            for j, x in enumerate(row):
                if not f.is_zero(x):
                    piv[j] = i
                    break
        return piv

    def reduce(self, v: list) -> list:
        """Residue of v modulo this subspace (zero iff v is contained)."""
        f = self.field
        v = list(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length != ambient_dim")
        for row in self.basis:
            lead = next(j for j, x in enumerate(row) if not f.is_zero(x))
            c = v[lead]
            if f.is_zero(c):
                continue
            for j in range(lead, self.ambient_dim):
                if not f.is_zero(row[j]):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def contains(self, v) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(v))

    def coordinates_of(self, v) -> list | None:
        """Coefficients of v in the stored basis, or None if v is outside."""
        f = self.field
        v = list(v)
        coeffs = [f.zero()] * len(self.basis)
        for i, row in enumerate(self.basis):
            lead = next(j for j, x in enumerate(row) if not f.is_zero(x))
            c = v[lead]
            if f.is_zero(c):
                continue
            coeffs[i] = c
            for j in range(lead, self.ambient_dim):
                if not f.is_zero(row[j]):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        if any(not f.is_zero(x) for x in v):
            return None
        return coeffs

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Canonical intersection; dims satisfy the Grassmann formula."""
        self._check_compatible(other)
        f = self.field
        da, db = self.dim, other.dim
        if da == 0 or db == 0:
            return Subspace.zero(f, self.ambient_dim)
        # columns: [basis(self) | -basis(other)]; kernel rows give lambda|mu
        cols = da + db
        ents = []
        for coord in range(self.ambient_dim):
            row = [self.basis[i][coord] for i in range(da)]
            row += [f.neg(other.basis[j][coord]) for j in range(db)]
            ents.append(row)
        ker = kernel(Matrix(f, self.ambient_dim, cols, ents))
        vecs = []
        for kv in ker.basis:
            v = [f.zero()] * self.ambient_dim
            for i in range(da):
                c = kv[i]
                if f.is_zero(c):
                    continue
                for coord in range(self.ambient_dim):
                    v[coord] = f.add(v[coord], f.mul(c, self.basis[i][coord]))
            vecs.append(v)
        return Subspace.from_vectors(f, self.ambient_dim, vecs)

    def _check_compatible(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                "ambient dimension mismatch: %d vs %d"
                % (self.ambient_dim, other.ambient_dim)
            )


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def format_vector(field: Field, v) -> str:
    return "(" + ", ".join(field.format(x) for x in v) + ")"
