"""Exact square matrices: determinant, adjugate, characteristic polynomial, group predicates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import DimensionMismatch, NotInvertible, RingMismatch
from .rings import DualNumbers, PrimeField, Rationals, RingDescriptor, Scalar, parse_scalar, render_scalar


@dataclass(frozen=True)
class SquareMatrix:
    ring: RingDescriptor
    entries: tuple  # tuple of row tuples of Scalar

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
            for e in row:
                if e.ring != self.ring:
                    raise RingMismatch("entry ring does not match matrix ring")

    @property
    def n(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(ring: RingDescriptor, rows) -> "SquareMatrix":
        """Rows of Scalars or ints (ints are coerced into the ring)."""
        conv = []
        for row in rows:
            conv.append(
                tuple(e if isinstance(e, Scalar) else ring.from_int(e) for e in row)
            )
        return SquareMatrix(ring, tuple(conv))

    @staticmethod
    def identity(ring: RingDescriptor, n: int) -> "SquareMatrix":
        return SquareMatrix.from_rows(
            ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(ring: RingDescriptor, n: int) -> "SquareMatrix":
        return SquareMatrix.from_rows(ring, [[0] * n for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n}x{self.n} times {other.n}x{other.n}")
        n = self.n
        zero = self.ring.zero
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return SquareMatrix(self.ring, tuple(rows))

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.n != other.n:
            raise DimensionMismatch("size mismatch in matrix addition")
        return SquareMatrix(
            self.ring,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        return self + other.scaled(self.ring.from_int(-1))

    def scaled(self, c: Scalar) -> "SquareMatrix":
        return SquareMatrix(
            self.ring, tuple(tuple(c * e for e in row) for row in self.entries)
        )

    def __pow__(self, k: int) -> "SquareMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = SquareMatrix.identity(self.ring, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> Scalar:
        acc = self.ring.zero
        for i in range(self.n):
            acc = acc + self.entries[i][i]
        return acc

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(self.ring, tuple(zip(*self.entries)))

    def inverse(self) -> "SquareMatrix":
        d = det(self)
        if not d.is_invertible():
            raise NotInvertible("matrix determinant is not a unit")
        return adjugate(self).scaled(d.inv())

    def map_entries(self, fn, new_ring: RingDescriptor) -> "SquareMatrix":
        return SquareMatrix(
            new_ring, tuple(tuple(fn(e) for e in row) for row in self.entries)
        )

    def __str__(self):
        return "[" + ", ".join(
            "[" + ", ".join(render_scalar(e) for e in row) + "]" for row in self.entries
        ) + "]"


# ---------------------------------------------------------------------------
# determinant / adjugate / charpoly


def _det_cofactor(m: SquareMatrix) -> Scalar:
    n = m.n
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if n == 3:
        a, b, c = m.entries[0]
        d, e, f = m.entries[1]
        g, h, i = m.entries[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    raise ValueError("cofactor path is for n <= 3")


def _det_leibniz(m: SquareMatrix) -> Scalar:
    """Permutation-sum determinant; valid over any commutative ring."""
    n = m.n
    acc = m.ring.zero
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # count inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = m.ring.one if sign > 0 else m.ring.from_int(-1)
        for i in range(n):
            term = term * m[i, perm[i]]
        acc = acc + term
    return acc


def _det_bareiss(m: SquareMatrix) -> Scalar:
    """Fraction-free elimination; exact division keeps entries small over Q."""
    n = m.n
    a = [list(row) for row in m.entries]
    sign = 1
    prev = m.ring.one
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, n) if not a[i][k].is_zero()), None
            )
            if pivot_row is None:
                return m.ring.zero
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = m.ring.zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _det_elimination(m: SquareMatrix) -> Scalar:
    """Plain Gaussian elimination over a field."""
    n = m.n
    a = [list(row) for row in m.entries]
    d = m.ring.one
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if pivot_row is None:
            return m.ring.zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            d = -d
        d = d * a[k][k]
        inv = a[k][k].inv()
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            for j in range(k, n):
                a[i][j] = a[i][j] - factor * a[k][j]
    return d


def det(m: SquareMatrix) -> Scalar:
    if m.n <= 3:
        return _det_cofactor(m)
    if isinstance(m.ring, PrimeField):
        return _det_elimination(m)
    if isinstance(m.ring, Rationals):
        return _det_bareiss(m)
    if m.ring.is_field():
        return _det_elimination(m)
    return _det_leibniz(m)  # dual numbers have zero divisors


def _minor(m: SquareMatrix, i: int, j: int) -> SquareMatrix:
    rows = [
        tuple(e for jj, e in enumerate(row) if jj != j)
        for ii, row in enumerate(m.entries)
        if ii != i
    ]
    return SquareMatrix(m.ring, tuple(rows))


def adjugate(m: SquareMatrix) -> SquareMatrix:
    """The matrix M* with M M* = M* M = det(M) I.  Entries are (n-1)-minors."""
    n = m.n
    if n == 1:
        return SquareMatrix.identity(m.ring, 1)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            c = det(_minor(m, j, i))  # transposed cofactor
            if (i + j) % 2 == 1:
                c = -c
            row.append(c)
        rows.append(tuple(row))
    return SquareMatrix(m.ring, tuple(rows))


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Signed elementary symmetric functions of the eigenvalues: chi[0] = trace, chi[-1] = det."""

    chi: tuple


def _poly_mul(p, q, ring):
    out = [ring.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poly_add(p, q, ring):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else ring.zero
        b = q[i] if i < len(q) else ring.zero
        out.append(a + b)
    return out


def _poly_det(rows, ring):
    """Determinant of a matrix of polynomials (coeff lists, low degree first)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = [ring.zero]
    for j in range(n):
        minor = [
            [row[jj] for jj in range(n) if jj != j] for row in rows[1:]
        ]
        term = _poly_mul(rows[0][j], _poly_det(minor, ring), ring)
        if j % 2 == 1:
            term = [-c for c in term]
        acc = _poly_add(acc, term, ring)
    return acc


def charpoly(m: SquareMatrix) -> CharPolyCoeffs:
    """chi_i as signed elementary symmetric functions, so chi_1 = trace, chi_n = det."""
    ring = m.ring
    n = m.n
    lam = [ring.zero, ring.one]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(_poly_add(lam, [-m[i, j]], ring))
            else:
                row.append([-m[i, j]])
        rows.append(row)
    p = _poly_det(rows, ring)  # det(lambda I - M), monic of degree n
    p = p + [ring.zero] * (n + 1 - len(p))
    chi = []
    for i in range(1, n + 1):
        c = p[n - i]  # coefficient of lambda^(n-i)
        if i % 2 == 1:
            c = -c
        chi.append(c)
    return CharPolyCoeffs(tuple(chi))


# ---------------------------------------------------------------------------
# group predicates


def is_special(m: SquareMatrix) -> bool:
    return det(m) == m.ring.one


def is_unipotent(m: SquareMatrix) -> bool:
    """(M - I)^n = 0; correct over every ring."""
    d = m - SquareMatrix.identity(m.ring, m.n)
    return d ** m.n == SquareMatrix.zero(m.ring, m.n)


def is_central_sl2(m: SquareMatrix) -> bool:
    if m.n != 2:
        raise DimensionMismatch("is_central_sl2 is for 2x2 matrices")
    i2 = SquareMatrix.identity(m.ring, 2)
    return m == i2 or m == i2.scaled(m.ring.from_int(-1))


def is_scalar_matrix(m: SquareMatrix) -> bool:
    c = m[0, 0]
    ident = SquareMatrix.identity(m.ring, m.n)
    return m == ident.scaled(c)


# ---------------------------------------------------------------------------
# sampling and rank


def random_sl2(ring: RingDescriptor, rng) -> SquareMatrix:
    """det-1 matrix: sample a, b, c and solve d; retry while a is not invertible."""
    while True:
        a = ring.random(rng)
        b = ring.random(rng)
        c = ring.random(rng)
        if a.is_invertible():
            d = (ring.one + b * c) / a
            return SquareMatrix.from_rows(ring, [[a, b], [c, d]])


def rank(rows, ring: RingDescriptor) -> int:
    """Rank of a list of Scalar rows over a field."""
    if not rows:
        return 0
    a = [list(r) for r in rows]
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if not a[i][col].is_zero()), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][col].inv()
        for i in range(len(a)):
            if i != r and not a[i][col].is_zero():
                factor = a[i][col] * inv
                for j in range(col, ncols):
                    a[i][j] = a[i][j] - factor * a[r][j]
        r += 1
        if r == len(a):
            break
    return r


# ---------------------------------------------------------------------------
# JSON literals


def matrix_from_json(ring: RingDescriptor, rows) -> SquareMatrix:
    """Row-major arrays of scalar literal strings (or ints)."""
    conv = []
    for row in rows:
        conv.append(
            [
                parse_scalar(ring, e) if isinstance(e, str) else ring.from_int(int(e))
                for e in row
            ]
        )
    return SquareMatrix.from_rows(ring, conv)


def matrix_to_json(m: SquareMatrix):
    return [[render_scalar(e) for e in row] for row in m.entries]


def lift_matrix(m: SquareMatrix, dual: DualNumbers) -> SquareMatrix:
    return m.map_entries(dual.lift, dual)


def real_part_matrix(m: SquareMatrix) -> SquareMatrix:
    dual = m.ring
    return m.map_entries(dual.real_part, dual.base)


def eps_part_matrix(m: SquareMatrix) -> SquareMatrix:
    dual = m.ring
    return m.map_entries(dual.eps_part, dual.base)
