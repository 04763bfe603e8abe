"""Exact polynomial and matrix algebra over a :class:`FiniteField`.

Entries are the field's int encodings.  Subspaces are passed around as
matrices whose *columns* are a basis, kept in reduced column-echelon form
(equivalently: the transpose is in reduced row-echelon form) so that equal
subspaces always print identically.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .fields import FiniteField

# exhaustive root scan up to this field size
ROOT_SCAN_LIMIT = 1 << 16


class Poly:
    """Univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int]):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, field, deg, c=1):
        return cls(field, [0] * deg + [c])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls(field, [1])
        for r in roots:
            f = f * cls(field, [field.neg(r), 1])
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c) if self.field.k == 1 else str(list(self.field.digits(c)))
            if i == 0:
                terms.append(cs)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(other, c) for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def __pow__(self, e: int):
        result = Poly(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly"):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = other.degree
        inv = F.inv(other.lead)
        quot = [0] * max(len(r) - dg, 1)
        while len(r) - 1 >= dg and r:
            c = F.mul(r[-1], inv)
            shift = len(r) - 1 - dg
            quot[shift] = c
            for i, g in enumerate(other.coeffs):
                r[shift + i] = F.sub(r[shift + i], F.mul(c, g))
            while r and r[-1] == 0:
                r.pop()
        return Poly(F, quot), Poly(F, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(inv, c) for c in self.coeffs])

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def map(self, table: Sequence[int], K: FiniteField) -> "Poly":
        """Push coefficients through a field embedding table."""
        return Poly(K, [table[c] for c in self.coeffs])

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = Poly(self.field, [1]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) is monic f."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def derivative(f: Poly) -> Poly:
    F = f.field
    return Poly(F, [F.mul(i % F.p, c) for i, c in enumerate(f.coeffs)][1:])


def is_squarefree(f: Poly) -> bool:
    return poly_gcd(f, derivative(f)).degree == 0


def factor_degrees(f: Poly) -> dict[int, int]:
    """Degree -> number of distinct monic irreducible factors of that degree.

    Uses gcd(f, t^(q^d) - t), which collects every irreducible factor whose
    degree divides d exactly once, so repeated factors need no special care.
    """
    F = f.field
    f = f.monic()
    counts: dict[int, int] = {}
    if f.degree < 1:
        return counts
    t = Poly(F, [0, 1])
    h = t
    d = 0
    found = 0
    while found < f.degree and d < f.degree:
        d += 1
        h = h.powmod(F.q, f)
        g = poly_gcd(f, h - t)
        below = sum(e * n for e, n in counts.items() if d % e == 0)
        n = (g.degree - below) // d
        if n:
            counts[d] = n
            found += n * d
    return counts


def roots_in_field(f: Poly, K: FiniteField, embed: Sequence[int] | None = None) -> list[int]:
    """Roots of f in K with multiplicity, ascending by int encoding.

    ``embed`` maps f's coefficients into K when f lives over a subfield.
    """
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    g = f if f.field is K else f.map(embed or f.field.embedding(K), K)
    if K.q <= ROOT_SCAN_LIMIT:
        distinct = [x for x in K.elements() if g(x) == 0]
    else:
        distinct = sorted(_edf_roots(g, K))
    out = []
    for r in distinct:
        lin = Poly(K, [K.neg(r), 1])
        h = g
        while True:
            quo, rem = h.divmod(lin)
            if not rem.is_zero():
                break
            out.append(r)
            h = quo
    return out


def _edf_roots(g: Poly, K: FiniteField) -> set[int]:
    """Distinct roots by gcd with t^q - t and random equal-degree splitting."""
    t = Poly(K, [0, 1])
    g = g.monic()
    h = poly_gcd(g, t.powmod(K.q, g) - t)
    rng = random.Random(0)
    roots: set[int] = set()
    stack = [h]
    while stack:
        h = stack.pop()
        if h.degree == 0:
            continue
        if h.degree == 1:
            roots.add(K.neg(h.monic().coeffs[0]))
            continue
        while True:
            # a random polynomial below deg h; translates t + c alone never
            # separate roots whose difference has trace zero in characteristic 2
            a = Poly(K, [rng.randrange(K.q) for _ in range(h.degree)])
            if a.degree < 1:
                continue
            if K.p == 2:
                # trace map splits in characteristic 2
                s, cur = a % h, a % h
                for _ in range(K.k - 1):
                    cur = (cur * cur) % h
                    s = s + cur
                w = s
            else:
                w = a.powmod((K.q - 1) // 2, h) - Poly(K, [1])
            d = poly_gcd(h, w) if not w.is_zero() else h
            if 0 < d.degree < h.degree:
                stack.extend([d, h // d])
                break
    return roots


# --- matrices ---

class Matrix:
    """Dense matrix over a finite field, stored as a tuple of row tuples."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FiniteField, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, field, m, n):
        return cls(field, [[0] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, cols, nrows):
        cols = [list(c) for c in cols]
        if not cols:
            return cls(field, [[] for _ in range(nrows)], 0) if nrows else cls(field, [], 0)
        return cls(field, [[c[i] for c in cols] for i in range(nrows)])

    @classmethod
    def scalar(cls, field, n, c):
        return cls(field, [[c if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def columns(self) -> list[list[int]]:
        return [[r[j] for r in self.rows] for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.columns(), self.nrows)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        F = self.field
        fmt = (lambda a: str(a)) if F.k == 1 else (lambda a: str(list(F.digits(a))))
        body = "\n".join(" ".join(fmt(a) for a in r) for r in self.rows)
        return f"Matrix over {F!r} {self.nrows}x{self.ncols}\n{body}"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_scalar(self) -> int | None:
        """The scalar c if self == c*I, else None."""
        if not self.is_square or self.nrows == 0:
            return None
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a != (c if i == j else 0):
                    return None
        return c

    def __add__(self, other):
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        F = self.field
        return Matrix(F, [[F.neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.field, [self.field.scale(c, list(r)) for r in self.rows], self.ncols)

    def __matmul__(self, other):
        F = self.field
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return Matrix(F, [[F.dot(r, c) for c in cols] for r in self.rows], other.ncols)
        return [F.dot(r, other) for r in self.rows]

    def __pow__(self, e: int):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def commutator(self, other):
        return self @ other - other @ self

    def map(self, table: Sequence[int], K: FiniteField) -> "Matrix":
        return Matrix(K, [[table[a] for a in r] for r in self.rows], self.ncols)

    def extend(self, K: FiniteField) -> "Matrix":
        """The same matrix viewed over an extension field K."""
        if K is self.field:
            return self
        return self.map(self.field.embedding(K), K)

    def hstack(self, other):
        return Matrix(self.field, [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other):
        if not self.nrows:
            return other
        if not other.nrows:
            return self
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def submatrix(self, rows, cols):
        return Matrix(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def eval_poly(self, f: Poly) -> "Matrix":
        """f(self) by Horner's rule; f must live over self.field."""
        n = self.nrows
        F = self.field
        acc = Matrix.zeros(F, n, n)
        for c in reversed(f.coeffs):
            acc = acc @ self + Matrix.scalar(F, n, c)
        return acc

    def rank(self) -> int:
        return len(rref(self.field, [list(r) for r in self.rows])[1])

    def kernel(self) -> "Matrix":
        return kernel(self)

    def inverse(self) -> "Matrix":
        F = self.field
        n = self.nrows
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = rref(F, aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix(F, [r[n:] for r in red[:n]], n)


def rref(F: FiniteField, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form (nonzero rows only) and pivot columns."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = F.scale(inv, rows[r])
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = F.axpy(rows[i], F.neg(rows[i][c]), rows[r])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def span(F: FiniteField, vectors, dim: int) -> Matrix:
    """Canonical basis matrix (columns) of the span of the given vectors."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return Matrix.from_columns(F, [], dim)
    red, _ = rref(F, vecs)
    return Matrix.from_columns(F, red, dim)


def kernel(A: Matrix) -> Matrix:
    """Null space basis as columns, reduced column-echelon, pivots ascending."""
    F = A.field
    n = A.ncols
    if A.nrows == 0:
        return Matrix.identity(F, n)
    red, piv = rref(F, [list(r) for r in A.rows])
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, piv):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return span(F, basis, n)


def stable_kernel(A: Matrix) -> tuple[Matrix, int]:
    """ker A^r for the least r >= 1 with ker A^r = ker A^(r+1)."""
    if not A.is_square:
        raise ValueError("stable kernel of a non-square matrix")
    power = A
    K = kernel(power)
    r = 1
    while True:
        power = power @ A
        K2 = kernel(power)
        if K2.ncols == K.ncols:
            return K, r
        K, r = K2, r + 1


def min_poly(A: Matrix) -> Poly:
    """Monic minimal polynomial via the first linear dependence among I, A, A^2, ..."""
    if not A.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    F = A.field
    n = A.nrows
    if n == 0:
        return Poly(F, [1])
    # reduced rows paired with their expression in powers of A
    basis: list[tuple[int, list[int], list[int]]] = []
    P = Matrix.identity(F, n)
    for k in range(n + 1):
        v = [a for r in P.rows for a in r]
        expr = [0] * (k + 1)
        expr[k] = 1
        for pc, bv, be in basis:
            c = v[pc]
            if c:
                neg = F.neg(c)
                v = F.axpy(v, neg, bv)
                be = be + [0] * (len(expr) - len(be))
                expr = F.axpy(expr, neg, be)
        pc = next((j for j, a in enumerate(v) if a), None)
        if pc is None:
            return Poly(F, expr).monic()
        inv = F.inv(v[pc])
        basis.append((pc, F.scale(inv, v), F.scale(inv, expr)))
        P = P @ A
    raise AssertionError("no dependence found within n+1 powers")  # Cayley-Hamilton


def intersect(A: Matrix, B: Matrix) -> Matrix:
    """Intersection of two column-spanned subspaces of the same ambient space."""
    F = A.field
    d = A.nrows
    if A.ncols == 0 or B.ncols == 0:
        return Matrix.from_columns(F, [], d)
    # solve A x = B y
    M = A.hstack(-B)
    ker = kernel(M)
    vecs = [A @ col[: A.ncols] for col in ker.columns()]
    return span(F, vecs, d)


def in_span(basis: Matrix, v: Sequence[int]) -> bool:
    """Whether v lies in the column span of basis."""
    F = basis.field
    if basis.ncols == 0:
        return not any(v)
    red, _ = rref(F, basis.columns())
    return len(rref(F, red + [list(v)])[0]) == len(red)


def solve_right(A: Matrix, b: Sequence[int]) -> list[int] | None:
    """Some x with A x = b, or None."""
    F = A.field
    aug = [list(r) + [bi] for r, bi in zip(A.rows, b)]
    red, piv = rref(F, aug)
    if piv and piv[-1] == A.ncols:
        return None
    x = [0] * A.ncols
    for row, pc in zip(red, piv):
        x[pc] = row[-1]
    return x
