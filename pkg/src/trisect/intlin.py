"""Exact integer linear algebra on small dense matrices.

Everything here runs on Python's arbitrary-precision integers (exact
rationals where noted), so results are exact and overflow cannot happen.
The matrices in this package are tiny, at most a few dozen rows, so each
algorithm is a plain elementary-operation method with no asymptotic
cleverness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class IntMatrix:
    """An immutable matrix of Python ints.

    ``entries`` is a tuple of row tuples.  Instances compare and hash by
    value, so they can be used as dict keys and set members.  ``cols``
    must be passed explicitly when constructing a matrix with zero rows.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        packed = []
        for r in entries:
            row = tuple(r)
            for e in row:
                if not isinstance(e, int):
                    raise TypeError(f"matrix entries must be int, got {type(e).__name__}")
            packed.append(row)
        if packed:
            width = len(packed[0])
            if any(len(r) != width for r in packed):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} does not match row length {width}")
        else:
            width = 0 if cols is None else cols
            if width < 0:
                raise ValueError("cols must be nonnegative")
        object.__setattr__(self, "rows", len(packed))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", tuple(packed))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-e for e in r] for r in self.entries], cols=self.cols)

    def __mul__(self, scalar: int) -> "IntMatrix":
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix([[scalar * e for e in r] for r in self.entries], cols=self.cols)

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [tuple(r[j] for r in other.entries) for j in range(other.cols)]
        return IntMatrix(
            [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in self.entries],
            cols=other.cols,
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [tuple(r[j] for r in self.entries) for j in range(self.cols)], cols=self.rows
        )

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError(f"column mismatch {self.cols} vs {other.cols}")
        return IntMatrix(self.entries + other.entries, cols=self.cols)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "IntMatrix":
        """Rows r0:r1, columns c0:c1 (half-open)."""
        return IntMatrix([r[c0:c1] for r in self.entries[r0:r1]], cols=max(c1 - c0, 0))

    def is_zero(self) -> bool:
        return all(e == 0 for r in self.entries for e in r)

    def det(self) -> int:
        """Determinant by the Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # exact division: Bareiss guarantees prev divides this
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """Factorization d = u @ m @ v with u, v unimodular and d in Smith form."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i, i] for i in range(min(self.d.rows, self.d.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for e in self.diagonal if e)


def snf(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Returns a decomposition with ``d == u @ m @ v`` where u and v are
    unimodular and d is diagonal with nonnegative entries satisfying
    d[0] | d[1] | ... (zeros last).  The pivot at each step is a
    smallest-magnitude nonzero entry of the trailing block, which keeps
    intermediate entries small at these sizes.  Division by the pivot
    leaves remainders strictly smaller than it, so each inner loop
    terminates; a trailing entry not divisible by the pivot is fixed by
    adding its row into the pivot row and re-reducing.
    """
    nr, nc = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        # col_i += q * col_j
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    limit = min(nr, nc)
    while t < limit:
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = a[i][j]
                if e != 0 and (piv is None or abs(e) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            restart = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q, r = divmod(a[i][t], a[t][t])
                    add_row(i, t, -q)
                    if r:
                        # the remainder is a strictly smaller pivot
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, nc):
                if a[t][j]:
                    q, r = divmod(a[t][j], a[t][t])
                    add_col(j, t, -q)
                    if r:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            break

        p = a[t][t]
        offender = None
        for i in range(t + 1, nr):
            if any(a[i][j] % p for j in range(t + 1, nc)):
                offender = i
                break
        if offender is not None:
            # pull the offending row into the pivot row; re-reducing
            # shrinks the pivot toward the gcd of the trailing block
            add_row(t, offender, 1)
            continue
        t += 1

    return SmithDecomposition(
        IntMatrix(a, cols=nc), IntMatrix(u, cols=nr), IntMatrix(v, cols=nc)
    )


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Diagonal of the Smith form of m (length min(rows, cols), zeros last)."""
    return snf(m).diagonal


def is_primitive(m: IntMatrix) -> bool:
    """Whether the rows of m are a basis of a direct summand of Z^cols.

    Requires rows <= cols.  True iff m has full row rank and every
    invariant factor equals 1; equivalently the row span is saturated
    (no vector outside has a multiple inside) with the rows as a basis.
    """
    if m.rows > m.cols:
        raise ValueError("is_primitive expects rows <= cols")
    return all(e == 1 for e in snf(m).diagonal)


def left_kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the saturated left kernel {v in Z^rows : v @ m = 0}, as rows.

    With d = u @ m @ v, the rows of u at positions where the diagonal of
    d vanishes (or past its end) span exactly the integer kernel, and the
    span is saturated because u is unimodular.  The rows are normalized
    to row Hermite form so the result is canonical.  A trivial kernel
    gives a 0 x rows matrix.
    """
    dec = snf(m)
    diag = dec.diagonal
    rows = [dec.u.row(i) for i in range(m.rows) if i >= len(diag) or diag[i] == 0]
    return _hermite(rows, m.rows)


def _hermite(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row Hermite normal form of independent rows: positive pivots in
    staircase position, entries above each pivot reduced into [0, pivot)."""
    work = [list(r) for r in rows]
    nr = len(work)
    pr = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(pr, nr) if work[i][col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(work[i][col]))
            p = nz[0]
            for i in nz[1:]:
                q = work[i][col] // work[p][col]
                work[i] = [x - q * y for x, y in zip(work[i], work[p])]
        nz = [i for i in range(pr, nr) if work[i][col]]
        if not nz:
            continue
        work[pr], work[nz[0]] = work[nz[0]], work[pr]
        if work[pr][col] < 0:
            work[pr] = [-x for x in work[pr]]
        for i in range(pr):
            q = work[i][col] // work[pr][col]
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[pr])]
        pr += 1
    return IntMatrix(work[:pr], cols=ncols)


Rational = Union[int, Fraction]


def symmetric_signature(s: IntMatrix | Sequence[Sequence[Rational]]) -> tuple[int, int, int]:
    """Exact inertia (n_plus, n_minus, n_zero) of a symmetric rational form.

    Accepts an IntMatrix or any square grid of ints/Fractions.  Works by
    congruence elimination over the rationals: a nonzero diagonal entry is
    split off directly; if every active diagonal entry vanishes but some
    pairing b = s[i][j] is nonzero, the congruence v_i += v_j makes the
    diagonal entry 2b nonzero, and the hyperbolic plane then splits off as
    one positive and one negative square.  All-zero remainder counts as
    n_zero.  No floating point is involved.
    """
    if isinstance(s, IntMatrix):
        grid = [[Fraction(e) for e in r] for r in s.entries]
    else:
        grid = [[Fraction(e) for e in r] for r in s]
    n = len(grid)
    if any(len(r) != n for r in grid):
        raise ValueError("form matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if grid[i][j] != grid[j][i]:
                raise ValueError("form matrix must be symmetric")

    n_pos = n_neg = n_zero = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if grid[i][i] != 0), None)
        if p is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and grid[i][j] != 0),
                None,
            )
            if pair is None:
                n_zero += len(active)
                break
            i0, j0 = pair
            for k in active:
                grid[i0][k] += grid[j0][k]
            for k in active:
                grid[k][i0] += grid[k][j0]
            continue
        d = grid[p][p]
        if d > 0:
            n_pos += 1
        else:
            n_neg += 1
        active.remove(p)
        col = [grid[i][p] for i in active]
        for ii, i in enumerate(active):
            if col[ii] == 0:
                continue
            for jj, j in enumerate(active):
                grid[i][j] -= col[ii] * col[jj] / d
    return (n_pos, n_neg, n_zero)


def random_unimodular(n: int, seed: int, op_count: int) -> IntMatrix:
    """Deterministic pseudo-random unimodular matrix.

    Applies op_count elementary row operations (add a small multiple of
    one row to another, swap two rows, negate a row) to the identity,
    drawn from random.Random(seed).  The same (n, seed, op_count) always
    produces the same matrix, and |det| = 1 by construction.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    if op_count < 0:
        raise ValueError("op_count must be >= 0")
    rng = random.Random(seed)
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(op_count):
        if n == 1:
            rows[0] = [-x for x in rows[0]]
            continue
        roll = rng.random()
        i = rng.randrange(n)
        j = (i + 1 + rng.randrange(n - 1)) % n
        if roll < 0.7:
            c = rng.choice((-2, -1, 1, 2))
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif roll < 0.85:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-x for x in rows[i]]
    return IntMatrix(rows, cols=n)
