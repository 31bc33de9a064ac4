"""The standard symplectic lattice Z^(2g) and Lagrangian triples.

Coordinates use the ordered basis (x_1, ..., x_g, y_1, ..., y_g) of the
first homology of the closed genus-g surface, with intersection form
omega(x_i, y_j) = delta_ij and omega(x_i, x_j) = omega(y_i, y_j) = 0.
Vectors are rows and transformations act on the right, v -> v @ s.

The Maslov index of a Lagrangian triple (l1, l2, l3) is the signature of
the symmetric bilinear form psi((a, b, c), (a', b', c')) = omega(a, b')
on the solution lattice w = {(a, b, c) in l1 x l2 x l3 : a + b + c = 0}.
With these conventions the genus-1 triple spanned by (1,0), (0,1), (1,1)
has index +1, which normalizes the sign for the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import random

from .intlin import IntMatrix, is_primitive, left_kernel_basis, symmetric_signature


@dataclass(frozen=True)
class SymplecticLattice:
    """The lattice Z^(2g) with the standard symplectic form."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def form_matrix(self) -> IntMatrix:
        """The Gram matrix j of omega: omega(u, v) = u @ j @ v^T."""
        g = self.genus
        rows = [[0] * (2 * g) for _ in range(2 * g)]
        for i in range(g):
            rows[i][g + i] = 1
            rows[g + i][i] = -1
        return IntMatrix(rows, cols=2 * g)

    def x(self, i: int) -> tuple[int, ...]:
        """The basis vector x_(i+1), 0-based."""
        if not 0 <= i < self.genus:
            raise IndexError("x index out of range")
        return _unit(self.dim, i)

    def y(self, i: int) -> tuple[int, ...]:
        """The basis vector y_(i+1), 0-based."""
        if not 0 <= i < self.genus:
            raise IndexError("y index out of range")
        return _unit(self.dim, self.genus + i)


def _unit(dim: int, pos: int) -> tuple[int, ...]:
    return tuple(int(k == pos) for k in range(dim))


def omega(u: Sequence[int], v: Sequence[int]) -> int:
    """The symplectic pairing of two coordinate rows of equal even length."""
    if len(u) != len(v):
        raise ValueError("vectors live in different lattices")
    if len(u) % 2:
        raise ValueError("vectors must have even length")
    g = len(u) // 2
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def is_lagrangian(basis: IntMatrix) -> bool:
    """Whether the rows of ``basis`` span a Lagrangian sublattice.

    ``basis`` must be g x 2g.  True iff the rows are a primitive system
    of rank g (a basis of a saturated sublattice) and pairwise
    omega-orthogonal.
    """
    if basis.cols % 2:
        raise ValueError("ambient rank must be even")
    if 2 * basis.rows != basis.cols:
        raise ValueError(f"expected {basis.cols // 2} rows, got {basis.rows}")
    if not is_primitive(basis):
        return False
    rows = basis.entries
    return all(
        omega(rows[i], rows[j]) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


@dataclass(frozen=True)
class LagrangianSublattice:
    """A Lagrangian direct summand of Z^(2g), recorded by a basis.

    ``basis`` is g x 2g; construction fails unless the rows really are a
    primitive isotropic system of full rank.
    """

    genus: int
    basis: IntMatrix

    def __post_init__(self):
        if self.basis.rows != self.genus or self.basis.cols != 2 * self.genus:
            raise ValueError(
                f"basis shape {self.basis.shape} does not match genus {self.genus}"
            )
        if not is_lagrangian(self.basis):
            raise ValueError("rows are not a Lagrangian basis")

    @classmethod
    def span(cls, *vectors: Sequence[int]) -> "LagrangianSublattice":
        """Build from g row vectors of length 2g; span() is the genus-0 lattice."""
        if not vectors:
            return cls(0, IntMatrix([], cols=0))
        cols = len(vectors[0])
        return cls(cols // 2, IntMatrix(vectors, cols=cols))

    def transform(self, s: IntMatrix) -> "LagrangianSublattice":
        """Image under a symplectic matrix acting on the right."""
        if not is_symplectic(s):
            raise ValueError("transformation is not symplectic")
        return LagrangianSublattice(self.genus, self.basis @ s)


def _rows_of(obj: "LagrangianSublattice | IntMatrix") -> IntMatrix:
    return obj.basis if isinstance(obj, LagrangianSublattice) else obj


def pairing_matrix(left, right) -> IntMatrix:
    """Matrix of omega between two row families: entry (i,j) = omega(l_i, r_j).

    Accepts LagrangianSublattice or plain IntMatrix arguments; the two
    must share an ambient lattice.
    """
    a = _rows_of(left)
    b = _rows_of(right)
    if a.cols != b.cols:
        raise ValueError("ambient genus mismatch")
    if a.cols % 2:
        raise ValueError("ambient rank must be even")
    return IntMatrix(
        [[omega(ra, rb) for rb in b.entries] for ra in a.entries], cols=b.rows
    )


def is_symplectic(s: IntMatrix) -> bool:
    """Whether s preserves omega under the right action v -> v @ s."""
    if s.rows != s.cols:
        raise ValueError("matrix must be square")
    if s.rows % 2:
        raise ValueError("matrix rank must be even")
    j = SymplecticLattice(s.rows // 2).form_matrix()
    return s @ j @ s.transpose() == j


def maslov_index(l1, l2, l3) -> int:
    """Maslov index of a Lagrangian triple.

    Arguments may be LagrangianSublattice values or g x 2g IntMatrix
    bases (which are then checked).  The index is the signature of the
    symmetric form psi((a,b,c), (a',b',c')) = omega(a, b') on the lattice
    w = {(a,b,c) : a + b + c = 0}; w is realized as the left kernel of
    the stacked basis matrix [b1; b2; b3], on which psi has Gram matrix
    w_a @ q12 @ w_b^T for the three column blocks of the kernel rows.
    """
    ls = [_as_lagrangian(x) for x in (l1, l2, l3)]
    g = ls[0].genus
    if any(l.genus != g for l in ls):
        raise ValueError("genus mismatch between Lagrangians")
    if g == 0:
        return 0
    stacked = ls[0].basis.vstack(ls[1].basis).vstack(ls[2].basis)
    ker = left_kernel_basis(stacked)
    if ker.rows == 0:
        return 0
    part_a = ker.submatrix(0, ker.rows, 0, g)
    part_b = ker.submatrix(0, ker.rows, g, 2 * g)
    q12 = pairing_matrix(ls[0].basis, ls[1].basis)
    gram = part_a @ q12 @ part_b.transpose()
    assert gram == gram.transpose(), "triple form must be symmetric"
    n_pos, n_neg, _ = symmetric_signature(gram)
    return n_pos - n_neg


def _as_lagrangian(x) -> LagrangianSublattice:
    if isinstance(x, LagrangianSublattice):
        return x
    if isinstance(x, IntMatrix):
        if x.cols % 2:
            raise ValueError("ambient rank must be even")
        return LagrangianSublattice(x.cols // 2, x)
    raise TypeError(f"expected LagrangianSublattice or IntMatrix, got {type(x).__name__}")


def random_symplectic(genus: int, seed: int, count: int) -> IntMatrix:
    """Deterministic product of ``count`` random symplectic transvections.

    A transvection v -> v + c * omega(v, u) * u is symplectic for every
    integer vector u and integer c; its matrix under the right action is
    i + c * (j @ u^T @ u).  Entries of u are drawn from {-1, 0, 1} and c
    from small integers, so products stay well-conditioned for tests.
    """
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(seed)
    dim = 2 * genus
    s = IntMatrix.identity(dim)
    if genus == 0:
        return s
    j = SymplecticLattice(genus).form_matrix()
    for _ in range(count):
        u = [rng.randrange(-1, 2) for _ in range(dim)]
        if all(e == 0 for e in u):
            u[rng.randrange(dim)] = 1
        c = rng.choice((1, 1, -1, -1, 2))
        outer = IntMatrix([[a * b for b in u] for a in u], cols=dim)
        s = s @ (IntMatrix.identity(dim) + c * (j @ outer))
    return s
