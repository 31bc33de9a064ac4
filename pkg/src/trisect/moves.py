"""Equivalence moves on trisection diagrams and a bounded equivalence search.

The moves that preserve the presented 4-manifold are:

  * handle slides of one curve over another within a single system,
    which act on the class matrices as integer row operations;
  * stabilization, connected sum with the standard genus-3 diagram of
    the 4-sphere, taking (g, k) to (g + 3, k + 1);
  * surface diffeomorphisms fixing the orientation, which act on
    homology through Sp(2g, Z) on the right;
  * connected sum of two diagrams and orientation reversal.

``compare`` searches the handle-slide orbit only, breadth-first with a
bounded budget: it never stabilizes and never searches the
diffeomorphism orbit, so its negative answers are "distinct by
invariant" (a certificate) or "unknown" (budget exhausted), never a
claim of inequivalence.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Iterator

from .diagram import (
    LABELS,
    CurveSystem,
    TrisectionDiagram,
    euler_characteristic,
    first_homology,
    parameters,
    require_valid,
    signature,
)
from .intlin import IntMatrix
from .symplectic import is_symplectic


@dataclass(frozen=True)
class SlideMove:
    """Slide curve ``target`` over curve ``source`` in one system.

    Row operation: row[target] += sign * row[source], with sign +1 or -1.
    Indices are 0-based here; the CLI converts from 1-based.
    """

    system: str
    target: int
    source: int
    sign: int

    def __post_init__(self):
        if self.system not in LABELS:
            raise ValueError(f"system must be one of {LABELS}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.target < 0 or self.source < 0:
            raise ValueError("curve indices must be nonnegative")
        if self.target == self.source:
            raise ValueError("cannot slide a curve over itself")

    def inverse(self) -> "SlideMove":
        return dataclasses.replace(self, sign=-self.sign)


def handle_slide(d: TrisectionDiagram, move: SlideMove) -> TrisectionDiagram:
    """Apply one slide; the inverse move restores the diagram exactly."""
    g = d.genus
    if move.target >= g or move.source >= g:
        raise IndexError(f"slide indices out of range for genus {g}")
    sys = d.system(move.system)
    rows = [list(r) for r in sys.classes.entries]
    rows[move.target] = [
        a + move.sign * b for a, b in zip(rows[move.target], rows[move.source])
    ]
    new_sys = CurveSystem(g, IntMatrix(rows, cols=2 * g), move.system)
    return dataclasses.replace(d, **{move.system: new_sys}, name=None)


def direct_sum(
    d1: TrisectionDiagram, d2: TrisectionDiagram, name: str | None = None
) -> TrisectionDiagram:
    """Block direct sum of two diagrams, with no validity requirement.

    The genus adds; each class of d1 keeps its coordinates in the first
    blocks of x and y, each class of d2 moves to the complementary
    blocks.  connect_sum is this plus the requirement that both inputs
    are valid.
    """
    g1, g2 = d1.genus, d2.genus
    g = g1 + g2

    def embed(s1: CurveSystem, s2: CurveSystem, label: str) -> CurveSystem:
        rows = []
        for r in s1.classes.entries:
            rows.append(r[:g1] + (0,) * g2 + r[g1:] + (0,) * g2)
        for r in s2.classes.entries:
            rows.append((0,) * g1 + r[:g2] + (0,) * g1 + r[g2:])
        return CurveSystem(g, IntMatrix(rows, cols=2 * g), label)

    return TrisectionDiagram(
        g,
        embed(d1.alpha, d2.alpha, "alpha"),
        embed(d1.beta, d2.beta, "beta"),
        embed(d1.gamma, d2.gamma, "gamma"),
        name=name,
    )


def connect_sum(d1: TrisectionDiagram, d2: TrisectionDiagram) -> TrisectionDiagram:
    """Connected sum of two valid diagrams; (g, k) and chi behave additively:
    g = g1 + g2, k = k1 + k2, chi = chi1 + chi2 - 2."""
    require_valid(d1)
    require_valid(d2)
    return direct_sum(d1, d2)


def stabilization_block() -> TrisectionDiagram:
    """The standard genus-3 diagram of the 4-sphere used by stabilization.

    Classes: alpha = (x1, x2, -x3), beta = (y1, y2, x3),
    gamma = (-x1, -y2, y3).  Its intersection triple is exactly
    (diag(1,1,0), diag(1,0,1), diag(0,1,1)) and (g, k) = (3, 1).
    """
    return TrisectionDiagram.from_rows(
        3,
        alpha=[
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 0],
        ],
        beta=[
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0],
        ],
        gamma=[
            [-1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, -1, 0],
            [0, 0, 0, 0, 0, 1],
        ],
    )


def stabilize(d: TrisectionDiagram) -> TrisectionDiagram:
    """Connected sum with the standard genus-3 4-sphere diagram.

    Takes (g, k) to (g + 3, k + 1) and preserves chi, signature and
    first homology.
    """
    require_valid(d)
    return direct_sum(d, stabilization_block())


def apply_diffeomorphism(d: TrisectionDiagram, s: IntMatrix) -> TrisectionDiagram:
    """Transform every class by a symplectic matrix acting on the right."""
    if s.rows != 2 * d.genus or s.cols != 2 * d.genus:
        raise ValueError(
            f"matrix is {s.rows} x {s.cols}, diagram needs {2 * d.genus} x {2 * d.genus}"
        )
    if not is_symplectic(s):
        raise ValueError("matrix is not symplectic")
    systems = [
        CurveSystem(d.genus, sys.classes @ s, sys.label) for sys in d.systems
    ]
    return TrisectionDiagram(d.genus, *systems, name=None)


def reverse_orientation(d: TrisectionDiagram) -> TrisectionDiagram:
    """Diagram of the oppositely oriented manifold: negate every y block.

    An involution; it negates the signature and preserves (g, k), chi
    and first homology.
    """
    require_valid(d)
    g = d.genus
    systems = [
        CurveSystem(
            g,
            IntMatrix(
                [r[:g] + tuple(-e for e in r[g:]) for r in sys.classes.entries],
                cols=2 * g,
            ),
            sys.label,
        )
        for sys in d.systems
    ]
    return TrisectionDiagram(g, *systems, name=None)


IDENTICAL = "identical"
SLIDE_EQUIVALENT = "slide-equivalent"
DISTINCT = "distinct-by-invariant"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of a bounded comparison.

    kind is one of IDENTICAL, SLIDE_EQUIVALENT, DISTINCT, UNKNOWN.  For
    SLIDE_EQUIVALENT the certificate lists moves carrying the first
    diagram onto the second; for DISTINCT the invariant name and both
    values are recorded.  UNKNOWN means the search budget ran out and
    certifies nothing.
    """

    kind: str
    certificate: tuple[SlideMove, ...] = ()
    invariant: str | None = None
    left: Any = None
    right: Any = None


_INVARIANT_CHECKS = (
    ("(g, k)", parameters),
    ("euler characteristic", euler_characteristic),
    ("signature", signature),
    ("first homology", first_homology),
)


def _all_moves(g: int) -> Iterator[SlideMove]:
    for system in LABELS:
        for target in range(g):
            for source in range(g):
                if target == source:
                    continue
                for sign in (1, -1):
                    yield SlideMove(system, target, source, sign)


def compare(
    d1: TrisectionDiagram,
    d2: TrisectionDiagram,
    *,
    max_depth: int = 3,
    max_nodes: int = 10000,
) -> EquivalenceVerdict:
    """Bounded equivalence check between two valid diagrams.

    First compares invariants ((g, k), chi, signature, first homology);
    any mismatch is a definitive DISTINCT verdict.  Equal diagrams are
    IDENTICAL.  Otherwise a breadth-first search over handle slides from
    d1 looks for d2: max_depth bounds the certificate length and
    max_nodes bounds the number of distinct diagrams visited.  The
    search is deterministic, so equal inputs always give equal verdicts.
    """
    require_valid(d1)
    require_valid(d2)
    for name, fn in _INVARIANT_CHECKS:
        a, b = fn(d1), fn(d2)
        if a != b:
            return EquivalenceVerdict(DISTINCT, invariant=name, left=a, right=b)
    if d1 == d2:
        return EquivalenceVerdict(IDENTICAL)

    visited = {d1}
    frontier: list[tuple[TrisectionDiagram, tuple[SlideMove, ...]]] = [(d1, ())]
    nodes = 1
    for _ in range(max_depth):
        next_frontier = []
        for d, path in frontier:
            for move in _all_moves(d.genus):
                nd = handle_slide(d, move)
                if nd in visited:
                    continue
                visited.add(nd)
                nodes += 1
                if nd == d2:
                    return EquivalenceVerdict(
                        SLIDE_EQUIVALENT, certificate=path + (move,)
                    )
                if nodes >= max_nodes:
                    return EquivalenceVerdict(UNKNOWN)
                next_frontier.append((nd, path + (move,)))
        frontier = next_frontier
        if not frontier:
            break
    return EquivalenceVerdict(UNKNOWN)
