"""Trisection diagrams at the homology level, their validation and invariants.

A genus-g diagram stores, for each of the three systems alpha, beta and
gamma, the g homology classes of its curves on the closed genus-g
surface, as rows of a g x 2g integer matrix in the (x, y) basis of the
symplectic lattice.

Validation checks the complete homological necessary conditions for each
pair of systems to present a connected sum of k copies of S^1 x S^2:

  * each system must be a Lagrangian basis (full rank, primitive,
    pairwise omega-orthogonal);
  * each pairwise intersection matrix q must have all nonzero invariant
    factors equal to 1;
  * the first homology of the double determined by each pair, the
    cokernel of the stacked 2g x 2g matrix, must be free of rank
    k = g - rank(q);
  * the three per-pair values of k must agree.

These conditions are necessary but not sufficient: deciding whether a
Heegaard diagram really presents a connected sum of copies of S^1 x S^2
is out of reach at the homology level, so a passing report means "no
homological obstruction", not a geometric certificate.  Reports say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .intlin import IntMatrix, invariant_factors
from .symplectic import (
    LagrangianSublattice,
    is_lagrangian,
    maslov_index,
    omega,
    pairing_matrix,
)

ALPHA = "alpha"
BETA = "beta"
GAMMA = "gamma"
LABELS = (ALPHA, BETA, GAMMA)


@dataclass(frozen=True)
class CurveSystem:
    """One system of g curve classes on the genus-g surface.

    ``classes`` is g x 2g; row i is the class of the i-th curve in the
    basis (x_1..x_g, y_1..y_g).  No validity is imposed here beyond the
    shape: invalid systems must remain representable so that validation
    can describe what is wrong with them.
    """

    genus: int
    classes: IntMatrix
    label: str

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"label must be one of {LABELS}, got {self.label!r}")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.classes.rows != self.genus or self.classes.cols != 2 * self.genus:
            raise ValueError(
                f"{self.label}: classes must be {self.genus} x {2 * self.genus}, "
                f"got {self.classes.rows} x {self.classes.cols}"
            )


@dataclass(frozen=True)
class TrisectionDiagram:
    """Three curve systems of a common genus.

    The optional ``name`` tags atlas entries and is ignored by equality
    and hashing: two diagrams are equal iff their class matrices are.
    """

    genus: int
    alpha: CurveSystem
    beta: CurveSystem
    gamma: CurveSystem
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for sys, label in zip((self.alpha, self.beta, self.gamma), LABELS):
            if sys.label != label:
                raise ValueError(f"system in slot {label} is labeled {sys.label!r}")
            if sys.genus != self.genus:
                raise ValueError(
                    f"{label} has genus {sys.genus}, diagram has genus {self.genus}"
                )

    @classmethod
    def from_rows(
        cls,
        genus: int,
        alpha: Sequence[Sequence[int]],
        beta: Sequence[Sequence[int]],
        gamma: Sequence[Sequence[int]],
        name: str | None = None,
    ) -> "TrisectionDiagram":
        systems = [
            CurveSystem(genus, IntMatrix(rows, cols=2 * genus), label)
            for rows, label in zip((alpha, beta, gamma), LABELS)
        ]
        return cls(genus, *systems, name=name)

    @property
    def systems(self) -> tuple[CurveSystem, CurveSystem, CurveSystem]:
        return (self.alpha, self.beta, self.gamma)

    def system(self, label: str) -> CurveSystem:
        try:
            return self.systems[LABELS.index(label)]
        except ValueError:
            raise ValueError(f"unknown system label {label!r}") from None


@dataclass(frozen=True)
class IntersectionTriple:
    """The three pairwise intersection matrices (q_ab, q_bc, q_ca)."""

    q_ab: IntMatrix
    q_bc: IntMatrix
    q_ca: IntMatrix


@dataclass(frozen=True)
class SystemReport:
    """Lagrangian checks for one curve system."""

    label: str
    full_rank: bool
    primitive: bool
    isotropic: bool

    @property
    def ok(self) -> bool:
        return self.full_rank and self.primitive and self.isotropic


@dataclass(frozen=True)
class PairReport:
    """Homological S^1 x S^2 connected-sum checks for one pair of systems."""

    pair: str
    q_factors: tuple[int, ...]
    unit_factors: bool
    double_free: bool
    double_rank: int
    k: int

    @property
    def ok(self) -> bool:
        return self.unit_factors and self.double_free and self.double_rank == self.k


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of all homological checks, with per-check diagnostics.

    ``k`` and ``euler`` are filled only when the diagram is valid.
    A valid report asserts the absence of homological obstructions, not
    a geometric equivalence; ``lines()`` states that scope explicitly.
    """

    genus: int
    systems: tuple[SystemReport, SystemReport, SystemReport]
    pairs: tuple[PairReport, PairReport, PairReport]
    k_agree: bool
    valid: bool
    k: int | None
    euler: int | None
    failures: tuple[str, ...]

    def system(self, label: str) -> SystemReport:
        return self.systems[LABELS.index(label)]

    def pair(self, name: str) -> PairReport:
        for p in self.pairs:
            if p.pair == name:
                return p
        raise ValueError(f"unknown pair {name!r}")

    def lines(self) -> list[str]:
        out = [f"genus {self.genus}"]
        for s in self.systems:
            marks = []
            marks.append("full rank" if s.full_rank else "RANK DEFICIENT")
            marks.append("primitive" if s.primitive else "NOT PRIMITIVE")
            marks.append("isotropic" if s.isotropic else "NOT ISOTROPIC")
            out.append(f"system {s.label}: " + ", ".join(marks))
        for p in self.pairs:
            facs = ",".join(str(f) for f in p.q_factors) or "-"
            state = "ok" if p.ok else "FAIL"
            out.append(
                f"pair {p.pair}: q factors ({facs}), double rank {p.double_rank}"
                f"{'' if p.double_free else ' with torsion'}, k {p.k}: {state}"
            )
        if not self.k_agree:
            out.append("per-pair k values disagree")
        if self.valid:
            out.append(f"result: VALID, (g, k) = ({self.genus}, {self.k}), chi = {self.euler}")
        else:
            out.append("result: INVALID")
            for f in self.failures:
                out.append(f"  fail: {f}")
        out.append(
            "scope: homological necessary conditions only; geometric "
            "standardness of the pieces is not certified"
        )
        return out


class InvalidDiagramError(ValueError):
    """Raised when an operation requires a valid diagram but the checks fail."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(
            "invalid trisection diagram: " + "; ".join(report.failures)
        )


def validate(d: TrisectionDiagram) -> ValidationReport:
    """Run every homological check and return the full report."""
    g = d.genus
    failures: list[str] = []

    sys_reports = []
    for sys in d.systems:
        facs = invariant_factors(sys.classes)
        rank = sum(1 for e in facs if e)
        full_rank = rank == g
        primitive = all(e == 1 for e in facs)
        bad = _first_nonisotropic(sys.classes)
        isotropic = bad is None
        sys_reports.append(SystemReport(sys.label, full_rank, primitive, isotropic))
        if not full_rank:
            failures.append(f"{sys.label}: rows are dependent (rank {rank} of {g})")
        elif not primitive:
            failures.append(
                f"{sys.label}: span is not primitive "
                f"(invariant factors {_fmt_factors(facs)})"
            )
        if not isotropic:
            i, j, val = bad
            failures.append(
                f"{sys.label}: not isotropic, "
                f"omega({sys.label}_{i + 1}, {sys.label}_{j + 1}) = {val}"
            )

    pair_reports = []
    ks = []
    for left, right in ((d.alpha, d.beta), (d.beta, d.gamma), (d.gamma, d.alpha)):
        pair = f"{left.label}-{right.label}"
        q = pairing_matrix(left.classes, right.classes)
        qfacs = invariant_factors(q)
        k = g - sum(1 for e in qfacs if e)
        unit = all(e in (0, 1) for e in qfacs)
        stacked_facs = invariant_factors(left.classes.vstack(right.classes))
        torsion = tuple(e for e in stacked_facs if e > 1)
        double_free = not torsion
        double_rank = 2 * g - sum(1 for e in stacked_facs if e)
        pair_reports.append(PairReport(pair, qfacs, unit, double_free, double_rank, k))
        ks.append(k)
        if not unit:
            failures.append(
                f"{pair}: intersection matrix has non-unit invariant factors "
                f"{_fmt_factors(qfacs)}"
            )
        if not double_free:
            failures.append(f"{pair}: double has torsion {_fmt_factors(torsion)}")
        elif double_rank != k:
            failures.append(
                f"{pair}: double has rank {double_rank}, expected k = {k}"
            )

    k_agree = len(set(ks)) <= 1
    if not k_agree:
        failures.append(
            "per-pair k values disagree: "
            + ", ".join(f"{p.pair} gives {p.k}" for p in pair_reports)
        )

    valid = (
        all(s.ok for s in sys_reports) and all(p.ok for p in pair_reports) and k_agree
    )
    k = ks[0] if valid else None
    euler = 2 + g - 3 * k if valid else None
    return ValidationReport(
        genus=g,
        systems=tuple(sys_reports),
        pairs=tuple(pair_reports),
        k_agree=k_agree,
        valid=valid,
        k=k,
        euler=euler,
        failures=tuple(failures),
    )


def _first_nonisotropic(classes: IntMatrix):
    rows = classes.entries
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            val = omega(rows[i], rows[j])
            if val != 0:
                return (i, j, val)
    return None


def _fmt_factors(facs: Sequence[int]) -> str:
    return "(" + ", ".join(str(f) for f in facs) + ")"


def require_valid(d: TrisectionDiagram) -> ValidationReport:
    """Validate and raise InvalidDiagramError when any check fails."""
    report = validate(d)
    if not report.valid:
        raise InvalidDiagramError(report)
    return report


def parameters(d: TrisectionDiagram) -> tuple[int, int]:
    """The pair (g, k) of a valid diagram."""
    report = require_valid(d)
    return (d.genus, report.k)


def euler_characteristic(d: TrisectionDiagram) -> int:
    """chi = 2 + g - 3k of the closed 4-manifold the diagram presents."""
    g, k = parameters(d)
    return 2 + g - 3 * k


def handle_counts(d: TrisectionDiagram) -> tuple[int, int, int, int, int]:
    """Handle counts (1, k, g - k, k, 1) of the associated handle structure."""
    g, k = parameters(d)
    return (1, k, g - k, k, 1)


def intersection_triple(d: TrisectionDiagram) -> IntersectionTriple:
    """The pairwise intersection matrices; defined for any diagram."""
    return IntersectionTriple(
        pairing_matrix(d.alpha.classes, d.beta.classes),
        pairing_matrix(d.beta.classes, d.gamma.classes),
        pairing_matrix(d.gamma.classes, d.alpha.classes),
    )


def lagrangian_triple(
    d: TrisectionDiagram,
) -> tuple[LagrangianSublattice, LagrangianSublattice, LagrangianSublattice]:
    """The three Lagrangian sublattices spanned by the systems."""
    out = []
    for sys in d.systems:
        if not is_lagrangian(sys.classes):
            raise ValueError(f"{sys.label} system is not a Lagrangian basis")
        out.append(LagrangianSublattice(d.genus, sys.classes))
    return tuple(out)


def signature(d: TrisectionDiagram) -> int:
    """Signature of the presented 4-manifold: the Maslov index of the triple."""
    require_valid(d)
    return maslov_index(*lagrangian_triple(d))


@dataclass(frozen=True)
class FirstHomology:
    """H_1 of the presented 4-manifold: free rank plus torsion coefficients.

    ``torsion`` lists the cyclic orders > 1 in divisibility order.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def first_homology(d: TrisectionDiagram) -> FirstHomology:
    """H_1 of the presented manifold: Z^(2g) modulo all three spans."""
    require_valid(d)
    stacked = d.alpha.classes.vstack(d.beta.classes).vstack(d.gamma.classes)
    facs = invariant_factors(stacked)
    rank = sum(1 for e in facs if e)
    return FirstHomology(
        free_rank=2 * d.genus - rank,
        torsion=tuple(e for e in facs if e > 1),
    )
