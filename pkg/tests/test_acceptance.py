"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest -v tests/test_acceptance.py` (add -s to see the PASS
lines of passing tests inline)."""

import random

import pytest

from trisect import (
    DISTINCT,
    SLIDE_EQUIVALENT,
    UNKNOWN,
    IntMatrix,
    SlideMove,
    TrisectionDiagram,
    apply_diffeomorphism,
    builtin,
    builtin_names,
    bundle_over_s2_params,
    compare,
    connect_sum,
    euler_characteristic,
    first_homology,
    handle_slide,
    intersection_triple,
    mapping_torus_params,
    parameters,
    random_symplectic,
    signature,
    stabilize,
    validate,
)
from trisect.cli import DiagramParseError, parse_diagram, serialize_diagram

from helpers import invariant_snapshot, random_slide, random_valid_diagram

ATLAS_CHI = {
    "s4-g0": 2,
    "s4-g3": 2,
    "cp2": 3,
    "cp2-mirror": 3,
    "s1xs3": 0,
    "cp2-sum-cp2mirror": 4,
    "s2xs2-g2-model": 4,
}

ATLAS_SIGMA = {
    "s4-g0": 0,
    "s4-g3": 0,
    "cp2": 1,
    "cp2-mirror": -1,
    "s1xs3": 0,
    "cp2-sum-cp2mirror": 0,
    "s2xs2-g2-model": 0,
}


def _report(n, text):
    print(f"ACCEPTANCE {n} PASS: {text}")


def test_01_atlas_validates_with_expected_euler_characteristics():
    assert set(builtin_names()) == set(ATLAS_CHI)
    for name, chi in ATLAS_CHI.items():
        d = builtin(name)
        report = validate(d)
        assert report.valid, (name, report.failures)
        assert euler_characteristic(d) == chi, name
    _report(1, "all 7 atlas entries validate with the expected chi values")


def test_02_stabilization_map_and_standard_block():
    assert stabilize(builtin("s4-g0")) == builtin("s4-g3")
    t = intersection_triple(stabilize(builtin("s4-g0")))
    assert t.q_ab == IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    assert t.q_bc == IntMatrix([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert t.q_ca == IntMatrix([[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    for seed in range(1000, 1050):
        d = random_valid_diagram(seed)
        (g, k), chi, sigma, h1 = invariant_snapshot(d)
        s = stabilize(d)
        assert validate(s).valid
        assert parameters(s) == (g + 3, k + 1)
        assert euler_characteristic(s) == chi
        assert signature(s) == sigma
        assert first_homology(s) == h1
    _report(
        2,
        "stabilize(s4-g0) is bit-identical to s4-g3 with the exact diagonal "
        "blocks, and 50 randomized diagrams map (g,k) to (g+3,k+1) "
        "preserving chi, signature and H1",
    )


def test_03_signatures_and_additivity():
    for name, sigma in ATLAS_SIGMA.items():
        assert signature(builtin(name)) == sigma, name
    for n1 in builtin_names():
        for n2 in builtin_names():
            total = signature(connect_sum(builtin(n1), builtin(n2)))
            assert total == ATLAS_SIGMA[n1] + ATLAS_SIGMA[n2], (n1, n2)
    _report(
        3,
        "atlas signatures are (0, 0, +1, -1, 0, 0, 0) and the signature is "
        "additive over all 49 ordered connected sums",
    )


def _predicted_triple(triple, move):
    """Apply the slide's row/column rule directly to the three matrices."""
    q_ab = [list(r) for r in triple.q_ab.entries]
    q_bc = [list(r) for r in triple.q_bc.entries]
    q_ca = [list(r) for r in triple.q_ca.entries]
    t, s, e = move.target, move.source, move.sign
    if move.system == "alpha":
        q_ab[t] = [a + e * b for a, b in zip(q_ab[t], q_ab[s])]
        for row in q_ca:
            row[t] += e * row[s]
    elif move.system == "beta":
        q_bc[t] = [a + e * b for a, b in zip(q_bc[t], q_bc[s])]
        for row in q_ab:
            row[t] += e * row[s]
    else:
        q_ca[t] = [a + e * b for a, b in zip(q_ca[t], q_ca[s])]
        for row in q_bc:
            row[t] += e * row[s]
    n = len(q_ab)
    return tuple(IntMatrix(m, cols=n) for m in (q_ab, q_bc, q_ca))


def test_04_two_hundred_random_slides_follow_the_intersection_rule():
    rng = random.Random(404)
    entries = ("s4-g3", "cp2-sum-cp2mirror", "s2xs2-g2-model")
    done = 0
    index = 0
    diagrams = {name: builtin(name) for name in entries}
    snapshots = {name: invariant_snapshot(diagrams[name]) for name in entries}
    while done < 200:
        name = entries[index % len(entries)]
        index += 1
        d = diagrams[name]
        move = random_slide(rng, d.genus)
        before = intersection_triple(d)
        d2 = handle_slide(d, move)
        after = intersection_triple(d2)
        assert (after.q_ab, after.q_bc, after.q_ca) == _predicted_triple(before, move)
        assert validate(d2).valid
        assert invariant_snapshot(d2) == snapshots[name]
        diagrams[name] = d2
        done += 1
    assert done == 200
    _report(
        4,
        "200 random handle slides match the row/column transformation of "
        "the intersection triple bit-exactly and preserve all invariants",
    )


def test_05_diffeomorphism_invariance_and_rejection():
    for name in builtin_names():
        d = builtin(name)
        snap = invariant_snapshot(d)
        for i in range(100):
            s = random_symplectic(d.genus, seed=i * 7 + 1, count=4)
            moved = apply_diffeomorphism(d, s)
            assert validate(moved).valid
            assert invariant_snapshot(moved) == snap
        if d.genus >= 1:
            bad = IntMatrix(
                [
                    [2 if i == j == 0 else int(i == j) for j in range(2 * d.genus)]
                    for i in range(2 * d.genus)
                ]
            )
            with pytest.raises(ValueError):
                apply_diffeomorphism(d, bad)
    _report(
        5,
        "100 random symplectic matrices per atlas entry preserve validity "
        "and every invariant; non-symplectic matrices are rejected",
    )


def test_06_validation_soundness_and_corruption_diagnostics():
    for name in builtin_names():
        report = validate(builtin(name))
        assert report.valid
        assert len({p.k for p in report.pairs}) == 1

    def torus(a, b, c):
        return TrisectionDiagram.from_rows(1, [list(a)], [list(b)], [list(c)])

    # non-primitive curve class
    r = validate(torus((1, 0), (0, 1), (2, 0)))
    assert not r.valid and not r.system("gamma").primitive
    assert any("gamma" in f and "primitive" in f for f in r.failures)
    # dependent rows
    r = validate(
        TrisectionDiagram.from_rows(
            2,
            [[1, 0, 0, 0], [1, 0, 0, 0]],
            [[0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, 1, 1, 0], [1, 0, 0, 1]],
        )
    )
    assert not r.valid and not r.system("alpha").full_rank
    assert any("alpha" in f and "rank" in f for f in r.failures)
    # non-isotropic system
    r = validate(
        TrisectionDiagram.from_rows(
            2,
            [[1, 0, 0, 0], [0, 0, 1, 0]],
            [[0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, 1, 1, 0], [1, 0, 0, 1]],
        )
    )
    assert not r.valid and not r.system("alpha").isotropic
    assert any("alpha" in f and "omega" in f for f in r.failures)
    # non-unit intersection factors
    r = validate(torus((1, 0), (0, 1), (2, 1)))
    assert not r.valid and r.pair("beta-gamma").q_factors == (2,)
    assert any("beta-gamma" in f and "invariant factors" in f for f in r.failures)
    # per-pair k disagreement
    r = validate(torus((1, 0), (0, 1), (1, 0)))
    assert not r.valid and not r.k_agree
    assert sorted(p.k for p in r.pairs) == [0, 0, 1]
    assert any("disagree" in f for f in r.failures)
    _report(
        6,
        "atlas entries pass all homological checks with agreeing per-pair "
        "k; all five corruption modes are caught with correct diagnostics",
    )


def test_07_fibration_parameter_formulas():
    for n in range(11):
        p = mapping_torus_params(n)
        assert (p.genus, p.k, p.chi) == (6 * n + 1, 2 * n + 1, 0)
        assert p.chi == 2 + p.genus - 3 * p.k
        q = bundle_over_s2_params(n)
        assert (q.genus, q.k, q.chi) == (8 * n + 5, 4 * n + 1, 4 - 4 * n)
        assert q.chi == 2 + q.genus - 3 * q.k
    spot = mapping_torus_params(0)
    assert (spot.genus, spot.k, spot.chi) == (1, 1, 0)
    spot = mapping_torus_params(2)
    assert (spot.genus, spot.k, spot.chi) == (13, 5, 0)
    spot = bundle_over_s2_params(0)
    assert (spot.genus, spot.k, spot.chi) == (5, 1, 4)
    spot = bundle_over_s2_params(1)
    assert (spot.genus, spot.k, spot.chi) == (13, 5, 0)
    spot = bundle_over_s2_params(2)
    assert (spot.genus, spot.k, spot.chi) == (21, 9, -4)
    _report(
        7,
        "both fibration families satisfy their closed forms and "
        "chi = 2 + g - 3k for parameters 0..10, with the frozen spot values",
    )


def test_08_serialization_round_trips_and_line_numbered_errors():
    for name in builtin_names():
        d = builtin(name)
        assert parse_diagram(serialize_diagram(d)) == d
    for seed in range(2000, 2100):
        d = random_valid_diagram(seed, max_genus=6)
        assert d.genus <= 6
        text = serialize_diagram(d)
        assert parse_diagram(text) == d
        assert serialize_diagram(parse_diagram(text)) == text
    with pytest.raises(DiagramParseError) as exc:
        parse_diagram("tris v9\n")
    assert exc.value.line == 1 and "line 1" in str(exc.value)
    with pytest.raises(DiagramParseError) as exc:
        parse_diagram("tris v1\ngenus 1\nalpha\n1 0 0\nbeta\n0 1\ngamma\n1 1\n")
    assert exc.value.line == 4 and "expected 2" in str(exc.value)
    with pytest.raises(DiagramParseError) as exc:
        parse_diagram("tris v1\ngenus 1\nalpha\n1 q\nbeta\n0 1\ngamma\n1 1\n")
    assert exc.value.line == 4 and "'q'" in str(exc.value)
    _report(
        8,
        "serialization round-trips bit-exactly on the atlas and 100 random "
        "diagrams of genus <= 6; parse errors carry line numbers",
    )


def test_09_bounded_compare_verdicts_with_replayable_certificates():
    certificates = []

    v = compare(builtin("cp2"), builtin("cp2-mirror"))
    assert v.kind == DISTINCT and v.invariant == "signature"
    assert (v.left, v.right) == (1, -1)

    # a depth-1 slide is recovered with a certificate
    for name in ("s4-g3", "s2xs2-g2-model"):
        d = builtin(name)
        move = SlideMove("beta", 0, 1, 1)
        slid = handle_slide(d, move)
        v = compare(slid, d, max_depth=1)
        assert v.kind == SLIDE_EQUIVALENT and len(v.certificate) == 1
        certificates.append((slid, d, v.certificate))

    # a depth-2 recovery
    d = builtin("cp2-sum-cp2mirror")
    slid = handle_slide(
        handle_slide(d, SlideMove("alpha", 0, 1, 1)), SlideMove("gamma", 1, 0, -1)
    )
    v = compare(slid, d, max_depth=2)
    assert v.kind == SLIDE_EQUIVALENT
    certificates.append((slid, d, v.certificate))

    # budget exhaustion is honest
    d = builtin("s4-g3")
    far = d
    for mv in (
        SlideMove("alpha", 0, 1, 1),
        SlideMove("beta", 1, 2, 1),
        SlideMove("gamma", 2, 0, -1),
    ):
        far = handle_slide(far, mv)
    assert compare(far, d, max_depth=1).kind == UNKNOWN
    assert compare(far, d, max_depth=3, max_nodes=20).kind == UNKNOWN

    # every produced certificate replays to bit-identity
    for start, goal, cert in certificates:
        replay = start
        for mv in cert:
            replay = handle_slide(replay, mv)
        assert replay == goal
    _report(
        9,
        "compare distinguishes cp2 from its mirror by signature, recovers "
        "slid diagrams with replayable certificates, and says unknown on "
        "budget exhaustion",
    )
