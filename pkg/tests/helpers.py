"""Shared builders for randomized diagrams used across the test suite."""

import random

from trisect import (
    LABELS,
    SlideMove,
    TrisectionDiagram,
    apply_diffeomorphism,
    builtin,
    connect_sum,
    euler_characteristic,
    first_homology,
    handle_slide,
    parameters,
    random_symplectic,
    signature,
    stabilize,
)

# atlas entries small enough to stack under a genus cap
SMALL_PIECES = ("cp2", "cp2-mirror", "s1xs3", "s2xs2-g2-model")


def random_slide(rng: random.Random, genus: int) -> SlideMove:
    assert genus >= 2
    target = rng.randrange(genus)
    source = rng.randrange(genus - 1)
    if source >= target:
        source += 1
    return SlideMove(rng.choice(LABELS), target, source, rng.choice((1, -1)))


def shuffle_diagram(d: TrisectionDiagram, rng: random.Random, slides: int = 4) -> TrisectionDiagram:
    """Apply random slides and a random symplectic change of basis."""
    if d.genus >= 2:
        for _ in range(slides):
            d = handle_slide(d, random_slide(rng, d.genus))
    if d.genus >= 1:
        d = apply_diffeomorphism(
            d, random_symplectic(d.genus, rng.randrange(10**6), rng.randrange(1, 5))
        )
    return d


def random_valid_diagram(seed: int, max_genus: int = 6) -> TrisectionDiagram:
    """A pseudo-random valid diagram: connected sums of atlas entries,
    shuffled by slides and a diffeomorphism.  Deterministic in seed."""
    rng = random.Random(seed)
    d = builtin(rng.choice(SMALL_PIECES))
    while rng.random() < 0.6:
        extra = builtin(rng.choice(SMALL_PIECES))
        if d.genus + extra.genus > max_genus:
            break
        d = connect_sum(d, extra)
    if d.genus + 3 <= max_genus and rng.random() < 0.25:
        d = stabilize(d)
    return shuffle_diagram(d, rng, slides=rng.randrange(0, 5))


def invariant_snapshot(d: TrisectionDiagram):
    return (parameters(d), euler_characteristic(d), signature(d), first_homology(d))
