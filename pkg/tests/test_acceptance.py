"""The acceptance suite: every criterion runs exactly, no tolerances.

Each test delegates to the shared criterion implementation in
``ekcells.suite`` (also reachable through the ``paper-suite`` CLI subcommand)
and prints one pass/fail line.
"""

from ekcells.suite import (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
)

RANDOM_COUNT = 200
CM_COUNT = 50
SEED = 20260810


def _run(number, description, fn, **kwargs):
    try:
        detail = fn(**kwargs)
    except Exception as exc:
        print(f"FAIL criterion {number}: {description} -- {exc}")
        raise
    print(f"PASS criterion {number}: {description} -- {detail}")


def test_criterion_1_degree2_balls():
    _run(1, "degree-2 CM ideal, both complexes ball-certified", criterion_1)


def test_criterion_2_two_triangles_refuted():
    _run(2, "two-triangle ideal refuted with trivial homology", criterion_2)


def test_criterion_3_square_triangle_split():
    _run(3, "square-triangle ideal: modified certified, classical refuted", criterion_3)


def test_criterion_4_posets_differ():
    _run(4, "degree-4 ideal: cell posets non-isomorphic", criterion_4)


def test_criterion_5_polarization_examples():
    _run(5, "introductory polarization and stairs diagrams", criterion_5)


def test_criterion_6_random_battery():
    _run(
        6,
        f"structural battery over {RANDOM_COUNT} random Borel ideals",
        criterion_6,
        count=RANDOM_COUNT,
        seed=SEED,
    )


def test_criterion_7_cm_battery():
    _run(
        7,
        f"CM battery with ball certification over {CM_COUNT} ideals",
        criterion_7,
        count=CM_COUNT,
        seed=SEED + 1,
    )
