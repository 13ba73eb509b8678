import pytest

from errors import EmptyPointSet
from forms import evaluate, monomial_values
from hilbert import PointSet, hilbert_function, hilbert_profile
from oracles import max_collinear_oracle, max_on_conic_oracle, random_point_set
from position import (FamilyKind, contained_in_cubic, family_obstruction, max_collinear, max_on_conic,
                      position_report)


def vanishes(witness, points):
    return all(evaluate(witness, p) == 0 for p in points)


def test_max_collinear_examples():
    count, line = max_collinear(PointSet.of([(1, 0, 1), (2, 0, 1), (5, 0, 3), (0, 1, 1)]))
    assert count == 3
    assert line == (0, 1, 0)
    assert max_collinear(PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))[0] == 2
    assert max_collinear(PointSet.of([(4, 5, 6)])) == (1, None)
    with pytest.raises(EmptyPointSet):
        max_collinear(PointSet(()))


def test_max_on_conic_examples(conic_six):
    five = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    count, conic = max_on_conic(five)
    assert count == 5
    assert vanishes(conic, five)

    count, conic = max_on_conic(conic_six)
    assert count == 6
    # x^2 + y^2 - z^2
    assert conic == (1, 0, 0, 1, 0, -1)

    six = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, -1, 5)])
    assert max_on_conic(six)[0] == 5


def test_max_on_conic_counts_line_pairs():
    # four points on y=0 and four on x=0, no five in general position on a smooth conic
    points = PointSet.of([(1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1),
                          (0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)])
    count, conic = max_on_conic(points)
    assert count == 8
    assert vanishes(conic, points)


def test_contained_in_cubic_examples(cuspidal_twelve, rng):
    assert contained_in_cubic(random_point_set(rng, 9))[0]
    in_cubic, witness = contained_in_cubic(cuspidal_twelve)
    assert in_cubic
    # x^3 - y^2 z
    assert witness == (1, 0, 0, 0, 0, 0, 0, -1, 0, 0)
    assert vanishes(witness, cuspidal_twelve)


def test_ten_general_points_lie_on_no_cubic():
    points = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, -1, 5), (3, 7, -2),
                          (-4, 1, 6), (5, 3, 8), (7, -6, 1)])
    in_cubic, witness = contained_in_cubic(points)
    assert in_cubic == (hilbert_function(points, 3) < 10)


def test_family_obstruction_priority_and_thresholds():
    line = [(t, 0, 1) for t in range(5)]
    others = [(0, 1, 1), (1, 3, 1), (2, 7, 3), (-3, 5, 2), (4, -2, 7), (6, 1, -5)]
    obstruction = family_obstruction(PointSet.of(line + others), 0)
    assert obstruction.kind is FamilyKind.COLLINEAR
    assert obstruction.threshold == 5
    assert obstruction.witness == (0, 1, 2, 3, 4)
    assert family_obstruction(PointSet.of(line + others), 1).kind is not FamilyKind.COLLINEAR

    conic = [(1 - t * t, 2 * t, 1 + t * t) for t in range(-4, 5)]
    extra = [(1, 1, 3), (2, -1, 7)]
    obstruction = family_obstruction(PointSet.of(conic + extra), 0)
    assert obstruction.kind is FamilyKind.CONIC
    assert obstruction.threshold == 9
    assert len(obstruction.witness) == 9


def test_position_report_fields(cuspidal_twelve):
    report = position_report(cuspidal_twelve)
    assert report.in_cubic
    assert report.max_collinear >= 2
    assert report.max_on_conic >= 5
    assert vanishes(report.cubic_witness, cuspidal_twelve)
    assert set(report.as_dict()) == {"max_collinear", "line_witness", "max_on_conic", "conic_witness",
                                     "in_cubic", "cubic_witness"}


def test_collinear_everything_matches_hilbert_data():
    points = PointSet.of([(t, 2 * t + 1, 1) for t in range(7)])
    assert max_collinear(points)[0] == len(points)
    profile = hilbert_profile(points)
    assert all(profile.dh_at(j) <= 1 for j in range(1, len(points) + 1))


def test_counts_match_brute_force(rng):
    for _ in range(20):
        size = int(rng.integers(1, 10))
        points = random_point_set(rng, size, bound=2)
        line_count, line = max_collinear(points)
        conic_count, conic = max_on_conic(points)
        assert line_count == max_collinear_oracle(points)
        assert conic_count == max_on_conic_oracle(points)
        if line is not None:
            on_line = [p for p in points if sum(a * b for a, b in zip(line, p.coords)) == 0]
            assert len(on_line) == line_count
        on_conic = [p for p in points if sum(a * b for a, b in zip(conic, monomial_values(p.coords, 2))) == 0]
        assert len(on_conic) == conic_count
