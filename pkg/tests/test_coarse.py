"""Trace quotients, simplicial substitutes, sampling, the circle example."""

import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from finitary import (
    Covering,
    Manifold,
    NotACover,
    Relation,
    SamplePoint,
    SimplicialComplex,
    UncoveredPoint,
    Word,
    circle_covering,
    generated_space,
    is_t0,
    poset_isomorphic,
    realize,
    sample,
    sampled_substitute,
    simplicial_substitute,
    trace_substitute,
    verify_correspondence,
)
from finitary.coarse import STANDARD_CIRCLE_ARCS, STANDARD_CIRCLE_EXTRA_POINTS

from conftest import random_manifold


def fs(*verts):
    return frozenset(verts)


TRIANGLE = Manifold.from_relation(Relation(3, [(0, 1), (1, 2), (2, 0)]))
BOUNDARY_TRIANGLE = TRIANGLE.to_simplicial()
SEGMENT = SimplicialComplex(2, [fs(0), fs(1), fs(0, 1)])


class TestTraceSubstitute:
    def test_two_points_one_nested_cover(self):
        c = Covering(("A", "B"), ("p", "q"), [{0}, {0, 1}])
        space, class_of = trace_substitute(c)
        assert space.n == 2 and class_of == (0, 1)
        assert space.min_open[space.index("p")] == frozenset({0, 1})

    def test_constant_trace_collapses_everything(self):
        c = Covering(("A",), ("p", "q", "r"), [{0}, {0}, {0}])
        space, class_of = trace_substitute(c)
        assert space.n == 1 and class_of == (0, 0, 0)

    def test_uncovered_point_rejected(self):
        with pytest.raises(UncoveredPoint):
            Covering(("A",), ("p",), [frozenset()])

    def test_cover_set_members(self):
        c = Covering(("A", "B"), ("p", "q"), [{0}, {0, 1}])
        assert c.members(0) == (0, 1)
        assert c.members(1) == (1,)

    @given(
        st.lists(
            st.sets(st.integers(min_value=0, max_value=4), min_size=1, max_size=5),
            min_size=1,
            max_size=12,
        )
    )
    def test_always_t0(self, traces):
        c = Covering(
            tuple("ABCDE"),
            tuple(f"p{i}" for i in range(len(traces))),
            traces,
        )
        space, _ = trace_substitute(c)
        assert is_t0(space)

    @given(
        st.lists(
            st.sets(st.integers(min_value=0, max_value=3), min_size=1, max_size=4),
            min_size=1,
            max_size=10,
        ),
        st.sets(st.integers(min_value=0, max_value=9)),
    )
    def test_refinement_never_merges_classes(self, traces, new_members):
        c = Covering(
            tuple("ABCD"),
            tuple(f"p{i}" for i in range(len(traces))),
            traces,
        )
        refined = Covering(
            tuple("ABCDE"),
            c.point_labels,
            [
                t | ({4} if p in new_members else set())
                for p, t in enumerate(c.traces)
            ],
        )
        before, _ = trace_substitute(c)
        after, _ = trace_substitute(refined)
        assert after.n >= before.n


class TestSimplicialSubstitute:
    def test_boundary_triangle_is_the_six_point_space(self):
        space = simplicial_substitute(BOUNDARY_TRIANGLE)
        assert space.n == 6
        iso = poset_isomorphic(generated_space(TRIANGLE), space)
        assert iso is not None

    def test_single_vertex(self):
        space = simplicial_substitute(SimplicialComplex(1, [fs(0)]))
        assert space.n == 1

    def test_segment_min_opens(self):
        space = simplicial_substitute(SEGMENT)
        assert space.n == 3
        edge = space.index("12")
        assert space.min_open[edge] == frozenset({edge})
        v = space.index("1")
        assert space.min_open[v] == frozenset({v, edge})

    def test_point_per_simplex_and_star_topology(self):
        rng = random.Random(73)
        for _ in range(15):
            p = random_manifold(rng, max_vertices=5).to_simplicial()
            space = simplicial_substitute(p)
            cells = p.ordered()
            assert space.n == len(cells)
            for x, sigma in enumerate(cells):
                expected = {y for y, tau in enumerate(cells) if sigma <= tau}
                assert space.min_open[x] == frozenset(expected)

    def test_cover_intersections_are_covers_or_empty(self):
        cells = BOUNDARY_TRIANGLE.ordered()
        members = {
            s: {t for t in cells if s <= t} for s in cells
        }
        for a in cells:
            for b in cells:
                meet = members[a] & members[b]
                union = a | b
                if union in BOUNDARY_TRIANGLE.simplices:
                    assert meet == members[union]
                else:
                    assert meet == set()


class TestSampling:
    def test_standard_placement(self):
        placement = realize(SEGMENT)
        assert placement[1] == (Fr(0), Fr(1))

    def test_weights_positive_and_normalized(self):
        for pt in sample(BOUNDARY_TRIANGLE, fs(0, 1), seed=5, count=10):
            assert sum(w for _, w in pt.weights) == 1
            assert all(w > 0 for _, w in pt.weights)
            assert pt.support() == fs(0, 1)

    def test_midpoint_lies_in_the_edge_cell_not_a_vertex_cell(self):
        midpoint = SamplePoint(fs(0, 1), ((0, Fr(1, 2)), (1, Fr(1, 2))))
        assert midpoint.support() == fs(0, 1)  # its cell is the edge itself

    def test_star_membership_law(self):
        pt = sample(BOUNDARY_TRIANGLE, fs(0, 1), seed=9, count=1)[0]
        for sigma in BOUNDARY_TRIANGLE.ordered():
            assert pt.in_star_interior(sigma) == (sigma <= fs(0, 1))

    def test_sampling_is_deterministic(self):
        a = sample(BOUNDARY_TRIANGLE, fs(0, 1), seed=3, count=4)
        b = sample(BOUNDARY_TRIANGLE, fs(0, 1), seed=3, count=4)
        assert a == b

    def test_ambient_coordinates_match_weights(self):
        pt = sample(SEGMENT, fs(0, 1), seed=1, count=1)[0]
        coords = pt.ambient(2)
        assert sum(coords) == 1
        assert coords[0] == dict(pt.weights)[0]

    def test_degenerate_weights_rejected(self):
        with pytest.raises(ValueError):
            SamplePoint(fs(0, 1), ((0, Fr(1)), (1, Fr(0))))
        with pytest.raises(ValueError):
            SamplePoint(fs(0, 1), ((0, Fr(1, 2)), (1, Fr(1, 4))))


class TestSampledSubstitute:
    def test_matches_symbolic_on_random_complexes(self):
        rng = random.Random(79)
        for trial in range(20):
            p = random_manifold(rng, max_vertices=6).to_simplicial()
            if len(p) > 40:
                continue
            space = sampled_substitute(p, per_cell=rng.choice((1, 2, 3)), seed=trial)
            assert poset_isomorphic(simplicial_substitute(p), space) is not None

    def test_one_sample_per_cell_suffices(self):
        space = sampled_substitute(BOUNDARY_TRIANGLE, per_cell=1, seed=0)
        assert poset_isomorphic(simplicial_substitute(BOUNDARY_TRIANGLE), space) is not None

    def test_full_triangle_gives_face_poset(self):
        p = SimplicialComplex.closed(3, [fs(0, 1, 2)])[0]
        space = sampled_substitute(p, per_cell=5, seed=2)
        assert space.n == 7
        assert poset_isomorphic(simplicial_substitute(p), space) is not None


class TestCircle:
    def test_standard_covering_has_six_classes_matching_the_triangle(self):
        cov = circle_covering(
            STANDARD_CIRCLE_ARCS, samples=512, extra_points=STANDARD_CIRCLE_EXTRA_POINTS
        )
        space, _ = trace_substitute(cov)
        assert space.n == 6
        assert set(cov.traces) == {
            fs(0), fs(1), fs(2), fs(0, 1), fs(1, 2), fs(0, 2),
        }
        assert poset_isomorphic(space, generated_space(TRIANGLE)) is not None

    def test_uncorrected_middle_arc_fails_to_cover_pi(self):
        broken = (
            (Fr(-1, 2), Fr(1)),
            (Fr(1, 2), Fr(3, 4)),
            (Fr(-1), Fr(1, 4)),
        )
        with pytest.raises(NotACover) as err:
            circle_covering(broken, samples=64, extra_points=(Fr(1),))
        assert "1*pi" in str(err.value)

    def test_near_full_single_arc_gives_one_class(self):
        # one open arc missing only a point that is never sampled
        cov = circle_covering([(Fr(1, 3), Fr(1, 3))], samples=16)
        space, _ = trace_substitute(cov)
        assert space.n == 1

    def test_two_overlapping_arcs_give_three_classes(self):
        # brute force over the samples: the two geometric overlap regions
        # carry the same trace, so they merge into a single class
        cov = circle_covering([(Fr(-1, 2), Fr(1, 2)), (Fr(1, 4), Fr(7, 4))], samples=720)
        space, _ = trace_substitute(cov)
        assert sorted(map(sorted, set(cov.traces))) == [[0], [0, 1], [1]]
        assert space.n == 3

    def test_angles_are_exact_and_wrapped(self):
        cov = circle_covering(STANDARD_CIRCLE_ARCS, samples=8, extra_points=(Fr(9, 4),))
        assert "1/4" in cov.point_labels  # 9/4 pi wraps to 1/4 pi


class TestCorrespondence:
    def test_triangle_bijection_is_identity_on_labels(self):
        report = verify_correspondence(TRIANGLE, per_cell=2, seed=4)
        assert report.ok
        for x, y in enumerate(report.gen_to_sym):
            assert report.generated.labels[x] == report.symbolic.labels[y]

    def test_singleton_manifold(self):
        m = Manifold(("1",), words=[Word((0,))])
        report = verify_correspondence(m, per_cell=1, seed=0)
        assert report.ok
        assert report.generated.n == report.sampled.n == 1

    def test_report_renders_with_verdict(self):
        report = verify_correspondence(TRIANGLE, per_cell=1, seed=0)
        text = report.render()
        assert "correspondence: VERIFIED" in text
        assert "generated ~ symbolic:" in text
