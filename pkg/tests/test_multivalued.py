"""Multivalued layer: the four continuity notions and the induced lift."""

import random

import pytest

from digitop import (BudgetError, DigitalImage, MultiFunction, Subdivision,
                     as_multifunction, generates, has_strong_continuity,
                     has_weak_continuity, induced_map,
                     induced_multifunction_map, interval,
                     is_connectivity_preserving, is_egs_continuous,
                     is_family_continuous, multifunction_from_json,
                     multifunction_to_json, subdivide)
from digitop.lattice import adjacent_or_equal
from digitop.multivalued import strong_continuity_counterexample
from digitop.verify import (random_continuous_function, random_image,
                            random_multifunction)


@pytest.fixture(scope="module")
def ladder():
    """The two-point multifunction separating weak from strong continuity."""
    X, Y = interval(0, 1), interval(0, 2)
    return MultiFunction.from_table(X, Y, {(0,): {(0,)}, (1,): {(1,), (2,)}})


def mf(X, Y, *value_sets):
    return MultiFunction.from_table(X, Y, dict(zip(X.points, value_sets)))


class TestWeakContinuity:
    def test_ladder_weak(self, ladder):
        assert has_weak_continuity(ladder)

    def test_single_valued_continuous(self):
        rng = random.Random(1)
        for _ in range(30):
            X, Y = random_image(rng, 4), random_image(rng, 4)
            f = random_continuous_function(rng, X, Y)
            assert has_weak_continuity(as_multifunction(f))

    def test_gap_fails(self):
        F = mf(interval(0, 1), interval(0, 2), {(0,)}, {(2,)})
        assert not has_weak_continuity(F)


class TestStrongContinuity:
    def test_ladder_not_strong(self, ladder):
        assert not has_strong_continuity(ladder)
        x, y, p = strong_continuity_counterexample(ladder)
        assert p == (2,)  # the far value has no partner

    def test_single_valued_continuous(self):
        rng = random.Random(2)
        for _ in range(30):
            X, Y = random_image(rng, 4), random_image(rng, 4)
            f = random_continuous_function(rng, X, Y)
            assert has_strong_continuity(as_multifunction(f))

    def test_closed_neighborhood_map_matches_definition(self):
        X = interval(0, 3)
        F = MultiFunction.from_table(X, X, {
            x: frozenset(X.neighbors(x)) | {x} for x in X.points})
        u = X.adjacency
        expect = True
        for x in X.points:
            for y in X.points:
                if not X.adjacent(x, y):
                    continue
                for p in F(x):
                    if not any(adjacent_or_equal(p, q, u) for q in F(y)):
                        expect = False
        assert has_strong_continuity(F) == expect


class TestConnectivityPreserving:
    def test_ladder(self, ladder):
        assert is_connectivity_preserving(ladder)

    def test_disconnected_value_fails(self):
        F = mf(interval(0, 0), interval(0, 2), {(0,), (2,)})
        assert not is_connectivity_preserving(F)

    def test_single_valued_continuous(self):
        rng = random.Random(3)
        for _ in range(30):
            X, Y = random_image(rng, 4), random_image(rng, 4)
            f = random_continuous_function(rng, X, Y)
            assert is_connectivity_preserving(as_multifunction(f))


class TestSubdivision:
    def test_cardinality(self):
        for r in (1, 2, 3):
            X = DigitalImage.of([(0, 0), (1, 0)], 1)
            S = subdivide(X, r)
            assert len(S.image) == len(X) * r ** X.dim

    def test_identity_subdivision(self):
        X = DigitalImage.of([(0, 1), (1, 1)], 1)
        assert subdivide(X, 1).image == X

    def test_cells_partition(self):
        X = interval(0, 2)
        S = subdivide(X, 3)
        cells = [set(S.cell(x)) for x in X.points]
        assert set().union(*cells) == set(S.image.points)
        assert sum(len(c) for c in cells) == len(S.image)

    def test_bad_factor(self):
        with pytest.raises(ValueError):
            subdivide(interval(0, 1), 0)


class TestGeneratorContinuity:
    def test_single_valued_at_r1(self):
        rng = random.Random(4)
        for _ in range(10):
            X, Y = random_image(rng, 3), random_image(rng, 3)
            f = random_continuous_function(rng, X, Y)
            result = is_egs_continuous(as_multifunction(f), 2)
            assert result and result.r == 1

    def test_ladder_witness_at_r2(self, ladder):
        result = is_egs_continuous(ladder, 3)
        assert result and result.r == 2
        assert generates(result.generator, ladder, Subdivision(ladder.domain, 2))

    def test_disconnected_value_never_generated(self):
        F = mf(interval(0, 1), interval(0, 2), {(0,), (2,)}, {(1,)})
        result = is_egs_continuous(F, 3)
        assert not result and result.r is None and result.r_max == 3

    def test_generates_is_exact(self, ladder):
        result = is_egs_continuous(ladder, 2)
        sub = Subdivision(ladder.domain, result.r)
        other = MultiFunction.from_table(
            ladder.domain, ladder.codomain, {(0,): {(0,)}, (1,): {(1,)}})
        assert not generates(result.generator, other, sub)

    def test_budget(self):
        # never generable, so the search climbs r until the budget trips
        F = mf(interval(0, 1), interval(0, 2), {(0,), (2,)}, {(1,)})
        with pytest.raises(BudgetError):
            is_egs_continuous(F, 40, budget=16)

    def test_bad_rmax(self, ladder):
        with pytest.raises(ValueError):
            is_egs_continuous(ladder, 0)


class TestInducedLift:
    def test_strongly_continuous_lifts(self):
        rng = random.Random(5)
        produced = 0
        while produced < 40:
            X, Y = random_image(rng, 4), random_image(rng, 4)
            F = random_multifunction(rng, X, Y)
            if not has_strong_continuity(F):
                continue
            produced += 1
            assert is_family_continuous(induced_multifunction_map(F, "full"))

    def test_ladder_lift_fails(self, ladder):
        lifted = induced_multifunction_map(ladder, "full")
        assert not is_family_continuous(lifted)

    def test_single_valued_agrees_with_induced_map(self):
        rng = random.Random(6)
        for _ in range(20):
            X, Y = random_image(rng, 4), random_image(rng, 4)
            f = random_continuous_function(rng, X, Y)
            lifted = induced_multifunction_map(as_multifunction(f), "full")
            direct = induced_map(f, lifted.domain, codomain_family=lifted.codomain)
            assert lifted.pairs == direct.pairs

    def test_connected_kind_rejects_disconnected_images(self):
        F = mf(interval(0, 0), interval(0, 2), {(0,), (2,)})
        with pytest.raises(ValueError, match="not a member"):
            induced_multifunction_map(F, "connected")

    def test_implication_lattice(self):
        rng = random.Random(7)
        for _ in range(150):
            X, Y = random_image(rng, 5), random_image(rng, 5)
            F = random_multifunction(rng, X, Y)
            if has_strong_continuity(F):
                assert has_weak_continuity(F)
            if is_connectivity_preserving(F):
                assert has_weak_continuity(F)


class TestSerialization:
    def test_round_trip(self, ladder):
        assert multifunction_from_json(multifunction_to_json(ladder)) == ladder

    def test_empty_value_rejected(self):
        doc = multifunction_to_json(
            mf(interval(0, 0), interval(0, 1), {(0,)}))
        doc["pairs"][0][1] = []
        with pytest.raises(ValueError):
            multifunction_from_json(doc)
