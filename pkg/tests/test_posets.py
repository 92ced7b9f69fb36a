import random

import pytest

from ekcells import (
    BOTTOM,
    AdmissiblePair,
    FinitePoset,
    SimplicialComplexData,
    build_gamma,
    ek_complex,
    modified_complex,
    poset_isomorphic,
    poset_to_dot,
    random_borel_ideal,
)
from ekcells.verification import check_cover_support
from conftest import ideal, mono


def chain_poset(k):
    return FinitePoset(range(k), [(i, i + 1) for i in range(k - 1)])


class TestFinitePoset:
    def test_rejects_cycles(self):
        with pytest.raises(ValueError, match="cycle"):
            FinitePoset([1, 2], [(1, 2), (2, 1)])

    def test_rejects_redundant_covers(self):
        with pytest.raises(ValueError, match="implied"):
            FinitePoset([1, 2, 3], [(1, 2), (2, 3), (1, 3)])

    def test_leq_and_intervals(self):
        p = chain_poset(4)
        assert p.leq(0, 3) and not p.leq(3, 0)
        assert p.interval_set(1, 3) == (1, 2, 3)
        with pytest.raises(ValueError):
            p.interval(3, 1)

    def test_interval_of_length_two_in_gamma(self, deg2):
        g = build_gamma("ek", deg2)
        pair = AdmissiblePair((1, 2), mono("x3^2", 3))
        ranks = g.ranks()
        length2 = [
            e for e in g.interval_set(BOTTOM, pair) if ranks[pair] - ranks[e] == 2
        ]
        for e in length2:
            assert len(g.interval(e, pair)) == 4

    def test_dual_involution(self, deg2):
        g = build_gamma("ek", deg2)
        assert g.dual().dual() == g

    def test_maximal_chains_of_chain(self):
        assert chain_poset(3).maximal_chains() == [(0, 1, 2)]

    def test_three_chain_predicates(self):
        # a 3-chain has the interval [0, 2] of length 2 with only 3 elements,
        # so it is not thin; it is pure and bounded
        p = chain_poset(3)
        assert not p.is_thin()
        assert p.is_pure()
        assert p.is_bounded()

    def test_ungraded_thinness_path(self):
        # two chains of different lengths between x and z: not graded, and
        # the interval [x, v] of length 2 has only 3 elements
        p = FinitePoset(
            "xyzwv", [("x", "y"), ("y", "z"), ("x", "w"), ("w", "v"), ("v", "z")]
        )
        assert p.ranks() is None
        assert not p.is_thin()

    def test_restrict_recomputes_covers(self):
        p = chain_poset(4)
        q = p.restrict([0, 2, 3])
        assert (0, 2) in q.covers and len(q.covers) == 2


class TestOrderComplex:
    def test_antichain(self):
        p = FinitePoset(range(4), [])
        data = p.order_complex()
        assert data.f_vector() == (4,)

    def test_dual_has_same_complex(self, tri_sq):
        g = build_gamma("ek", tri_sq)
        assert set(g.order_complex().facets) == set(g.dual().order_complex().facets)

    def test_drop_bottom(self, deg2):
        g = build_gamma("ek", deg2)
        data = g.order_complex(drop_bottom=True)
        assert data.dim() == 2
        assert len(data.facets) == 20
        assert BOTTOM not in data.vertices

    def test_facets_incomparable(self):
        with pytest.raises(ValueError, match="incomparable"):
            SimplicialComplexData((1, 2, 3), (frozenset({0, 1}), frozenset({0})))


class TestBuildGamma:
    def test_degree2_size(self, deg2):
        g = build_gamma("ek", deg2)
        assert len(g) == 18
        assert len(g.minimal_elements()) == 1

    def test_principal(self):
        g = build_gamma("ek", ideal(1, "x1"))
        assert len(g) == 2
        assert len(g.covers) == 1

    def test_covers_match_differential(self, deg2):
        check_cover_support(build_gamma("ek", deg2), ek_complex(deg2))
        check_cover_support(build_gamma("modified", deg2), modified_complex(deg2))

    def test_worked_cover_set(self, deg2):
        g = build_gamma("ek", deg2)
        pair = AdmissiblePair((1, 2), mono("x3^2", 3))
        downs = set(g.down_covers(pair))
        assert downs == {
            AdmissiblePair((2,), mono("x3^2", 3)),
            AdmissiblePair((1,), mono("x3^2", 3)),
            AdmissiblePair((2,), mono("x1*x3", 3)),
            AdmissiblePair((1,), mono("x2*x3", 3)),
        }

    def test_thin_on_random_ideals(self):
        rng = random.Random(61)
        for _ in range(10):
            J = random_borel_ideal(rng)
            assert build_gamma("ek", J).is_thin()
            assert build_gamma("modified", J).is_thin()

    def test_graded_with_bottom_at_zero(self, tri_tri):
        g = build_gamma("modified", tri_tri)
        ranks = g.ranks()
        assert ranks[BOTTOM] == 0
        assert max(ranks.values()) == 3

    def _two_cell_shapes(self, poset):
        ranks = poset.ranks()
        return sorted(
            len(poset.down_covers(e)) for e in poset.elements if ranks[e] == 3
        )

    def test_cell_shapes_match_figures(self, tri_sq, tri_tri, deg2):
        # square-triangle ideal: the modified complex glues a square to a
        # triangle, the classical one two triangles; the two-triangle ideal
        # gives two triangles either way; the degree-2 ideal one square plus
        # two triangles
        assert self._two_cell_shapes(build_gamma("modified", tri_sq)) == [3, 4]
        assert self._two_cell_shapes(build_gamma("ek", tri_sq)) == [3, 3]
        assert self._two_cell_shapes(build_gamma("modified", tri_tri)) == [3, 3]
        assert self._two_cell_shapes(build_gamma("ek", deg2)) == [3, 3, 4]
        assert self._two_cell_shapes(build_gamma("modified", deg2)) == [3, 3, 4]


class TestIsomorphism:
    def test_reflexive(self, deg2):
        g = build_gamma("ek", deg2)
        assert poset_isomorphic(g, g)

    def test_degree2_kinds_agree(self, deg2):
        assert poset_isomorphic(
            build_gamma("ek", deg2), build_gamma("modified", deg2)
        )

    def test_degree4_kinds_differ(self, deg4):
        assert not poset_isomorphic(
            build_gamma("ek", deg4), build_gamma("modified", deg4)
        )

    def test_size_mismatch(self):
        assert not poset_isomorphic(chain_poset(3), chain_poset(4))

    def test_relabeled_chain(self):
        p = FinitePoset("xyz", [("x", "y"), ("y", "z")])
        assert poset_isomorphic(p, chain_poset(3))


class TestDotExport:
    def test_contains_nodes_edges_ranks(self, intro):
        g = build_gamma("modified", intro)
        dot = poset_to_dot(g)
        assert dot.startswith("digraph")
        assert dot.count("->") == len(g.covers)
        assert "rank=same" in dot

    def test_deterministic(self, deg2):
        g1 = poset_to_dot(build_gamma("ek", deg2))
        g2 = poset_to_dot(build_gamma("ek", deg2))
        assert g1 == g2
