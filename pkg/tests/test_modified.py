import random

import pytest

from ekcells import (
    AdmissiblePairTilde,
    BiMonomial,
    admissible_tilde,
    b_tilde_set,
    bpol_monomial,
    ek_complex,
    g_shift,
    j_index,
    modified_complex,
    random_borel_ideal,
)
from ekcells.verification import check_d2, check_minimality, check_multidegrees
from conftest import ideal, mono


class TestJIndex:
    def test_big_monomial(self):
        m = mono("x1^2*x4*x6^2", 6)
        assert j_index(m, 3) == 3
        assert j_index(m, 4) == 4
        assert j_index(m, 5) == 4

    def test_no_exponents_below(self):
        assert j_index(mono("x2^2", 2), 1) == 1

    def test_range(self):
        with pytest.raises(ValueError):
            j_index(mono("x2^2", 2), 2)


class TestAdmissibleTilde:
    def test_counts_match_classical(self, deg2):
        for q in range(4):
            assert len(admissible_tilde(deg2, q)) == [6, 8, 3, 0][q]

    def test_maximal_pair_form(self):
        m = mono("x1^2*x4*x6^2", 6)
        full = AdmissiblePairTilde((1, 2, 3, 4, 5), m)
        assert full.pairs == ((1, 3), (2, 3), (3, 3), (4, 4), (5, 4))

    def test_pair_never_divides_polarization(self):
        rng = random.Random(41)
        for _ in range(20):
            J = random_borel_ideal(rng)
            for q in range(1, 4):
                for pair in admissible_tilde(J, q):
                    wm = pair.bimonomial()
                    for i, j in pair.pairs:
                        assert not BiMonomial.variable(i, j).divides(wm)

    def test_q0(self, tri_tri):
        pairs = admissible_tilde(tri_tri, 0)
        assert len(pairs) == 5
        assert all(p.F == () for p in pairs)

    def test_requires_borel(self):
        with pytest.raises(ValueError):
            admissible_tilde(ideal(3, "x1^2", "x1*x2", "x2^2", "x2*x3"), 0)


class TestBTildeSet:
    def test_intro_example(self, intro):
        # m_<1> of x2^3 is g(x1*x2^2) = x1*x2, and the empty pair is admissible
        assert b_tilde_set(intro, (1,), mono("x2^3", 2)) == (1,)

    def test_empty(self, intro):
        assert b_tilde_set(intro, (), mono("x2^3", 2)) == ()

    def test_against_brute_force(self):
        rng = random.Random(43)
        for _ in range(15):
            J = random_borel_ideal(rng)
            for q in range(1, 4):
                for pair in admissible_tilde(J, q):
                    got = set(b_tilde_set(J, pair.F, pair.m))
                    expect = set()
                    for i in pair.F:
                        m2 = g_shift(J, pair.m, i)
                        rest = pair.drop(i)
                        if all(k < m2.max_var() for k in rest) and all(
                            j_index(pair.m, k) == j_index(m2, k) for k in rest
                        ):
                            expect.add(i)
                    assert got == expect


class TestModifiedComplex:
    def test_f_vector(self, deg2):
        assert modified_complex(deg2).f_vector() == (6, 8, 3)

    def test_single_term_column(self, intro):
        cplx = modified_complex(intro)
        pair = AdmissiblePairTilde((1,), mono("x1*x2", 2))
        col = cplx.basis[1].index(pair)
        entries = {
            cplx.basis[0][row]: (sign, coeff)
            for row, sign, coeff in cplx.column(1, col)
        }
        # -x[1,2] e(0; x11 x22) + x[2,2] e(0; x11 x12)
        assert entries[AdmissiblePairTilde((), mono("x1*x2", 2))] == (
            -1,
            BiMonomial.variable(1, 2),
        )
        assert entries[AdmissiblePairTilde((), mono("x1^2", 2))] == (
            1,
            BiMonomial.variable(2, 2),
        )

    def test_removed_variable_is_lcm_quotient(self):
        rng = random.Random(47)
        for _ in range(15):
            J = random_borel_ideal(rng)
            for q in range(1, 4):
                for pair in admissible_tilde(J, q):
                    wm = pair.bimonomial()
                    for i, j in pair.pairs:
                        wm2 = bpol_monomial(g_shift(J, pair.m, i))
                        assert wm.lcm(wm2).div(wm) == BiMonomial.variable(i, j)

    def test_rank_equality_with_classical(self):
        rng = random.Random(53)
        for _ in range(20):
            J = random_borel_ideal(rng)
            assert modified_complex(J).ranks == ek_complex(J).ranks

    def test_structure_on_random_ideals(self):
        rng = random.Random(59)
        for _ in range(15):
            J = random_borel_ideal(rng)
            cplx = modified_complex(J)
            check_d2(cplx)
            check_minimality(cplx)
            check_multidegrees(cplx)

    def test_rejects_non_borel(self):
        with pytest.raises(ValueError, match="Borel"):
            modified_complex(ideal(3, "x1^2", "x1*x2", "x2^2", "x2*x3"))

    def test_json_uses_pair_form(self, intro):
        data = modified_complex(intro).to_json_dict()
        assert data["ring"] == {"type": "S~", "n": 2, "d": 3}
        lbl = data["basis"][1][0]
        assert isinstance(lbl["F"][0], list) and len(lbl["F"][0]) == 2
        coeff = data["diffs"][0]["entries"][0]["coeff_exponents"]
        assert isinstance(coeff[0], list) and len(coeff[0]) == 3
