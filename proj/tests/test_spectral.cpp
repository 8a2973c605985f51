#include "weylosc/realize.hpp"
#include "weylosc/spectral.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace weylosc;

TEST_CASE("q-numbers by the sum definition") {
    CHECK(q_number(0, Rational(5)) == Rational(0));
    CHECK(q_number(3, Rational(2)) == Rational(7));
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(q_number(n, Rational(1)) == Rational(static_cast<long>(n)));
    }
    CHECK(q_number(2, Rational(1, 3)) == Rational(4, 3));
}

TEST_CASE("q-number addition rule {m+n} = {m} + q^m {n}") {
    for (const auto& q : {Rational(2), Rational(1, 3), Rational(7, 5)}) {
        for (std::size_t m = 0; m <= 12; ++m) {
            for (std::size_t n = 0; n <= 12; ++n) {
                CHECK(q_number(m + n, q) == q_number(m, q) + q.pow(static_cast<long>(m)) * q_number(n, q));
            }
        }
    }
}

TEST_CASE("flag preservation") {
    CHECK(preserves_flag(realize_matrix(build_hf(Rational(0)), Realization::differential(), 8)));
    OperatorMatrix times_y = realize_matrix(FockPoly::b(), Realization::differential(), 8);
    CHECK_FALSE(preserves_flag(times_y));
    CHECK_FALSE(preserves_top_space(times_y));

    FockPoly jplus = sl2_generators(Rational(2)).jplus;
    OperatorMatrix on_p2 = realize_matrix(jplus, Realization::differential(), 2);
    OperatorMatrix on_p4 = realize_matrix(jplus, Realization::differential(), 4);
    // J+_2 keeps P_2 invariant without respecting the smaller spaces.
    CHECK(preserves_top_space(on_p2));
    CHECK_FALSE(preserves_flag(on_p2));
    CHECK_FALSE(preserves_top_space(on_p4));
    CHECK_FALSE(preserves_flag(on_p4));
}

TEST_CASE("classic spectrum and eigenpolynomials") {
    auto rep = eigensolve_flag(realize_matrix(build_hf(Rational(0)), Realization::differential(), 12));
    REQUIRE(rep.levels.size() == 13);
    for (const auto& l : rep.levels) {
        CHECK(l.eigenvalue == Rational(-4 * static_cast<long>(l.n)));
        CHECK(l.eigenpoly.leading() == Rational(1));
        CHECK(*l.eigenpoly.degree() == l.n);
    }
    CHECK(rep.levels[1].eigenpoly == Poly({Rational(-1, 2), Rational(1)}));
}

TEST_CASE("q-plain spectrum at q = 2") {
    auto rep = eigensolve_flag(realize_matrix(build_hf(Rational(3, 2)), Realization::q_dilatation(Rational(2)), 6));
    std::vector<Rational> expected{0, -4, -12, -28, -60, -124, -252};
    CHECK(rep.eigenvalues() == expected);
}

TEST_CASE("q = -1 collapses the spectrum") {
    OperatorMatrix m = realize_matrix(build_hf(Rational(0)), Realization::q_dilatation(Rational(-1)), 4);
    try {
        eigensolve_flag(m);
        FAIL("expected DegenerateSpectrum");
    } catch (const DegenerateSpectrum& e) {
        const auto& c = e.collisions();
        CHECK(std::find(c.begin(), c.end(), std::pair<std::size_t, std::size_t>{0, 2}) != c.end());
    }
}

TEST_CASE("non-triangular input is rejected") {
    OperatorMatrix times_y = realize_matrix(FockPoly::b(), Realization::differential(), 3);
    CHECK_THROWS_AS(eigensolve_flag(times_y), NotTriangular);
    CHECK_THROWS_AS(pencil_solve(times_y, -1, Rational(2)), NotTriangular);
}

TEST_CASE("pencil spectra for scaled right-hand sides") {
    for (const auto& q : {Rational(2), Rational(1, 2), Rational(3, 7)}) {
        OperatorMatrix m = realize_matrix(build_hf(Rational(1)), Realization::q_dilatation(q), 8);
        auto once = pencil_solve(m, -1, q);
        auto twice = pencil_solve(m, -2, q);
        auto opposite = pencil_solve(m, 1, q);
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(once.levels[n].eigenvalue == reference_spectrum(SpectrumKind::q_scaled_once, n, q));
            CHECK(twice.levels[n].eigenvalue == reference_spectrum(SpectrumKind::q_scaled_twice, n, q));
            CHECK(opposite.levels[n].eigenvalue ==
                  Rational(-4) * q_number(n, q) / q.pow(static_cast<long>(n)));
            // Re-multiplication: H v = E v(q^s y).
            const auto& l = once.levels[n];
            CHECK(m.apply(l.eigenpoly) == l.eigenpoly.scaled(q.inverse()) * l.eigenvalue);
        }
    }
}

TEST_CASE("pencil at q = 1 coincides with the plain problem") {
    OperatorMatrix m = realize_matrix(build_hf(Rational(5, 2)), Realization::differential(), 10);
    auto plain = eigensolve_flag(m);
    for (int s : {-2, -1, 1, 2}) {
        auto rep = pencil_solve(m, s, Rational(1));
        REQUIRE(rep.levels.size() == plain.levels.size());
        for (std::size_t i = 0; i < rep.levels.size(); ++i) {
            CHECK(rep.levels[i] == plain.levels[i]);
        }
    }
    CHECK_THROWS_AS(pencil_solve(m, 3, Rational(1)), std::invalid_argument);
}

TEST_CASE("reference spectra") {
    CHECK(reference_spectrum(SpectrumKind::classic, 5) == Rational(-20));
    CHECK(reference_spectrum(SpectrumKind::q_plain, 2, Rational(1, 3)) == Rational(-16, 3));
    CHECK(reference_spectrum(SpectrumKind::q_scaled_once, 2, Rational(2)) == Rational(-48));
    CHECK(reference_spectrum(SpectrumKind::q_scaled_twice, 1, Rational(3)) == Rational(-36));
    for (std::size_t n = 0; n < 6; ++n) {
        for (auto k : {SpectrumKind::q_plain, SpectrumKind::q_scaled_once, SpectrumKind::q_scaled_twice}) {
            CHECK(reference_spectrum(k, n, Rational(1)) == reference_spectrum(SpectrumKind::classic, n));
        }
    }
}

TEST_CASE("isospectral comparisons") {
    auto diff = eigensolve_flag(realize_matrix(build_hf(Rational(1)), Realization::differential(), 10));
    auto fd = eigensolve_flag(realize_matrix(build_hf(Rational(1)), Realization::finite_difference(Rational(1, 2)), 10));
    auto cmp = isospectral_compare(diff, fd);
    CHECK(cmp.isospectral);
    CHECK_FALSE(cmp.eigenpoly_equal.has_value());

    auto hg = eigensolve_flag(realize_matrix(build_hg(Rational(0), Rational(1)), Realization::differential(), 10));
    auto hf = eigensolve_flag(realize_matrix(build_hf(Rational(0)), Realization::differential(), 10));
    auto cmp2 = isospectral_compare(hg, hf);
    CHECK(cmp2.isospectral);
    REQUIRE(cmp2.eigenpoly_equal.has_value());
    CHECK((*cmp2.eigenpoly_equal)[1]);
    CHECK_FALSE((*cmp2.eigenpoly_equal)[2]);

    auto q2 = eigensolve_flag(realize_matrix(build_hf(Rational(0)), Realization::q_dilatation(Rational(2)), 10));
    auto cmp3 = isospectral_compare(q2, hf);
    CHECK_FALSE(cmp3.isospectral);
    CHECK(cmp3.eigenvalue_equal[0]);
    CHECK(cmp3.eigenvalue_equal[1]);
    for (std::size_t n = 2; n <= 10; ++n) {
        CHECK_FALSE(cmp3.eigenvalue_equal[n]);
    }

    auto short_rep = eigensolve_flag(realize_matrix(build_hf(Rational(0)), Realization::differential(), 3));
    CHECK_THROWS_AS(isospectral_compare(short_rep, hf), std::invalid_argument);
}

TEST_CASE("spectrum does not depend on the step, its sign, or B") {
    for (const auto& p : {Rational(0), Rational(1), Rational(5, 2)}) {
        auto ref = eigensolve_flag(realize_matrix(build_hf(p), Realization::differential(), 12)).eigenvalues();
        for (const auto& d : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(-1, 3)}) {
            CHECK(eigensolve_flag(realize_matrix(build_hf(p), Realization::finite_difference(d), 12)).eigenvalues() == ref);
        }
        for (const auto& B : {Rational(1), Rational(-2, 3), Rational(7)}) {
            CHECK(eigensolve_flag(realize_matrix(build_hg(p, B), Realization::differential(), 12)).eigenvalues() == ref);
            CHECK(eigensolve_flag(realize_matrix(build_hg(p, B), Realization::finite_difference(Rational(1, 2)), 12))
                      .eigenvalues() == ref);
        }
    }
}

TEST_CASE("eigenpolynomials are stable under flag extension") {
    std::vector<Realization> rs{Realization::differential(), Realization::finite_difference(Rational(-1, 3)),
                                Realization::q_dilatation(Rational(3, 7))};
    for (const auto& r : rs) {
        auto small = eigensolve_flag(realize_matrix(build_hf(Rational(1)), r, 6));
        auto large = eigensolve_flag(realize_matrix(build_hf(Rational(1)), r, 14));
        for (std::size_t n = 0; n <= 6; ++n) {
            CHECK(small.levels[n] == large.levels[n]);
        }
    }
}
