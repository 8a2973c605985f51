#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/matrix.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"
#include "weylosc/realize.hpp"
#include "weylosc/serialize.hpp"
#include "weylosc/specfun.hpp"
#include "weylosc/spectral.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Fixed-grid verification suites behind `weylosc verify`. Grids are part of
// the code, not user input, so every run produces the same report.

namespace weylosc::verify {

struct Case {
    std::string name;
    json inputs;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Case> cases;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : cases) {
            f += c.pass ? 0 : 1;
        }
        return f;
    }
    [[nodiscard]] bool pass() const { return failures() == 0; }
};

inline json to_json(const Case& c) {
    return json{{"name", c.name}, {"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}};
}

inline json to_json(const SuiteReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases) {
        cases.push_back(to_json(c));
    }
    return json{{"suite", r.suite},
                {"cases", std::move(cases)},
                {"notes", r.notes},
                {"failures", r.failures()},
                {"pass", r.pass()}};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"heisenberg", "sl2",        "casimir", "spectrum", "isospectral",
                                                "transplant", "kratzer",    "parity",  "qpencil"};
    return names;
}

namespace grids {
inline std::vector<Rational> p_values() { return {Rational(0), Rational(1), Rational(5, 2)}; }
inline std::vector<Rational> steps() { return {Rational(1), Rational(1, 2), Rational(-1, 3)}; }
inline std::vector<Rational> q_spectrum() { return {Rational(2), Rational(1, 2), Rational(3, 7)}; }
inline std::vector<Rational> q_heisenberg() { return {Rational(2), Rational(1, 3), Rational(7, 5)}; }
inline std::vector<Rational> hg_B() { return {Rational(1), Rational(-2, 3)}; }
inline std::vector<Rational> sl2_n() { return {Rational(0), Rational(1), Rational(2), Rational(3), Rational(7, 2)}; }
inline std::vector<Rational> kratzer_p() { return {Rational(0), Rational(1), Rational(3, 2), Rational(5, 2)}; }
inline std::vector<Rational> omegas() { return {Rational(1), Rational(2)}; }
constexpr std::size_t classic_N = 20;
constexpr std::size_t discrete_N = 16;
constexpr std::size_t transplant_levels = 10;
constexpr std::size_t kratzer_levels = 6;
constexpr std::size_t parity_levels = 8;
constexpr std::size_t heisenberg_samples = 200;
constexpr std::size_t heisenberg_degree = 15;
} // namespace grids

namespace detail {

inline std::string join(const std::vector<Rational>& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) {
            out += ",";
        }
        out += v.str();
    }
    return out;
}

/// Runs body; a thrown library error becomes a failed case with the message as `got`.
inline Case run_case(std::string name, json inputs, std::string expected,
                     const std::function<std::pair<std::string, bool>()>& body) {
    Case c{std::move(name), std::move(inputs), std::move(expected), {}, false};
    try {
        auto [got, ok] = body();
        c.got = std::move(got);
        c.pass = ok;
    } catch (const std::exception& e) {
        c.got = std::string("error: ") + e.what();
        c.pass = false;
    }
    return c;
}

/// Deterministic random polynomial with small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::size_t d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& ci : c) {
        ci = Rational(num(rng), den(rng));
    }
    return Poly(std::move(c));
}

inline std::vector<Rational> reference_levels(SpectrumKind kind, std::size_t top, const Rational& q) {
    std::vector<Rational> out;
    for (std::size_t n = 0; n <= top; ++n) {
        out.push_back(reference_spectrum(kind, n, q));
    }
    return out;
}

} // namespace detail

inline SuiteReport heisenberg_suite() {
    SuiteReport r{"heisenberg", {}, {}};
    std::vector<Realization> realizations{Realization::differential()};
    for (const auto& d : grids::steps()) {
        realizations.push_back(Realization::finite_difference(d));
    }
    for (const auto& q : grids::q_heisenberg()) {
        realizations.push_back(Realization::q_dilatation(q));
    }
    for (std::size_t idx = 0; idx < realizations.size(); ++idx) {
        const auto& real = realizations[idx];
        r.cases.push_back(detail::run_case(
            "residual " + real.str(),
            json{{"realization", real.str()},
                 {"q", real.algebra_q().str()},
                 {"samples", grids::heisenberg_samples},
                 {"max_degree", grids::heisenberg_degree}},
            "0 nonzero residuals", [&] {
                std::mt19937_64 rng(0x5eed0000ULL + idx);
                std::size_t bad = 0;
                for (std::size_t s = 0; s < grids::heisenberg_samples; ++s) {
                    Poly f = detail::random_poly(rng, grids::heisenberg_degree);
                    bad += heisenberg_residual(real, real.algebra_q(), f).is_zero() ? 0 : 1;
                }
                return std::pair{std::to_string(bad) + " nonzero residuals", bad == 0};
            }));
        r.cases.push_back(detail::run_case("vacuum " + real.str(), json{{"realization", real.str()}}, "0", [&] {
            Poly v = vacuum_image(real);
            return std::pair{v.str(), v.is_zero()};
        }));
    }
    // Opposite-sign Jackson derivative, -D_q, probed on f = y^3 at q = 2.
    {
        Rational q(2);
        Realization real = Realization::q_dilatation(q);
        Poly f = Poly::monomial(3);
        Poly flipped = -real.apply_a(real.apply_b(f)) + q * real.apply_b(real.apply_a(f)) - f;
        r.notes.push_back("Jackson derivative uses denominator (q-1)y; with (1-q)y the combination (ab - q ba - 1) "
                          "applied to y^3 at q=2 gives " + flipped.str() + " instead of 0");
    }
    return r;
}

inline SuiteReport sl2_suite() {
    SuiteReport r{"sl2", {}, {}};
    for (const auto& n : grids::sl2_n()) {
        r.cases.push_back(detail::run_case("sl2 relations n=" + n.str(), json{{"n", n.str()}},
                                           "[J0,J+]=J+, [J0,J-]=-J-, [J+,J-]=-2J0", [&] {
                                               auto res = verify_sl2(sl2_generators(n));
                                               std::string got = "residuals: " + res.zero_plus.str() + "; " +
                                                                 res.zero_minus.str() + "; " + res.plus_minus.str();
                                               return std::pair{got, res.all_zero()};
                                           }));
    }
    for (const auto& q : {Rational(2), Rational(1, 3)}) {
        r.cases.push_back(detail::run_case("q-Borel q=" + q.str(), json{{"q", q.str()}},
                                           "q (J0 J-) - (J- J0) = -J- with J0 = ba, J- = a", [&] {
                                               FockPoly j0 = FockPoly::word(1, 1, Rational(1), q);
                                               FockPoly jm = FockPoly::a(q);
                                               FockPoly lhs = q * (j0 * jm) - jm * j0;
                                               return std::pair{lhs.str(), lhs == -jm};
                                           }));
    }
    r.notes.push_back("q-deformed Borel relation is verified as q*(J0 J-) - (J- J0) = -J-, equivalently "
                      "J0 J- - (1/q) J- J0 = -(1/q) J-");
    return r;
}

inline SuiteReport casimir_suite() {
    SuiteReport r{"casimir", {}, {}};
    for (long k = 0; k <= 8; ++k) {
        Rational n(k);
        Rational half = n / Rational(2);
        Rational expected = -half * (half + Rational(1));
        r.cases.push_back(detail::run_case("casimir n=" + n.str(), json{{"n", n.str()}}, expected.str(), [&] {
            Rational v = casimir_value(n).value;
            return std::pair{v.str(), v == expected};
        }));
    }
    return r;
}

inline SuiteReport spectrum_suite() {
    SuiteReport r{"spectrum", {}, {}};
    for (const auto& p : grids::p_values()) {
        r.cases.push_back(detail::run_case(
            "classic hf p=" + p.str(), json{{"p", p.str()}, {"N", grids::classic_N}, {"realization", "differential"}},
            "E_n = -4n; eigenpoly = monic L_n^(p-1/2)", [&] {
                auto rep = eigensolve_flag(realize_matrix(build_hf(p), Realization::differential(), grids::classic_N));
                bool ok = rep.eigenvalues() == detail::reference_levels(SpectrumKind::classic, grids::classic_N, 1);
                for (const auto& l : rep.levels) {
                    ok = ok && l.eigenpoly == laguerre(l.n, p - Rational(1, 2)).monic();
                }
                return std::pair{detail::join(rep.eigenvalues()), ok};
            }));
    }
    for (const auto& q : grids::q_spectrum()) {
        r.cases.push_back(detail::run_case(
            "q-plain hf q=" + q.str(), json{{"p", "0"}, {"q", q.str()}, {"N", grids::discrete_N}},
            detail::join(detail::reference_levels(SpectrumKind::q_plain, grids::discrete_N, q)), [&] {
                auto rep =
                    eigensolve_flag(realize_matrix(build_hf(0), Realization::q_dilatation(q), grids::discrete_N));
                auto ref = detail::reference_levels(SpectrumKind::q_plain, grids::discrete_N, q);
                return std::pair{detail::join(rep.eigenvalues()), rep.eigenvalues() == ref};
            }));
    }
    r.cases.push_back(detail::run_case("q=-1 degeneracy", json{{"q", "-1"}, {"N", 4}}, "DegenerateSpectrum", [] {
        try {
            eigensolve_flag(realize_matrix(build_hf(0), Realization::q_dilatation(-1), 4));
        } catch (const DegenerateSpectrum&) {
            return std::pair{std::string("DegenerateSpectrum"), true};
        }
        return std::pair{std::string("no error"), false};
    }));
    return r;
}

inline SuiteReport isospectral_suite() {
    SuiteReport r{"isospectral", {}, {}};
    for (const auto& p : grids::p_values()) {
        auto diff = eigensolve_flag(realize_matrix(build_hf(p), Realization::differential(), grids::discrete_N));
        for (const auto& d : grids::steps()) {
            r.cases.push_back(detail::run_case(
                "hf differential vs finite_difference p=" + p.str() + " delta=" + d.str(),
                json{{"p", p.str()}, {"delta", d.str()}, {"N", grids::discrete_N}}, "all levels equal", [&] {
                    auto fd =
                        eigensolve_flag(realize_matrix(build_hf(p), Realization::finite_difference(d), grids::discrete_N));
                    auto cmp = isospectral_compare(diff, fd);
                    return std::pair{cmp.isospectral ? std::string("all levels equal") : detail::join(fd.eigenvalues()),
                                     cmp.isospectral};
                }));
        }
        for (const auto& B : grids::hg_B()) {
            r.cases.push_back(detail::run_case(
                "hg differential p=" + p.str() + " B=" + B.str(),
                json{{"p", p.str()}, {"B", B.str()}, {"N", grids::discrete_N}}, "isospectral with hf", [&] {
                    auto hg = eigensolve_flag(realize_matrix(build_hg(p, B), Realization::differential(), grids::discrete_N));
                    bool ok = isospectral_compare(diff, hg).isospectral;
                    return std::pair{ok ? std::string("isospectral with hf") : detail::join(hg.eigenvalues()), ok};
                }));
            r.cases.push_back(detail::run_case(
                "hg shifted Laguerre p=" + p.str() + " B=" + B.str(),
                json{{"p", p.str()}, {"B", B.str()}, {"N", grids::discrete_N}},
                "one (alpha, shift) fits every level n>=2", [&] {
                    auto hg = eigensolve_flag(realize_matrix(build_hg(p, B), Realization::differential(), grids::discrete_N));
                    std::optional<ShiftedLaguerreFit> first;
                    bool ok = true;
                    for (const auto& l : hg.levels) {
                        if (l.n < 2) {
                            continue;
                        }
                        auto fit = fit_shifted_laguerre(l.eigenpoly);
                        if (!fit) {
                            ok = false;
                            break;
                        }
                        if (!first) {
                            first = fit;
                        }
                        ok = ok && fit->alpha == first->alpha && fit->shift == first->shift;
                    }
                    // Levels 0 and 1 are fixed by the fit as well.
                    if (ok && first) {
                        for (std::size_t n = 0; n < 2; ++n) {
                            ok = ok && hg.levels[n].eigenpoly == laguerre(n, first->alpha).monic().shifted(first->shift);
                        }
                    }
                    std::string got = first ? "alpha=" + first->alpha.str() + " shift=" + first->shift.str() : "no fit";
                    return std::pair{got, ok};
                }));
            for (const auto& d : grids::steps()) {
                r.cases.push_back(detail::run_case(
                    "hg four-point p=" + p.str() + " B=" + B.str() + " delta=" + d.str(),
                    json{{"p", p.str()}, {"B", B.str()}, {"delta", d.str()}, {"N", grids::discrete_N}},
                    "offsets -1,0,1,2; c(+2) = " + (Rational(4) * B / (d * d)).str() + "; E_n = -4n", [&] {
                        Stencil st = stencil_of(build_hg(p, B), Realization::finite_difference(d));
                        std::string offsets;
                        for (const auto& [j, c] : st.terms) {
                            offsets += (offsets.empty() ? "" : ",") + std::to_string(j);
                        }
                        bool ok = offsets == "-1,0,1,2" &&
                                  st.coeff(2) == LaurentPoly::constant(Rational(4) * B / (d * d));
                        auto rep = eigensolve_flag(
                            realize_matrix(build_hg(p, B), Realization::finite_difference(d), grids::discrete_N));
                        ok = ok && rep.eigenvalues() == detail::reference_levels(SpectrumKind::classic, grids::discrete_N, 1);
                        return std::pair{"offsets " + offsets + "; c(+2) = " + st.coeff(2).str(), ok};
                    }));
            }
        }
    }
    {
        FockPoly alt = build_hf(0);
        alt.add(Word{0, 1}, Rational(-4));
        r.notes.push_back("hg(p,B) uses linear coefficient 4(p+1/2) so that hg(p,0) = hf(p); the constant 4(p-1/2) "
                          "would differ from hf(p) by " + (alt - build_hf(0)).str());
    }
    r.notes.push_back("hg(p,B) eigenpolynomials are monic L_n^(alpha)(y + shift) with the fitted alpha and shift "
                      "listed per case; the Laguerre index moves with B");
    return r;
}

inline SuiteReport transplant_suite() {
    SuiteReport r{"transplant", {}, {}};
    for (const auto& p : grids::p_values()) {
        Rational alpha = p - Rational(1, 2);
        for (const auto& d : grids::steps()) {
            json inputs{{"p", p.str()}, {"delta", d.str()}};
            r.cases.push_back(detail::run_case(
                "modified Laguerre stencil eigenfunctions p=" + p.str() + " delta=" + d.str(), inputs,
                "stencil(L^_n) = -4n L^_n for n <= 10", [&] {
                    Stencil st = stencil_of(build_hf(p), Realization::finite_difference(d));
                    std::size_t bad = 0;
                    for (std::size_t n = 0; n <= grids::transplant_levels; ++n) {
                        Poly f = modified_laguerre(n, alpha, d);
                        LaurentPoly img = st.apply(f);
                        bad += img == LaurentPoly(f) * Rational(-4 * static_cast<long>(n)) ? 0 : 1;
                    }
                    return std::pair{std::to_string(bad) + " failing levels", bad == 0};
                }));
            r.cases.push_back(detail::run_case(
                "finite-difference eigenpolynomials p=" + p.str() + " delta=" + d.str(),
                json{{"p", p.str()}, {"delta", d.str()}, {"N", grids::discrete_N}},
                "E_n = -4n; eigenpoly = monic modified Laguerre", [&] {
                    auto m = realize_matrix(build_hf(p), Realization::finite_difference(d), grids::discrete_N);
                    auto rep = eigensolve_flag(m);
                    bool ok = rep.eigenvalues() == detail::reference_levels(SpectrumKind::classic, grids::discrete_N, 1);
                    for (const auto& l : rep.levels) {
                        Poly mono = basis_transplant(l.eigenpoly, rep.basis, BasisKind::monomial());
                        ok = ok && mono == modified_laguerre(l.n, alpha, d).monic();
                    }
                    return std::pair{detail::join(rep.eigenvalues()), ok};
                }));
            r.cases.push_back(detail::run_case(
                "quasi-monomial matrix equals differential matrix p=" + p.str() + " delta=" + d.str(),
                json{{"p", p.str()}, {"delta", d.str()}, {"N", grids::discrete_N}}, "entrywise equal", [&] {
                    auto fd = realize_matrix(build_hf(p), Realization::finite_difference(d), grids::discrete_N);
                    auto diff = realize_matrix(build_hf(p), Realization::differential(), grids::discrete_N);
                    bool ok = fd.rows() == diff.rows();
                    for (std::size_t i = 0; ok && i < fd.rows(); ++i) {
                        for (std::size_t j = 0; j < fd.cols(); ++j) {
                            ok = ok && fd.at(i, j) == diff.at(i, j);
                        }
                    }
                    return std::pair{ok ? std::string("entrywise equal") : std::string("differs"), ok};
                }));
        }
    }
    {
        Stencil st = stencil_of(build_hf(0), Realization::finite_difference(1));
        Poly wrong = modified_laguerre(2, Rational(1, 2), 1);
        bool still = st.apply(wrong) == LaurentPoly(wrong) * Rational(-8);
        r.notes.push_back(std::string("modified Laguerre polynomials use index alpha = p - 1/2; with alpha = p + 1/2 the "
                                      "level-2 eigenfunction check at p=0, delta=1 ") +
                          (still ? "also passes" : "fails"));
    }
    return r;
}

inline SuiteReport kratzer_suite() {
    SuiteReport r{"kratzer", {}, {}};
    for (const auto& p : grids::kratzer_p()) {
        for (const auto& w : grids::omegas()) {
            std::vector<Rational> expected;
            for (std::size_t n = 0; n <= grids::kratzer_levels; ++n) {
                expected.push_back(w * (Rational(4 * static_cast<long>(n)) + Rational(2) * p + Rational(1)));
            }
            r.cases.push_back(detail::run_case("eigencheck p=" + p.str() + " omega=" + w.str(),
                                               json{{"p", p.str()}, {"omega", w.str()}, {"levels", grids::kratzer_levels}},
                                               detail::join(expected), [&] {
                                                   std::vector<Rational> got;
                                                   for (std::size_t n = 0; n <= grids::kratzer_levels; ++n) {
                                                       got.push_back(kratzer_eigencheck(n, p, w));
                                                   }
                                                   return std::pair{detail::join(got), got == expected};
                                               }));
            Rational e0 = w * (Rational(2) * p + Rational(1));
            r.cases.push_back(detail::run_case(
                "gauge p=" + p.str() + " omega=" + w.str(), json{{"p", p.str()}, {"omega", w.str()}},
                "E0 = " + e0.str() + " and zero residual for P = 1, y, L_n^(p-1/2)", [&] {
                    std::vector<Poly> probes{Poly::constant(Rational(1)), Poly::identity()};
                    for (std::size_t n = 0; n <= grids::kratzer_levels; ++n) {
                        probes.push_back(laguerre(n, p - Rational(1, 2)));
                    }
                    bool ok = true;
                    for (const auto& probe : probes) {
                        auto g = gauge_conjugate_check(probe, p, w);
                        ok = ok && g.ground_energy == e0 && g.residual.q.is_zero();
                    }
                    return std::pair{"E0 = " + e0.str(), ok};
                }));
        }
    }
    r.notes.push_back("Kratzer levels at fixed p are omega(4n+2p+1): spacing 4*omega within a parity family, "
                      "2*omega when the p=0 and p=1 families are interleaved");
    return r;
}

inline SuiteReport parity_suite() {
    SuiteReport r{"parity", {}, {}};
    for (int p : {0, 1}) {
        for (const auto& w : grids::omegas()) {
            for (std::size_t n = 0; n <= grids::parity_levels; ++n) {
                Rational pattern = Rational(2).pow(static_cast<long>(2 * n) + p) *
                                   factorial(static_cast<unsigned>(n)) * Rational(n % 2 == 0 ? 1 : -1);
                r.cases.push_back(detail::run_case(
                    "parity n=" + std::to_string(n) + " p=" + std::to_string(p) + " omega=" + w.str(),
                    json{{"n", n}, {"p", p}, {"omega", w.str()}}, pattern.str(), [&] {
                        Rational ratio = parity_relation_ratio(n, p, w);
                        return std::pair{ratio.str(), ratio == pattern};
                    }));
            }
        }
    }
    r.notes.push_back("parity ratios are reported with sqrt(omega)^p factored out; they follow (-1)^n 2^(2n+p) n!");
    return r;
}

inline SuiteReport qpencil_suite() {
    SuiteReport r{"qpencil", {}, {}};
    for (const auto& q : grids::q_spectrum()) {
        auto m = realize_matrix(build_hf(0), Realization::q_dilatation(q), grids::discrete_N);
        for (int s : {-1, -2, 1, 2}) {
            std::vector<Rational> expected;
            for (std::size_t n = 0; n <= grids::discrete_N; ++n) {
                expected.push_back(s == -1   ? reference_spectrum(SpectrumKind::q_scaled_once, n, q)
                                   : s == -2 ? reference_spectrum(SpectrumKind::q_scaled_twice, n, q)
                                             : pencil_reference(n, q, s));
            }
            std::string label = s == -1   ? "-4 q^n {n}"
                                : s == -2 ? "-4 q^(2n) {n}"
                                          : "-4 q^(-" + std::to_string(s) + "n) {n} (opposite convention)";
            r.cases.push_back(detail::run_case(
                "pencil q=" + q.str() + " s=" + std::to_string(s),
                json{{"q", q.str()}, {"s", s}, {"N", grids::discrete_N}}, label, [&] {
                    auto rep = pencil_solve(m, s, q);
                    return std::pair{detail::join(rep.eigenvalues()), rep.eigenvalues() == expected};
                }));
        }
    }
    {
        auto m = realize_matrix(build_hf(0), Realization::differential(), grids::discrete_N);
        auto plain = eigensolve_flag(m);
        for (int s : {-2, -1, 1, 2}) {
            r.cases.push_back(detail::run_case("pencil q=1 s=" + std::to_string(s),
                                               json{{"q", "1"}, {"s", s}, {"N", grids::discrete_N}},
                                               "coincides with -4n", [&] {
                                                   auto rep = pencil_solve(m, s, Rational(1));
                                                   bool ok = rep.eigenvalues() == plain.eigenvalues();
                                                   for (std::size_t i = 0; ok && i < rep.levels.size(); ++i) {
                                                       ok = rep.levels[i].eigenpoly == plain.levels[i].eigenpoly;
                                                   }
                                                   return std::pair{detail::join(rep.eigenvalues()), ok};
                                               }));
        }
    }
    // Dilatation stencil against the closed forms with either sign of (1-q).
    for (const auto& q : grids::q_spectrum()) {
        for (const auto& p : grids::p_values()) {
            r.cases.push_back(detail::run_case(
                "dilatation stencil q=" + q.str() + " p=" + p.str(), json{{"q", q.str()}, {"p", p.str()}},
                "c(+2) = 4/(y q (q-1)^2); c(+1), c(0) with factors q(q-1), (q-1)", [&] {
                    Stencil st = stencil_of(build_hf(p), Realization::q_dilatation(q));
                    Rational r0 = p + Rational(1, 2);
                    Rational qm1 = q - Rational(1);
                    Rational den = q * qm1 * qm1;
                    LaurentPoly y = LaurentPoly::term(1, Rational(1));
                    LaurentPoly inv_y = LaurentPoly::term(-1, Rational(1));
                    auto plus_one = [&](const Rational& factor) {
                        LaurentPoly num = LaurentPoly::constant(Rational(1) + q) + (y - LaurentPoly::constant(r0)) * (q * factor);
                        return num * inv_y * (Rational(-4) / den);
                    };
                    auto zero = [&](const Rational& factor) {
                        LaurentPoly num = LaurentPoly::constant(Rational(1)) + (y - LaurentPoly::constant(r0)) * factor;
                        return num * inv_y * (Rational(4) / (qm1 * qm1));
                    };
                    bool top = st.coeff(2) == inv_y * (Rational(4) / den);
                    bool derived = st.coeff(1) == plus_one(qm1) && st.coeff(0) == zero(qm1);
                    // a -> -a flips the sign of every odd power of a.
                    FockPoly hf = build_hf(p);
                    FockPoly flipped(Rational(1));
                    for (const auto& [w, c] : hf.terms()) {
                        flipped.add(w, w.a % 2 == 0 ? c : -c);
                    }
                    Stencil st_flipped = stencil_of(flipped, Realization::q_dilatation(q));
                    bool opposite = st_flipped.coeff(1) == plus_one(-qm1) && st_flipped.coeff(0) == zero(-qm1) &&
                                   st_flipped.coeff(2) == st.coeff(2);
                    std::string got = std::string("c(+2) ") + (top ? "matches" : "differs") + "; (q-1) forms " +
                                      (derived ? "match" : "differ") + "; (1-q) forms " +
                                      (opposite ? "match under -D_q" : "do not match under -D_q");
                    return std::pair{got, top && derived && st.point_count() == 3};
                }));
        }
    }
    r.notes.push_back("pencil right-hand side is E phi(q^s y): s=-1 gives -4 q^n {n}, s=-2 gives -4 q^(2n) {n}; "
                      "s=+1, +2 give -4 q^(-n) {n}, -4 q^(-2n) {n}");
    r.notes.push_back("dilatation stencil: the phi(qy) and phi(y) coefficients carry q(q-1) and (q-1); the forms with "
                      "q(1-q) and (1-q) are what the opposite-sign Jackson derivative produces");
    return r;
}

inline SuiteReport run_suite(std::string_view name) {
    if (name == "heisenberg") return heisenberg_suite();
    if (name == "sl2") return sl2_suite();
    if (name == "casimir") return casimir_suite();
    if (name == "spectrum") return spectrum_suite();
    if (name == "isospectral") return isospectral_suite();
    if (name == "transplant") return transplant_suite();
    if (name == "kratzer") return kratzer_suite();
    if (name == "parity") return parity_suite();
    if (name == "qpencil") return qpencil_suite();
    throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

inline std::vector<SuiteReport> run_all() {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) {
        out.push_back(run_suite(n));
    }
    return out;
}

} // namespace weylosc::verify
