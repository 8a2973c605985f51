#include "weylosc/fock.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>

using namespace weylosc;

namespace {

// Independent oracle: words are raw strings over {a, b}; the leftmost "ab" is
// rewritten as q "ba" + "" until every word is normal ordered.
FockPoly swap_oracle(const std::map<std::string, Rational>& input, const Rational& q) {
    std::map<std::string, Rational> work = input;
    FockPoly out(q);
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const std::string& w = node.key();
        const Rational& c = node.mapped();
        auto pos = w.find("ab");
        if (pos == std::string::npos) {
            std::size_t nb = 0;
            while (nb < w.size() && w[nb] == 'b') {
                ++nb;
            }
            out.add(Word{nb, w.size() - nb}, c);
            continue;
        }
        std::string swapped = w.substr(0, pos) + "ba" + w.substr(pos + 2);
        std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
        work[swapped] += c * q;
        work[dropped] += c;
    }
    return out;
}

std::string word_string(const Word& w) { return std::string(w.b, 'b') + std::string(w.a, 'a'); }

FockPoly oracle_product(const FockPoly& x, const FockPoly& y) {
    std::map<std::string, Rational> in;
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            in[word_string(wx) + word_string(wy)] += cx * cy;
        }
    }
    return swap_oracle(in, x.q());
}

FockPoly random_fock(std::mt19937_64& rng, const Rational& q) {
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::uniform_int_distribution<std::size_t> power(0, 3);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    FockPoly f(q);
    for (std::size_t i = count(rng); i > 0; --i) {
        f.add(Word{power(rng), power(rng)}, Rational(num(rng), den(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("canonical commutation relation") {
    FockPoly ab = FockPoly::a() * FockPoly::b();
    CHECK(ab == FockPoly::word(1, 1) + FockPoly::identity());

    Rational q(3, 5);
    FockPoly abq = normal_order_product(FockPoly::a(q), FockPoly::b(q), q);
    CHECK(abq == FockPoly::word(1, 1, q, q) + FockPoly::identity(q));
}

TEST_CASE("normal ordering of small products") {
    // a^2 b^2 = b^2 a^2 + 4 ba + 2 at q = 1
    FockPoly p = FockPoly::word(0, 2) * FockPoly::word(2, 0);
    CHECK(p == FockPoly::word(2, 2) + FockPoly::word(1, 1, Rational(4)) + FockPoly::word(0, 0, Rational(2)));

    // a b^2 = q^2 b^2 a + (1+q) b
    for (const auto& q : {Rational(2), Rational(1, 3), Rational(-7, 4)}) {
        FockPoly r = FockPoly::a(q) * FockPoly::word(2, 0, Rational(1), q);
        FockPoly expected = FockPoly::word(2, 1, q * q, q) + FockPoly::word(1, 0, Rational(1) + q, q);
        CHECK(r == expected);
    }
}

TEST_CASE("closed-form reordering agrees with the single-swap oracle") {
    std::mt19937_64 rng(2024);
    for (const auto& q : {Rational(1), Rational(2), Rational(1, 3), Rational(-1)}) {
        for (int trial = 0; trial < 40; ++trial) {
            FockPoly x = random_fock(rng, q);
            FockPoly y = random_fock(rng, q);
            CHECK(x * y == oracle_product(x, y));
        }
    }
}

TEST_CASE("normal-ordered product is associative") {
    std::mt19937_64 rng(7);
    for (const auto& q : {Rational(1), Rational(2), Rational(1, 3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            FockPoly x = random_fock(rng, q);
            FockPoly y = random_fock(rng, q);
            FockPoly z = random_fock(rng, q);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("mixing deformations is rejected") {
    CHECK_THROWS_AS(FockPoly::a(Rational(2)) * FockPoly::b(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(FockPoly::a(Rational(2)) + FockPoly::b(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(normal_order_product(FockPoly::a(), FockPoly::b(), Rational(2)), std::invalid_argument);
}

TEST_CASE("q-brackets") {
    Rational q(5, 2);
    CHECK(q_bracket(FockPoly::a(q), FockPoly::b(q), q) == FockPoly::identity(q));
    FockPoly x = FockPoly::word(2, 1, Rational(3), q) + FockPoly::b(q);
    CHECK(q_bracket(x, x, Rational(1)).is_zero());
}

TEST_CASE("q-deformed Borel relation in its verified form") {
    for (const auto& q : {Rational(2), Rational(1, 3)}) {
        FockPoly j0 = FockPoly::word(1, 1, Rational(1), q);
        FockPoly jm = FockPoly::a(q);
        CHECK(q * (j0 * jm) - jm * j0 == -jm);
        CHECK(q_bracket(j0, jm, q.inverse()) == -(q.inverse() * jm));
    }
}

TEST_CASE("sl2 generators") {
    auto g0 = sl2_generators(Rational(0));
    CHECK(g0.jplus == FockPoly::word(2, 1));
    CHECK(g0.jzero == FockPoly::word(1, 1));
    CHECK(g0.jminus == FockPoly::a());

    auto g2 = sl2_generators(Rational(2));
    CHECK(g2.jplus == FockPoly::word(2, 1) - Rational(2) * FockPoly::b());
    CHECK(g2.jzero == FockPoly::word(1, 1) - FockPoly::identity());

    for (const auto& n : {Rational(0), Rational(1), Rational(2), Rational(3), Rational(7, 2)}) {
        CHECK(verify_sl2(sl2_generators(n)).all_zero());
    }
}

TEST_CASE("Casimir is the scalar -(n/2)(n/2+1)") {
    CHECK(casimir_value(Rational(0)).value == Rational(0));
    CHECK(casimir_value(Rational(2)).value == Rational(-2));
    CHECK(casimir_value(Rational(3)).value == Rational(-15, 4));
    for (long k = 0; k <= 8; ++k) {
        Rational h(k, 2);
        CHECK(casimir_value(Rational(k)).value == -h * (h + Rational(1)));
    }
    for (const auto& n : {Rational(1, 2), Rational(5, 3)}) {
        Rational h = n / Rational(2);
        CHECK(casimir_value(n).value == -h * (h + Rational(1)));
    }
}

TEST_CASE("oscillator builders") {
    FockPoly h0 = build_hf(Rational(0));
    CHECK(h0.coeff(1, 2) == Rational(4));
    CHECK(h0.coeff(1, 1) == Rational(-4));
    CHECK(h0.coeff(0, 1) == Rational(2));
    CHECK(build_hf(Rational(1)).coeff(0, 1) == Rational(6));
    FockPoly hm = build_hf(Rational(-1, 2));
    CHECK(hm.terms().size() == 2);
    CHECK(hm.coeff(0, 1).is_zero());

    CHECK(build_hg(Rational(3, 2), Rational(0)) == build_hf(Rational(3, 2)));
    FockPoly g = build_hg(Rational(0), Rational(1));
    CHECK(g == FockPoly::word(1, 2, Rational(4)) + FockPoly::word(0, 2, Rational(4)) - FockPoly::word(1, 1, Rational(4)) +
                   FockPoly::word(0, 1, Rational(2)));
    CHECK(build_hg(Rational(0), Rational(-2, 3)).coeff(0, 2) == Rational(-8, 3));
}

TEST_CASE("vacuum action of the oscillator") {
    FockPoly h = build_hf(Rational(0));
    CHECK(act_on_poly(h, Poly::constant(Rational(1))).is_zero());
    Poly l1({Rational(1, 2), Rational(-1)});
    CHECK(act_on_poly(h, l1) == Poly({Rational(-2), Rational(4)}));
    CHECK(act_on_poly(h, l1) == l1 * Rational(-4));
}

TEST_CASE("diagonal of the vacuum action is -4{n} and the flag is preserved") {
    for (const auto& q : {Rational(1), Rational(2), Rational(1, 3)}) {
        for (const auto& p : {Rational(0), Rational(1), Rational(5, 2)}) {
            FockPoly h = build_hf(p, q);
            for (std::size_t n = 0; n <= 10; ++n) {
                Poly img = act_on_poly(h, Poly::monomial(n));
                CHECK(img.coeff(n) == Rational(-4) * q_number(n, q));
                CHECK((img.is_zero() || *img.degree() <= n));
                if (q.is_one()) {
                    CHECK(img.coeff(n) == Rational(-4 * static_cast<long>(n)));
                }
            }
        }
    }
}
