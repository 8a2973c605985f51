#pragma once

#include "weylosc/errors.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace weylosc {

/// q-number {n} = 1 + q + ... + q^(n-1); {0} = 0 and {n} = n at q = 1.
inline Rational q_number(std::size_t n, const Rational& q) {
    Rational sum;
    Rational power(1);
    for (std::size_t i = 0; i < n; ++i) {
        sum += power;
        power *= q;
    }
    return sum;
}

/// Normal-ordered word b^k a^m.
struct Word {
    std::size_t b = 0;
    std::size_t a = 0;

    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Element of the q-deformed Heisenberg-Weyl algebra ab - q ba = 1, stored
/// as a sum of normal-ordered words b^k a^m with nonzero coefficients.
///
/// Every value carries the deformation q of its algebra. Binary operations
/// between values with different q throw std::invalid_argument.
class FockPoly {
public:
    explicit FockPoly(Rational q = Rational(1)) : q_(std::move(q)) {}

    static FockPoly word(std::size_t b_power, std::size_t a_power, const Rational& coeff = Rational(1),
                         const Rational& q = Rational(1)) {
        FockPoly f(q);
        f.add(Word{b_power, a_power}, coeff);
        return f;
    }

    static FockPoly identity(const Rational& q = Rational(1)) { return word(0, 0, Rational(1), q); }
    static FockPoly a(const Rational& q = Rational(1)) { return word(0, 1, Rational(1), q); }
    static FockPoly b(const Rational& q = Rational(1)) { return word(1, 0, Rational(1), q); }

    /// P(b) for a polynomial P.
    static FockPoly from_poly_in_b(const Poly& p, const Rational& q = Rational(1)) {
        FockPoly f(q);
        auto c = p.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            f.add(Word{k, 0}, c[k]);
        }
        return f;
    }

    [[nodiscard]] const Rational& q() const { return q_; }
    [[nodiscard]] const std::map<Word, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Rational coeff(std::size_t b_power, std::size_t a_power) const {
        auto it = terms_.find(Word{b_power, a_power});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest power of a over all words; zero for the zero element.
    [[nodiscard]] std::size_t a_degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) {
            d = std::max(d, w.a);
        }
        return d;
    }

    /// True iff the element is c * I for some rational c (including zero).
    [[nodiscard]] bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Word{0, 0});
    }

    void add(const Word& w, const Rational& coeff) {
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    FockPoly& operator+=(const FockPoly& o) {
        require_same_algebra(o);
        for (const auto& [w, c] : o.terms_) {
            add(w, c);
        }
        return *this;
    }
    FockPoly& operator-=(const FockPoly& o) {
        require_same_algebra(o);
        for (const auto& [w, c] : o.terms_) {
            add(w, -c);
        }
        return *this;
    }

    friend FockPoly operator+(FockPoly x, const FockPoly& y) { return x += y; }
    friend FockPoly operator-(FockPoly x, const FockPoly& y) { return x -= y; }
    friend FockPoly operator-(const FockPoly& x) { return x * Rational(-1); }

    friend FockPoly operator*(const FockPoly& x, const Rational& s) {
        FockPoly r(x.q_);
        for (const auto& [w, c] : x.terms_) {
            r.add(w, c * s);
        }
        return r;
    }
    friend FockPoly operator*(const Rational& s, const FockPoly& x) { return x * s; }

    friend FockPoly operator*(const FockPoly& x, const FockPoly& y);

    friend bool operator==(const FockPoly&, const FockPoly&) = default;

    void require_same_algebra(const FockPoly& o) const {
        if (q_ != o.q_) {
            throw std::invalid_argument("FockPoly: operands belong to algebras with different q (" + q_.str() +
                                        " vs " + o.q_.str() + ")");
        }
    }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.str() + ")";
            if (w.b > 0) {
                out += "*b^" + std::to_string(w.b);
            }
            if (w.a > 0) {
                out += "*a^" + std::to_string(w.a);
            }
        }
        return out;
    }

private:
    Rational q_;
    std::map<Word, Rational> terms_;
};

namespace detail {

// a^m b^j in normal order, via a^m b = q^m b a^m + {m} a^(m-1):
//   a^m b^j = q^m b (a^m b^(j-1)) + {m} a^(m-1) b^(j-1).
class Reorderer {
public:
    explicit Reorderer(const Rational& q) : q_(q) {}

    const std::map<Word, Rational>& get(std::size_t m, std::size_t j) {
        auto key = Word{j, m};
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::map<Word, Rational> out;
        if (m == 0 || j == 0) {
            out.emplace(Word{j, m}, Rational(1));
        } else {
            Rational qm = q_.pow(static_cast<long>(m));
            for (const auto& [w, c] : get(m, j - 1)) {
                accumulate(out, Word{w.b + 1, w.a}, qm * c);
            }
            Rational qn = q_number(m, q_);
            if (!qn.is_zero()) {
                for (const auto& [w, c] : get(m - 1, j - 1)) {
                    accumulate(out, w, qn * c);
                }
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    static void accumulate(std::map<Word, Rational>& m, const Word& w, const Rational& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m.erase(it);
            }
        }
    }

    Rational q_;
    std::map<Word, std::map<Word, Rational>> memo_;
};

} // namespace detail

/// Normal-ordered product X Y in the algebra ab - q ba = 1.
inline FockPoly normal_order_product(const FockPoly& x, const FockPoly& y, const Rational& q) {
    if (x.q() != q || y.q() != q) {
        throw std::invalid_argument("normal_order_product: operands do not live in the algebra with q = " + q.str());
    }
    detail::Reorderer reorder(q);
    FockPoly out(q);
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            // b^k (a^m b^j) a^l
            for (const auto& [w, c] : reorder.get(wx.a, wy.b)) {
                out.add(Word{wx.b + w.b, w.a + wy.a}, cx * cy * c);
            }
        }
    }
    return out;
}

inline FockPoly operator*(const FockPoly& x, const FockPoly& y) {
    x.require_same_algebra(y);
    return normal_order_product(x, y, x.q());
}

/// X Y - lambda Y X.
inline FockPoly q_bracket(const FockPoly& x, const FockPoly& y, const Rational& lambda) {
    return x * y - lambda * (y * x);
}

inline FockPoly commutator(const FockPoly& x, const FockPoly& y) { return q_bracket(x, y, Rational(1)); }

/// sl2 generators realized in the undeformed algebra:
/// J+ = b^2 a - n b, J0 = b a - n/2, J- = a.
struct SL2Generators {
    FockPoly jplus;
    FockPoly jzero;
    FockPoly jminus;
    Rational n;
};

inline SL2Generators sl2_generators(const Rational& n) {
    SL2Generators g{FockPoly::word(2, 1) - n * FockPoly::b(), FockPoly::word(1, 1) - (n / Rational(2)) * FockPoly::identity(),
                    FockPoly::a(), n};
    return g;
}

/// Residuals of the sl2 relations; all three vanish for a valid triple.
struct SL2Residuals {
    FockPoly zero_plus;  // [J0, J+] - J+
    FockPoly zero_minus; // [J0, J-] + J-
    FockPoly plus_minus; // [J+, J-] + 2 J0

    [[nodiscard]] bool all_zero() const { return zero_plus.is_zero() && zero_minus.is_zero() && plus_minus.is_zero(); }
};

inline SL2Residuals verify_sl2(const SL2Generators& g) {
    return SL2Residuals{commutator(g.jzero, g.jplus) - g.jplus, commutator(g.jzero, g.jminus) + g.jminus,
                        commutator(g.jplus, g.jminus) + Rational(2) * g.jzero};
}

struct CasimirValue {
    Rational value;
    Rational n;
};

/// C2 = (J+ J- + J- J+)/2 - J0 J0, computed by normal ordering.
/// Throws NotScalar if anything but a multiple of the identity survives.
inline CasimirValue casimir_value(const Rational& n) {
    auto g = sl2_generators(n);
    FockPoly c = Rational(1, 2) * (g.jplus * g.jminus + g.jminus * g.jplus) - g.jzero * g.jzero;
    if (!c.is_scalar()) {
        throw NotScalar("casimir_value: non-scalar remainder " + c.str());
    }
    return CasimirValue{c.coeff(0, 0), n};
}

/// 4 b a^2 - 4 b a + 4 (p + 1/2) a.
inline FockPoly build_hf(const Rational& p, const Rational& q = Rational(1)) {
    FockPoly h(q);
    h.add(Word{1, 2}, Rational(4));
    h.add(Word{1, 1}, Rational(-4));
    h.add(Word{0, 1}, Rational(4) * (p + Rational(1, 2)));
    return h;
}

/// 4 (b + B) a^2 - 4 b a + 4 (p + 1/2) a; reduces to build_hf at B = 0.
inline FockPoly build_hg(const Rational& p, const Rational& B, const Rational& q = Rational(1)) {
    FockPoly h = build_hf(p, q);
    h.add(Word{0, 2}, Rational(4) * B);
    return h;
}

/// Action on P(b)|0>: normal-order H P(b) and drop every word with a > 0.
inline Poly act_on_poly(const FockPoly& h, const Poly& p) {
    FockPoly image = h * FockPoly::from_poly_in_b(p, h.q());
    std::vector<Rational> out;
    for (const auto& [w, c] : image.terms()) {
        if (w.a != 0) {
            continue;
        }
        if (out.size() <= w.b) {
            out.resize(w.b + 1);
        }
        out[w.b] += c;
    }
    return Poly(std::move(out));
}

} // namespace weylosc
