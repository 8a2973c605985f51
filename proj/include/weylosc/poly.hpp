#pragma once

#include "weylosc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylosc {

/// Dense univariate polynomial over the rationals, lowest power first.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and no degree.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly({c}); }

    static Poly monomial(std::size_t power, const Rational& coeff = Rational(1)) {
        std::vector<Rational> c(power + 1);
        c[power] = coeff;
        return Poly(std::move(c));
    }

    /// The polynomial y.
    static Poly identity() { return monomial(1); }

    [[nodiscard]] std::optional<std::size_t> degree() const {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.size() - 1;
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    /// Coefficient of y^i; zero past the degree.
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    [[nodiscard]] std::span<const Rational> coeffs() const { return c_; }

    [[nodiscard]] const Rational& leading() const {
        if (c_.empty()) {
            throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        }
        return c_.back();
    }

    [[nodiscard]] Poly monic() const { return *this * leading().inverse(); }

    [[nodiscard]] Rational eval(const Rational& y) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * y + *it;
        }
        return acc;
    }

    [[nodiscard]] Poly derivative() const {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        }
        return Poly(std::move(d));
    }

    /// f(y + shift).
    [[nodiscard]] Poly shifted(const Rational& shift) const {
        return compose(Poly({shift, Rational(1)}));
    }

    /// f(factor * y).
    [[nodiscard]] Poly scaled(const Rational& factor) const {
        std::vector<Rational> c(c_);
        Rational f(1);
        for (auto& ci : c) {
            ci *= f;
            f *= factor;
        }
        return Poly(std::move(c));
    }

    /// f(g(y)) by Horner's scheme.
    [[nodiscard]] Poly compose(const Poly& g) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * g + Poly::constant(*it);
        }
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero()) {
            return {};
        }
        std::vector<Rational> c(a.c_);
        for (auto& ci : c) {
            ci *= s;
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    [[nodiscard]] std::string str(const char* var = "y") const {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c_[i].str() + ")";
            if (i >= 1) {
                out += std::string("*") + var;
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

/// Polynomial in y and 1/y. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(const Poly& p) {
        auto c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            add_term(static_cast<int>(i), c[i]);
        }
    }

    static LaurentPoly term(int power, const Rational& coeff) {
        LaurentPoly l;
        l.add_term(power, coeff);
        return l;
    }

    static LaurentPoly constant(const Rational& c) { return term(0, c); }

    void add_term(int power, const Rational& coeff) {
        if (coeff.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(power, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Rational coeff(int power) const {
        auto it = terms_.find(power);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] std::optional<int> min_power() const {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return terms_.begin()->first;
    }

    [[nodiscard]] std::optional<int> max_power() const {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return terms_.rbegin()->first;
    }

    /// The ordinary polynomial, if no negative powers are present.
    [[nodiscard]] std::optional<Poly> to_poly() const {
        if (terms_.empty()) {
            return Poly();
        }
        if (terms_.begin()->first < 0) {
            return std::nullopt;
        }
        std::vector<Rational> c(static_cast<std::size_t>(terms_.rbegin()->first) + 1);
        for (const auto& [k, v] : terms_) {
            c[static_cast<std::size_t>(k)] = v;
        }
        return Poly(std::move(c));
    }

    [[nodiscard]] LaurentPoly derivative() const {
        LaurentPoly d;
        for (const auto& [k, v] : terms_) {
            d.add_term(k - 1, v * Rational(k));
        }
        return d;
    }

    /// y^shift * f(y).
    [[nodiscard]] LaurentPoly times_power(int shift) const {
        LaurentPoly r;
        for (const auto& [k, v] : terms_) {
            r.terms_.emplace(k + shift, v);
        }
        return r;
    }

    /// f(factor * y); factor must be nonzero when negative powers are present.
    [[nodiscard]] LaurentPoly scaled(const Rational& factor) const {
        LaurentPoly r;
        for (const auto& [k, v] : terms_) {
            r.add_term(k, v * factor.pow(k));
        }
        return r;
    }

    /// f(y + shift); defined only for ordinary polynomials.
    [[nodiscard]] LaurentPoly shifted(const Rational& shift) const {
        auto p = to_poly();
        if (!p) {
            throw std::domain_error("LaurentPoly: cannot translate a polynomial with negative powers");
        }
        return LaurentPoly(p->shifted(shift));
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, v] : o.terms_) {
            add_term(k, v);
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, v] : o.terms_) {
            add_term(k, -v);
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a * Rational(-1); }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& s) {
        LaurentPoly r;
        if (s.is_zero()) {
            return r;
        }
        for (const auto& [k, v] : a.terms_) {
            r.terms_.emplace(k, v * s);
        }
        return r;
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) { return a * s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, u] : a.terms_) {
            for (const auto& [j, v] : b.terms_) {
                r.add_term(i + j, u * v);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    [[nodiscard]] std::string str(const char* var = "y") const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + it->second.str() + ")";
            if (it->first != 0) {
                out += std::string("*") + var + "^" + std::to_string(it->first);
            }
        }
        return out;
    }

private:
    std::map<int, Rational> terms_;
};

} // namespace weylosc
