#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylosc {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper around GMP's mpq_class. The wrapper exists so that
/// expression templates never leak into the rest of the library and so that
/// the canonical string form ("num/den", denominator omitted when 1) has a
/// single home.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    Rational(long num, long den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "a", "-a", "a/b" with integer a, b (b != 0). Whitespace is not accepted.
    static Rational parse(std::string_view text) {
        if (text.empty()) {
            throw std::invalid_argument("Rational: empty string");
        }
        auto valid_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
            throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
        }
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        }
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    [[nodiscard]] std::string str() const {
        if (value_.get_den() == 1) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    [[nodiscard]] const mpz_class& num() const { return value_.get_num(); }
    [[nodiscard]] const mpz_class& den() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) {
            throw std::domain_error("Rational: inverse of zero");
        }
        return Rational(mpq_class(1) / value_);
    }

    /// Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(long e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(n, d));
    }

    [[nodiscard]] double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! as an exact rational.
inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

} // namespace weylosc
