#pragma once

#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace weylosc {

/// Graded basis of a polynomial space: monomials y^n, or quasi-monomials
/// y^(n) = y (y - d) ... (y - (n-1) d) for a step d.
class BasisKind {
public:
    enum class Kind { monomial, quasi_monomial };

    BasisKind() = default;

    static BasisKind monomial() { return {}; }

    /// A zero step collapses to the monomial basis.
    static BasisKind quasi_monomial(const Rational& step) {
        BasisKind b;
        if (!step.is_zero()) {
            b.kind_ = Kind::quasi_monomial;
            b.step_ = step;
        }
        return b;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_monomial() const { return kind_ == Kind::monomial; }
    /// Step of the quasi-monomial grid; zero for the monomial basis.
    [[nodiscard]] const Rational& step() const { return step_; }

    [[nodiscard]] std::string str() const {
        return is_monomial() ? std::string("monomial") : "quasi_monomial(" + step_.str() + ")";
    }

    friend bool operator==(const BasisKind&, const BasisKind&) = default;

private:
    Kind kind_ = Kind::monomial;
    Rational step_;
};

/// y (y - step) ... (y - (n-1) step) expanded in monomials.
inline Poly quasi_monomial_expand(std::size_t n, const Rational& step) {
    Poly acc = Poly::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        acc = acc * Poly({-step * Rational(static_cast<long>(i)), Rational(1)});
    }
    return acc;
}

namespace detail {

inline Poly to_monomial(std::span<const Rational> coeffs, const BasisKind& from) {
    if (from.is_monomial()) {
        return Poly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
    }
    Poly acc;
    Poly element = Poly::constant(Rational(1));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) {
            acc += element * coeffs[k];
        }
        element = element * Poly({-from.step() * Rational(static_cast<long>(k)), Rational(1)});
    }
    return acc;
}

// The change of basis is unitriangular, so peel off the top degree repeatedly.
inline Poly from_monomial(const Poly& p, const BasisKind& to) {
    if (to.is_monomial() || p.is_zero()) {
        return p;
    }
    std::size_t n = *p.degree();
    std::vector<Rational> out(n + 1);
    Poly rest = p;
    while (!rest.is_zero()) {
        std::size_t d = *rest.degree();
        Rational c = rest.leading();
        out[d] = c;
        rest -= quasi_monomial_expand(d, to.step()) * c;
    }
    return Poly(std::move(out));
}

} // namespace detail

/// Re-expresses the element with coordinates `coeffs` in basis `from` as
/// coordinates in basis `to`. The result is returned as a Poly whose i-th
/// coefficient is the coordinate on the i-th element of `to`.
inline Poly basis_transplant(std::span<const Rational> coeffs, const BasisKind& from, const BasisKind& to) {
    if (from == to) {
        return Poly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
    }
    return detail::from_monomial(detail::to_monomial(coeffs, from), to);
}

inline Poly basis_transplant(const Poly& coords, const BasisKind& from, const BasisKind& to) {
    return basis_transplant(coords.coeffs(), from, to);
}

} // namespace weylosc
