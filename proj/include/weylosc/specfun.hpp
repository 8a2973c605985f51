#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"
#include "weylosc/realize.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylosc {

/// Generalized binomial coefficient x (x-1) ... (x-k+1) / k!.
inline Rational binomial(const Rational& x, std::size_t k) {
    Rational acc(1);
    for (std::size_t i = 0; i < k; ++i) {
        acc *= x - Rational(static_cast<long>(i));
    }
    return acc / factorial(static_cast<unsigned>(k));
}

/// Associated Laguerre polynomial L_n^(alpha), standard normalization.
inline Poly laguerre(std::size_t n, const Rational& alpha) {
    std::vector<Rational> c(n + 1);
    Rational top = Rational(static_cast<long>(n)) + alpha;
    for (std::size_t l = 0; l <= n; ++l) {
        Rational term = binomial(top, n - l) / factorial(static_cast<unsigned>(l));
        c[l] = (l % 2 == 0) ? term : -term;
    }
    return Poly(std::move(c));
}

/// Physicists' Hermite polynomial H_k.
inline Poly hermite(std::size_t k) {
    Poly prev = Poly::constant(Rational(1));
    if (k == 0) {
        return prev;
    }
    Poly cur = Poly::monomial(1, Rational(2));
    for (std::size_t i = 1; i < k; ++i) {
        Poly next = Poly::monomial(1, Rational(2)) * cur - prev * Rational(2 * static_cast<long>(i));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Laguerre coefficients re-read on the quasi-monomial basis with the given
/// step, expanded back to monomials. A zero step returns laguerre(n, alpha).
inline Poly modified_laguerre(std::size_t n, const Rational& alpha, const Rational& step) {
    return basis_transplant(laguerre(n, alpha), BasisKind::quasi_monomial(step), BasisKind::monomial());
}

/// Proportionality constant c in
///   H_{2n+p}(sqrt(w) x) = c * sqrt(w)^p * x^p L_n^(p - 1/2)(w x^2).
///
/// sqrt(w)^p is factored out so that both sides are rational polynomials in
/// x; c itself does not depend on w.
inline Rational parity_relation_ratio(std::size_t n, int parity, const Rational& omega) {
    if (parity != 0 && parity != 1) {
        throw std::invalid_argument("parity_relation_ratio: parity must be 0 or 1");
    }
    if (omega.sign() <= 0) {
        throw std::invalid_argument("parity_relation_ratio: omega must be positive");
    }
    auto p = static_cast<std::size_t>(parity);
    Poly h = hermite(2 * n + p);
    Poly l = laguerre(n, Rational(parity) - Rational(1, 2));
    std::vector<Rational> lhs(2 * n + p + 1);
    std::vector<Rational> rhs(2 * n + p + 1);
    Rational w_power(1);
    for (std::size_t i = 0; i <= n; ++i) {
        lhs[2 * i + p] = h.coeff(2 * i + p) * w_power;
        rhs[2 * i + p] = l.coeff(i) * w_power;
        w_power *= omega;
    }
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if ((k % 2) != p && !h.coeff(k).is_zero()) {
            throw NotProportional("parity_relation_ratio: Hermite polynomial has wrong parity");
        }
    }
    Poly left(std::move(lhs));
    Poly right(std::move(rhs));
    Rational ratio = left.leading() / right.leading();
    if (left != right * ratio) {
        throw NotProportional("parity_relation_ratio: sides are not proportional at n=" + std::to_string(n) +
                              ", p=" + std::to_string(parity));
    }
    return ratio;
}

/// Psi(x) = x^p exp(-w x^2 / 2) Q(x), with Q a Laurent polynomial in x.
struct WeightedState {
    Rational p;
    Rational omega;
    LaurentPoly q;

    friend bool operator==(const WeightedState&, const WeightedState&) = default;
};

/// Applies -d^2/dx^2 + w^2 x^2 + p(p-1)/x^2 to a weighted state.
///
/// Writing Psi = g Q with g = x^p e^{-w x^2/2} and L = g'/g = p/x - w x,
///   Psi''/g = Q'' + 2 L Q' + (L^2 + L') Q,
/// so the prefactor g survives and only Q changes.
inline WeightedState kratzer_apply(const WeightedState& psi) {
    const Rational& p = psi.p;
    const Rational& w = psi.omega;
    LaurentPoly log_deriv = LaurentPoly::term(-1, p) + LaurentPoly::term(1, -w);
    LaurentPoly dq = psi.q.derivative();
    LaurentPoly second = dq.derivative() + Rational(2) * log_deriv * dq +
                         (log_deriv * log_deriv + log_deriv.derivative()) * psi.q;
    LaurentPoly potential = LaurentPoly::term(2, w * w) + LaurentPoly::term(-2, p * (p - Rational(1)));
    return WeightedState{p, w, potential * psi.q - second};
}

namespace detail {

/// P(w x^2) as a Laurent polynomial in x.
inline LaurentPoly in_oscillator_variable(const Poly& poly, const Rational& omega) {
    return LaurentPoly(poly.compose(Poly::monomial(2, omega)));
}

/// The scalar E with a = E b, if one exists.
inline std::optional<Rational> scalar_ratio(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        return std::nullopt;
    }
    int top = *b.max_power();
    Rational e = a.coeff(top) / b.coeff(top);
    if (a - b * e != LaurentPoly()) {
        return std::nullopt;
    }
    return e;
}

} // namespace detail

/// Builds x^p L_n^(p - 1/2)(w x^2) e^{-w x^2/2}, applies the Kratzer
/// Hamiltonian and returns the eigenvalue. Throws NotEigenfunction on any
/// nonzero residual.
inline Rational kratzer_eigencheck(std::size_t n, const Rational& p, const Rational& omega) {
    LaurentPoly q = detail::in_oscillator_variable(laguerre(n, p - Rational(1, 2)), omega);
    WeightedState image = kratzer_apply(WeightedState{p, omega, q});
    auto e = detail::scalar_ratio(image.q, q);
    if (!e) {
        throw NotEigenfunction("kratzer_eigencheck: residual is nonzero at n=" + std::to_string(n) + ", p=" + p.str() +
                               ", omega=" + omega.str());
    }
    return *e;
}

struct GaugeCheck {
    Rational ground_energy;
    WeightedState residual;
};

/// Checks that conjugating the Kratzer Hamiltonian by the ground state
/// x^p e^{-w x^2/2} and substituting y = w x^2 gives -w h + E0, with h the
/// differential realization of build_hf(p):
///   H (g P(w x^2)) = g [E0 P - w (h P)](w x^2).
inline GaugeCheck gauge_conjugate_check(const Poly& poly, const Rational& p, const Rational& omega) {
    if (poly.is_zero()) {
        throw std::invalid_argument("gauge_conjugate_check: polynomial must be nonzero");
    }
    LaurentPoly q = detail::in_oscillator_variable(poly, omega);
    LaurentPoly lhs = kratzer_apply(WeightedState{p, omega, q}).q;
    Poly h_of_p = Realization::differential().apply(build_hf(p), poly);
    LaurentPoly shifted = lhs + omega * detail::in_oscillator_variable(h_of_p, omega);
    int top = *q.max_power();
    Rational e0 = shifted.coeff(top) / q.coeff(top);
    WeightedState residual{p, omega, shifted - q * e0};
    if (!residual.q.is_zero()) {
        throw GaugeMismatch("gauge_conjugate_check: no constant reconciles the two sides; remainder " +
                            residual.q.str("x"));
    }
    return GaugeCheck{e0, residual};
}

/// Parameters (alpha, shift) with poly = monic L_n^(alpha)(y + shift).
struct ShiftedLaguerreFit {
    Rational alpha;
    Rational shift;
};

/// Recovers (alpha, shift) from the two subleading coefficients of a monic
/// polynomial of degree n >= 2 and confirms the full match. Returns nullopt
/// when the polynomial is not a shifted Laguerre polynomial.
inline std::optional<ShiftedLaguerreFit> fit_shifted_laguerre(const Poly& poly) {
    auto deg = poly.degree();
    if (!deg || *deg < 2 || !poly.leading().is_one()) {
        return std::nullopt;
    }
    std::size_t n = *deg;
    Rational nr(static_cast<long>(n));
    Rational c1 = poly.coeff(n - 1);
    Rational c2 = poly.coeff(n - 2);
    // With s = n + alpha: c1 = n (shift - s), c2 = n(n-1)/2 [(shift - s)^2 - s].
    Rational gap = c1 / nr;
    Rational s = gap * gap - Rational(2) * c2 / (nr * (nr - Rational(1)));
    ShiftedLaguerreFit fit{s - nr, s + gap};
    if (laguerre(n, fit.alpha).monic().shifted(fit.shift) != poly) {
        return std::nullopt;
    }
    return fit;
}

} // namespace weylosc
