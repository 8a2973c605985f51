#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/matrix.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylosc {

/// Concrete operators substituted for the generators (a, b).
///
///   differential       a = d/dy,            b = y
///   finite_difference  a = D+,              b = y (1 - step D-)  i.e. (b f)(y) = y f(y - step)
///   q_dilatation       a = D_q,             b = y
///
/// with D+ f = (f(y+step) - f(y))/step, D- f = (f(y) - f(y-step))/step and the
/// Jackson derivative D_q f = (f(qy) - f(y)) / ((q - 1) y). All three keep the
/// vacuum at the constant 1.
class Realization {
public:
    enum class Kind { differential, finite_difference, q_dilatation };

    static Realization differential() { return Realization(Kind::differential, Rational(0)); }

    static Realization finite_difference(const Rational& step) {
        if (step.is_zero()) {
            throw std::invalid_argument("finite_difference: step must be nonzero");
        }
        return Realization(Kind::finite_difference, step);
    }

    static Realization q_dilatation(const Rational& q) {
        if (q.is_zero() || q.is_one()) {
            throw std::invalid_argument("q_dilatation: q must differ from 0 and 1");
        }
        return Realization(Kind::q_dilatation, q);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    /// The step for finite_difference, q for q_dilatation, zero otherwise.
    [[nodiscard]] const Rational& param() const { return param_; }

    /// Deformation of the algebra this realization represents.
    [[nodiscard]] Rational algebra_q() const { return kind_ == Kind::q_dilatation ? param_ : Rational(1); }

    /// Basis in which realize_matrix expresses this realization.
    [[nodiscard]] BasisKind natural_basis() const {
        return kind_ == Kind::finite_difference ? BasisKind::quasi_monomial(param_) : BasisKind::monomial();
    }

    [[nodiscard]] std::string str() const {
        switch (kind_) {
        case Kind::differential:
            return "differential";
        case Kind::finite_difference:
            return "finite_difference(" + param_.str() + ")";
        case Kind::q_dilatation:
            return "q_dilatation(" + param_.str() + ")";
        }
        return {};
    }

    [[nodiscard]] Poly apply_a(const Poly& f) const {
        switch (kind_) {
        case Kind::differential:
            return f.derivative();
        case Kind::finite_difference:
            return (f.shifted(param_) - f) * param_.inverse();
        case Kind::q_dilatation: {
            // (f(qy) - f(y)) / ((q-1) y): the constant term cancels, so divide by y exactly.
            Poly diff = f.scaled(param_) - f;
            auto c = diff.coeffs();
            std::vector<Rational> out(c.empty() ? 0 : c.size() - 1);
            Rational k = (param_ - Rational(1)).inverse();
            for (std::size_t i = 1; i < c.size(); ++i) {
                out[i - 1] = c[i] * k;
            }
            return Poly(std::move(out));
        }
        }
        return {};
    }

    [[nodiscard]] Poly apply_b(const Poly& f) const {
        if (kind_ == Kind::finite_difference) {
            return Poly::identity() * f.shifted(-param_);
        }
        return Poly::identity() * f;
    }

    /// Applies the substituted operator sum c b^k a^m to f.
    [[nodiscard]] Poly apply(const FockPoly& h, const Poly& f) const {
        Poly out;
        // Cache a^m f: words share powers of a.
        std::vector<Poly> a_powers{f};
        for (const auto& [w, c] : h.terms()) {
            while (a_powers.size() <= w.a) {
                a_powers.push_back(apply_a(a_powers.back()));
            }
            Poly term = a_powers[w.a];
            for (std::size_t i = 0; i < w.b; ++i) {
                term = apply_b(term);
            }
            out += term * c;
        }
        return out;
    }

    friend bool operator==(const Realization&, const Realization&) = default;

private:
    Realization(Kind kind, Rational param) : kind_(kind), param_(std::move(param)) {}

    Kind kind_;
    Rational param_;
};

/// Matrix of the realized operator on P_N, column j the image of basis
/// element j of the realization's natural basis (monomials, or
/// quasi-monomials with the same step for finite differences).
///
/// The words of h are substituted as they stand; the deformation attached to
/// h itself is not consulted.
inline OperatorMatrix realize_matrix(const FockPoly& h, const Realization& r, std::size_t top_degree) {
    BasisKind basis = r.natural_basis();
    std::vector<Poly> columns;
    columns.reserve(top_degree + 1);
    for (std::size_t j = 0; j <= top_degree; ++j) {
        Poly element = basis.is_monomial() ? Poly::monomial(j) : quasi_monomial_expand(j, basis.step());
        Poly image = r.apply(h, element);
        columns.push_back(basis_transplant(image, BasisKind::monomial(), basis));
    }
    return OperatorMatrix::from_columns(columns, basis);
}

/// Multi-point form of a realized operator:
///   shift:  (H phi)(y) = sum_j c_j(y) phi(y + j step)
///   scale:  (H phi)(y) = sum_j c_j(y) phi(q^j y)
struct Stencil {
    enum class Mode { shift, scale };

    Mode mode = Mode::shift;
    Rational param;
    std::map<int, LaurentPoly> terms; // offset -> coefficient, zero coefficients dropped

    [[nodiscard]] std::size_t point_count() const { return terms.size(); }

    [[nodiscard]] LaurentPoly coeff(int offset) const {
        auto it = terms.find(offset);
        return it == terms.end() ? LaurentPoly() : it->second;
    }

    /// Applies the stencil to a polynomial.
    [[nodiscard]] LaurentPoly apply(const Poly& f) const {
        LaurentPoly out;
        for (const auto& [j, c] : terms) {
            Rational jr(j);
            Poly moved = mode == Mode::shift ? f.shifted(param * jr) : f.scaled(param.pow(j));
            out += c * LaurentPoly(moved);
        }
        return out;
    }

    /// Composition (this o other), both in the same mode with the same parameter.
    [[nodiscard]] Stencil compose(const Stencil& other) const {
        if (mode != other.mode || param != other.param) {
            throw std::invalid_argument("Stencil::compose: incompatible stencils");
        }
        Stencil out{mode, param, {}};
        for (const auto& [i, ci] : terms) {
            for (const auto& [j, cj] : other.terms) {
                Rational ir(i);
                LaurentPoly moved = mode == Mode::shift ? cj.shifted(param * ir) : cj.scaled(param.pow(i));
                out.add(i + j, ci * moved);
            }
        }
        return out;
    }

    void add(int offset, const LaurentPoly& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms.try_emplace(offset, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms.erase(it);
            }
        }
    }

    Stencil& operator+=(const Stencil& o) {
        for (const auto& [j, c] : o.terms) {
            add(j, c);
        }
        return *this;
    }

    friend Stencil operator*(const Rational& s, const Stencil& st) {
        Stencil out{st.mode, st.param, {}};
        for (const auto& [j, c] : st.terms) {
            out.add(j, c * s);
        }
        return out;
    }
};

namespace detail {

inline Stencil identity_stencil(Stencil::Mode mode, const Rational& param) {
    Stencil s{mode, param, {}};
    s.add(0, LaurentPoly::constant(Rational(1)));
    return s;
}

inline Stencil generator_a(const Realization& r) {
    if (r.kind() == Realization::Kind::finite_difference) {
        Rational inv = r.param().inverse();
        Stencil s{Stencil::Mode::shift, r.param(), {}};
        s.add(1, LaurentPoly::constant(inv));
        s.add(0, LaurentPoly::constant(-inv));
        return s;
    }
    Rational k = (r.param() - Rational(1)).inverse();
    Stencil s{Stencil::Mode::scale, r.param(), {}};
    s.add(1, LaurentPoly::term(-1, k));
    s.add(0, LaurentPoly::term(-1, -k));
    return s;
}

inline Stencil generator_b(const Realization& r) {
    if (r.kind() == Realization::Kind::finite_difference) {
        Stencil s{Stencil::Mode::shift, r.param(), {}};
        s.add(-1, LaurentPoly::term(1, Rational(1)));
        return s;
    }
    Stencil s{Stencil::Mode::scale, r.param(), {}};
    s.add(0, LaurentPoly::term(1, Rational(1)));
    return s;
}

} // namespace detail

/// Substitutes a finite-difference or q-dilatation realization into h and
/// collects the coefficient of every shifted (or dilated) argument.
/// Operators with a-degree above 2 are rejected with UnsupportedDegree.
inline Stencil stencil_of(const FockPoly& h, const Realization& r) {
    if (r.kind() == Realization::Kind::differential) {
        throw std::invalid_argument("stencil_of: the differential realization has no stencil");
    }
    if (h.a_degree() > 2) {
        throw UnsupportedDegree("stencil_of: a-degree " + std::to_string(h.a_degree()) + " exceeds 2");
    }
    Stencil::Mode mode = r.kind() == Realization::Kind::finite_difference ? Stencil::Mode::shift : Stencil::Mode::scale;
    Stencil a = detail::generator_a(r);
    Stencil b = detail::generator_b(r);
    Stencil out{mode, r.param(), {}};
    for (const auto& [w, c] : h.terms()) {
        Stencil term = detail::identity_stencil(mode, r.param());
        for (std::size_t i = 0; i < w.b; ++i) {
            term = term.compose(b);
        }
        for (std::size_t i = 0; i < w.a; ++i) {
            term = term.compose(a);
        }
        out += c * term;
    }
    return out;
}

/// (a b - q b a - 1) f under r; identically zero when r represents the algebra with this q.
inline Poly heisenberg_residual(const Realization& r, const Rational& q, const Poly& f) {
    return r.apply_a(r.apply_b(f)) - q * r.apply_b(r.apply_a(f)) - f;
}

/// a applied to the vacuum 1.
inline Poly vacuum_image(const Realization& r) { return r.apply_a(Poly::constant(Rational(1))); }

} // namespace weylosc
