#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/matrix.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace weylosc {

struct SpectralLevel {
    std::size_t n = 0;
    Rational eigenvalue;
    Poly eigenpoly; // coordinates in the report's basis, leading coefficient 1

    friend bool operator==(const SpectralLevel&, const SpectralLevel&) = default;
};

struct SpectralReport {
    BasisKind basis;
    std::vector<SpectralLevel> levels;

    [[nodiscard]] std::vector<Rational> eigenvalues() const {
        std::vector<Rational> out;
        out.reserve(levels.size());
        for (const auto& l : levels) {
            out.push_back(l.eigenvalue);
        }
        return out;
    }
};

enum class SpectrumKind { classic, q_plain, q_scaled_once, q_scaled_twice };

/// True iff every P_n, n <= N, is mapped into itself.
inline bool preserves_flag(const OperatorMatrix& m) { return is_upper_triangular(m); }

/// True iff P_N as a whole is mapped into itself (weaker than flag preservation).
inline bool preserves_top_space(const OperatorMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = m.cols(); i < m.rows(); ++i) {
            if (!m.at(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

inline void check_distinct(const std::vector<Rational>& values, const char* who) {
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                collisions.emplace_back(i, j);
            }
        }
    }
    if (collisions.empty()) {
        return;
    }
    std::string what = std::string(who) + ": repeated eigenvalue at levels";
    for (const auto& [i, j] : collisions) {
        what += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    throw DegenerateSpectrum(collisions, what);
}

} // namespace detail

/// Exact eigen-decomposition of a flag-preserving operator.
///
/// Eigenvalues are read off the diagonal; the level-n eigenvector comes from
/// back-substitution and is normalized to leading coefficient 1. Every level
/// is re-multiplied before returning.
inline SpectralReport eigensolve_flag(const OperatorMatrix& m) {
    if (!preserves_flag(m)) {
        throw NotTriangular("eigensolve_flag: operator does not preserve the flag");
    }
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        diag.push_back(m.at(i, i));
    }
    detail::check_distinct(diag, "eigensolve_flag");
    SpectralReport report{m.basis(), {}};
    for (std::size_t n = 0; n < m.cols(); ++n) {
        Poly v = back_substitute(m, diag[n], n);
        if (m.apply(v) != v * diag[n]) {
            throw std::logic_error("eigensolve_flag: re-multiplication check failed at level " + std::to_string(n));
        }
        report.levels.push_back(SpectralLevel{n, diag[n], std::move(v)});
    }
    return report;
}

/// Diagonal of the dilatation phi(y) -> phi(q^s y) on the monomial basis.
inline Rational dilatation_factor(std::size_t n, const Rational& q, int s) {
    return q.pow(static_cast<long>(s) * static_cast<long>(n));
}

/// Solves H phi = E phi(q^s y) on P_N for a flag-preserving H in the monomial basis.
///
/// The dilatation is diagonal on monomials, so the pencil stays triangular:
/// E_n = H_nn / q^(sn) and the eigenvector follows by back-substitution.
inline SpectralReport pencil_solve(const OperatorMatrix& h, int s, const Rational& q) {
    if (!h.basis().is_monomial()) {
        throw std::invalid_argument("pencil_solve: operator must be given in the monomial basis");
    }
    if (s != -2 && s != -1 && s != 1 && s != 2) {
        throw std::invalid_argument("pencil_solve: scale power must be one of -2, -1, 1, 2");
    }
    if (q.is_zero()) {
        throw std::invalid_argument("pencil_solve: q must be nonzero");
    }
    if (!preserves_flag(h)) {
        throw NotTriangular("pencil_solve: operator does not preserve the flag");
    }
    std::size_t dim = h.cols();
    std::vector<Rational> energies;
    for (std::size_t n = 0; n < dim; ++n) {
        energies.push_back(h.at(n, n) / dilatation_factor(n, q, s));
    }
    detail::check_distinct(energies, "pencil_solve");
    SpectralReport report{h.basis(), {}};
    for (std::size_t n = 0; n < dim; ++n) {
        const Rational& e = energies[n];
        std::vector<Rational> v(n + 1);
        v[n] = Rational(1);
        for (std::size_t i = n; i-- > 0;) {
            Rational acc;
            for (std::size_t j = i + 1; j <= n; ++j) {
                acc += h.at(i, j) * v[j];
            }
            v[i] = -acc / (h.at(i, i) - e * dilatation_factor(i, q, s));
        }
        Poly vec(std::move(v));
        if (h.apply(vec) != vec.scaled(q.pow(s)) * e) {
            throw std::logic_error("pencil_solve: re-multiplication check failed at level " + std::to_string(n));
        }
        report.levels.push_back(SpectralLevel{n, e, std::move(vec)});
    }
    return report;
}

/// Closed-form reference eigenvalue for level n.
inline Rational reference_spectrum(SpectrumKind kind, std::size_t n, const Rational& q = Rational(1)) {
    Rational minus_four(-4);
    switch (kind) {
    case SpectrumKind::classic:
        return minus_four * Rational(static_cast<long>(n));
    case SpectrumKind::q_plain:
        return minus_four * q_number(n, q);
    case SpectrumKind::q_scaled_once:
        return minus_four * q.pow(static_cast<long>(n)) * q_number(n, q);
    case SpectrumKind::q_scaled_twice:
        return minus_four * q.pow(2 * static_cast<long>(n)) * q_number(n, q);
    }
    return {};
}

/// Reference for the pencil H phi = E phi(q^s y): -4 {n} q^(-sn).
inline Rational pencil_reference(std::size_t n, const Rational& q, int s) {
    return Rational(-4) * q_number(n, q) / dilatation_factor(n, q, s);
}

inline std::string to_string(SpectrumKind kind) {
    switch (kind) {
    case SpectrumKind::classic:
        return "classic";
    case SpectrumKind::q_plain:
        return "q_plain";
    case SpectrumKind::q_scaled_once:
        return "q_scaled_once";
    case SpectrumKind::q_scaled_twice:
        return "q_scaled_twice";
    }
    return {};
}

struct ComparisonReport {
    std::vector<bool> eigenvalue_equal;
    std::optional<std::vector<bool>> eigenpoly_equal; // present only when the bases match
    bool isospectral = false;
};

inline ComparisonReport isospectral_compare(const SpectralReport& a, const SpectralReport& b) {
    if (a.levels.size() != b.levels.size()) {
        throw std::invalid_argument("isospectral_compare: level counts differ");
    }
    ComparisonReport out;
    out.isospectral = true;
    bool same_basis = a.basis == b.basis;
    if (same_basis) {
        out.eigenpoly_equal.emplace();
    }
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
        bool eq = a.levels[i].eigenvalue == b.levels[i].eigenvalue;
        out.eigenvalue_equal.push_back(eq);
        out.isospectral = out.isospectral && eq;
        if (same_basis) {
            out.eigenpoly_equal->push_back(a.levels[i].eigenpoly == b.levels[i].eigenpoly);
        }
    }
    return out;
}

} // namespace weylosc
