#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/errors.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylosc {

/// Exact matrix of a linear operator on P_N in a graded basis.
///
/// Column j holds the coordinates of the image of basis element j. The
/// matrix has N+1 columns and at least N+1 rows; extra rows appear only when
/// some image leaves P_N.
class OperatorMatrix {
public:
    OperatorMatrix(std::size_t rows, std::size_t cols, BasisKind basis)
        : rows_(rows), cols_(cols), basis_(std::move(basis)), data_(rows * cols) {
        if (rows < cols) {
            throw std::invalid_argument("OperatorMatrix: fewer rows than columns");
        }
    }

    /// Square matrix from column images given as coordinate polynomials.
    static OperatorMatrix from_columns(const std::vector<Poly>& columns, const BasisKind& basis) {
        std::size_t rows = columns.size();
        for (const auto& c : columns) {
            if (auto d = c.degree(); d && *d + 1 > rows) {
                rows = *d + 1;
            }
        }
        OperatorMatrix m(rows, columns.size(), basis);
        for (std::size_t j = 0; j < columns.size(); ++j) {
            auto c = columns[j].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                m.at(i, j) = c[i];
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    /// N, the top degree of the domain.
    [[nodiscard]] std::size_t top_degree() const { return cols_ - 1; }
    [[nodiscard]] const BasisKind& basis() const { return basis_; }

    [[nodiscard]] Rational& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    [[nodiscard]] Poly column(std::size_t j) const {
        std::vector<Rational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            c[i] = at(i, j);
        }
        return Poly(std::move(c));
    }

    /// M v for a coordinate vector of length <= cols.
    [[nodiscard]] Poly apply(const Poly& v) const {
        if (v.degree() && *v.degree() >= cols_) {
            throw std::invalid_argument("OperatorMatrix::apply: vector outside the domain");
        }
        std::vector<Rational> out(rows_);
        auto c = v.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                out[i] += at(i, j) * c[j];
            }
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    BasisKind basis_;
    std::vector<Rational> data_;
};

/// True iff no column has a nonzero entry below the diagonal.
inline bool is_upper_triangular(const OperatorMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = j + 1; i < m.rows(); ++i) {
            if (!m.at(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

/// Solves (M - E) v = 0 with v[pivot] = 1 and v[k] = 0 for k > pivot.
///
/// M must be upper triangular (flag preserving) and M[pivot][pivot] must be
/// E. Throws DegenerateSpectrum when a lower level shares the eigenvalue.
inline Poly back_substitute(const OperatorMatrix& m, const Rational& eigenvalue, std::size_t pivot) {
    if (!is_upper_triangular(m)) {
        throw NotTriangular("back_substitute: matrix does not preserve the flag");
    }
    if (pivot >= m.cols()) {
        throw std::out_of_range("back_substitute: pivot outside the matrix");
    }
    if (m.at(pivot, pivot) != eigenvalue) {
        throw std::invalid_argument("back_substitute: eigenvalue differs from the pivot diagonal entry");
    }
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    for (std::size_t i = 0; i < pivot; ++i) {
        if (m.at(i, i) == eigenvalue) {
            collisions.emplace_back(i, pivot);
        }
    }
    if (!collisions.empty()) {
        throw DegenerateSpectrum(collisions, "back_substitute: eigenvalue " + eigenvalue.str() +
                                                 " repeats on the diagonal below level " + std::to_string(pivot));
    }
    std::vector<Rational> v(pivot + 1);
    v[pivot] = Rational(1);
    for (std::size_t i = pivot; i-- > 0;) {
        Rational acc;
        for (std::size_t j = i + 1; j <= pivot; ++j) {
            acc += m.at(i, j) * v[j];
        }
        v[i] = -acc / (m.at(i, i) - eigenvalue);
    }
    return Poly(std::move(v));
}

} // namespace weylosc
