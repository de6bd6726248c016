#pragma once

// Matrix analogue D(n+1) = A + B * D(n) * D(n) over nonnegative rational
// m x m matrices, and its scalar comparison sequence under the max-row-sum
// norm.

#include <cstddef>
#include <vector>

#include "recgrow/core_recurrence.hpp"

namespace recgrow {

class Matrix {
public:
    explicit Matrix(std::size_t dim = 0);
    /// Row-major entries; throws DimensionMismatch unless rows are square.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t dim);
    static Matrix constant(std::size_t dim, const Rational& value);

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(const Rational& s) const;
    bool operator==(const Matrix&) const = default;

    /// max_i sum_j |m_ij|; submultiplicative.
    Rational max_row_sum() const;
    bool is_nonnegative() const;
    /// Entrywise this >= rhs.
    bool dominates(const Matrix& rhs) const;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

struct MatrixParams {
    Matrix a;
    Matrix b;
    Matrix d0;
};

/// Matrices grow doubly exponentially in every entry, so the default cap is
/// tighter than the scalar one.
inline constexpr std::size_t kDefaultMatrixIndexCap = 20;

/// Throws DimensionMismatch or InvalidParams (negative entry).
void validate_matrix_params(const MatrixParams& mp);

/// D(0..n_max). Throws CapExceeded above max_index.
std::vector<Matrix> evaluate_matrix(const MatrixParams& mp, std::size_t n_max,
                                    std::size_t max_index = kDefaultMatrixIndexCap);

/// S(0) = |D0|, S(n+1) = |A| + |B| S(n)^2 under the max-row-sum norm, so that
/// |D(n)| <= S(n). The table's params hold (|A|, |B|, |D0|).
SequenceTable scalar_envelope(const MatrixParams& mp, std::size_t n_max,
                              std::size_t max_index = kDefaultMatrixIndexCap);

}  // namespace recgrow
