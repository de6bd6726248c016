#include "recgrow/matrix_recurrence.hpp"

#include <algorithm>
#include <string>

#include "recgrow/errors.hpp"

namespace recgrow {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw DimensionMismatch("row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) + " entries, expected " +
                                    std::to_string(rows.size()));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * m.dim_);
    }
    return m;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::constant(std::size_t dim, const Rational& value) {
    Matrix m(dim);
    std::fill(m.entries_.begin(), m.entries_.end(), value);
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionMismatch("matrix sum of sizes " + std::to_string(dim_) + " and " +
                                std::to_string(rhs.dim_));
    }
    Matrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] + rhs.entries_[i];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionMismatch("matrix product of sizes " + std::to_string(dim_) + " and " +
                                std::to_string(rhs.dim_));
    }
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Rational& lhs_ik = (*this)(i, k);
            if (lhs_ik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += lhs_ik * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix out(*this);
    for (auto& e : out.entries_) {
        e *= s;
    }
    return out;
}

Rational Matrix::max_row_sum() const {
    Rational best(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < dim_; ++j) {
            row += abs((*this)(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

bool Matrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e >= 0; });
}

bool Matrix::dominates(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < rhs.entries_[i]) {
            return false;
        }
    }
    return true;
}

void validate_matrix_params(const MatrixParams& mp) {
    if (mp.a.dim() == 0 || mp.a.dim() != mp.b.dim() || mp.a.dim() != mp.d0.dim()) {
        throw DimensionMismatch("A, B and D0 must be square of one common size >= 1");
    }
    if (!mp.a.is_nonnegative() || !mp.b.is_nonnegative() || !mp.d0.is_nonnegative()) {
        throw InvalidParams("matrix entries must be nonnegative");
    }
}

std::vector<Matrix> evaluate_matrix(const MatrixParams& mp, std::size_t n_max,
                                    std::size_t max_index) {
    validate_matrix_params(mp);
    if (n_max > max_index) {
        throw CapExceeded("n = " + std::to_string(n_max) + " exceeds matrix index cap " +
                          std::to_string(max_index));
    }
    std::vector<Matrix> seq;
    seq.reserve(n_max + 1);
    seq.push_back(mp.d0);
    for (std::size_t n = 0; n < n_max; ++n) {
        const Matrix& d = seq.back();
        seq.push_back(mp.a + mp.b * (d * d));
    }
    return seq;
}

SequenceTable scalar_envelope(const MatrixParams& mp, std::size_t n_max, std::size_t max_index) {
    validate_matrix_params(mp);
    if (n_max > max_index) {
        throw CapExceeded("n = " + std::to_string(n_max) + " exceeds matrix index cap " +
                          std::to_string(max_index));
    }
    Params norms{mp.a.max_row_sum(), mp.b.max_row_sum(), mp.d0.max_row_sum()};
    auto values = iterate_quadratic(norms.a, norms.b, norms.d0, n_max);
    return SequenceTable(std::move(norms), std::move(values));
}

}  // namespace recgrow
