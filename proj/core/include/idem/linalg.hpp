#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idem/field.hpp"

namespace idem {

// Dense matrix over an exact field. Sizes here are tiny (n <= 3 generators,
// spans of a few dozen vectors), so everything is straightforward O(n^3)
// elimination with exact arithmetic; no pivoting heuristics needed.
class FMatrix {
public:
    FMatrix(const FieldDesc& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          data_(rows * cols, FieldScalar::zero(f)) {}

    static FMatrix identity(const FieldDesc& f, std::size_t n);
    static FMatrix from_ints(const FieldDesc& f,
                             const std::vector<std::vector<std::int64_t>>& rows);

    const FieldDesc& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldScalar& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const FMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               data_ == o.data_;
    }
    bool operator!=(const FMatrix& o) const { return !(*this == o); }

    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;
    FMatrix operator*(const FMatrix& o) const;
    FMatrix scaled(const FieldScalar& c) const;
    FMatrix pow(std::size_t e) const;

    // Row-major coordinate vector; matrices become vectors for span work.
    std::vector<FieldScalar> flatten() const { return data_; }

private:
    void require_same_shape(const FMatrix& o) const;

    FieldDesc field_;
    std::size_t rows_, cols_;
    std::vector<FieldScalar> data_;
};

// Incremental exact span with membership queries. Rows are kept in echelon
// form sorted by pivot column; insert() reduces the candidate fully, so a
// reduced-to-zero vector is exactly a member of the current span.
class LinearSpan {
public:
    explicit LinearSpan(const FieldDesc& f) : field_(f) {}

    // Returns true when v was independent of the span (rank grew).
    bool insert(std::vector<FieldScalar> v);
    bool contains(const std::vector<FieldScalar>& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<FieldScalar> reduce(std::vector<FieldScalar> v) const;

    FieldDesc field_;
    std::vector<std::vector<FieldScalar>> rows_;
    std::vector<std::size_t> pivots_;  // pivot column of each row, ascending
};

// One solution of (sum_i c_i rows[i]) = target, or nullopt when target is
// outside the span. Free coefficients are set to zero.
std::optional<std::vector<FieldScalar>> solve_combination(
    const std::vector<std::vector<FieldScalar>>& rows,
    const std::vector<FieldScalar>& target, const FieldDesc& f);

// Basis of the right nullspace of m (vectors x with m*x = 0).
std::vector<std::vector<FieldScalar>> nullspace(const FMatrix& m);

std::size_t rank_of(const std::vector<std::vector<FieldScalar>>& vectors,
                    const FieldDesc& f);

// Exact inverse via augmented elimination; nullopt when singular.
std::optional<FMatrix> try_inverse(const FMatrix& m);

}  // namespace idem
