#include "idem/linalg.hpp"

#include <algorithm>

namespace idem {

FMatrix FMatrix::identity(const FieldDesc& f, std::size_t n) {
    FMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(f);
    return m;
}

FMatrix FMatrix::from_ints(const FieldDesc& f,
                           const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    FMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = FieldScalar::from_int(f, rows[i][j]);
    }
    return m;
}

bool FMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const FieldScalar& x) { return x.is_zero(); });
}

void FMatrix::require_same_shape(const FMatrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix shape mismatch");
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    require_same_shape(o);
    FMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    require_same_shape(o);
    FMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    FMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

FMatrix FMatrix::scaled(const FieldScalar& c) const {
    FMatrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

FMatrix FMatrix::pow(std::size_t e) const {
    if (rows_ != cols_) throw Error("matrix power needs a square matrix");
    FMatrix acc = identity(field_, rows_);
    FMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<FieldScalar> LinearSpan::reduce(std::vector<FieldScalar> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (p >= v.size() || v[p].is_zero()) continue;
        FieldScalar c = v[p];
        const auto& row = rows_[r];
        for (std::size_t j = p; j < v.size(); ++j) v[j] -= c * row[j];
    }
    return v;
}

bool LinearSpan::insert(std::vector<FieldScalar> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    FieldScalar inv = v[p].inverse();
    for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
    // Keep rows ordered by pivot so reduce() sweeps left to right.
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool LinearSpan::contains(const std::vector<FieldScalar>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(),
                       [](const FieldScalar& x) { return x.is_zero(); });
}

std::optional<std::vector<FieldScalar>> solve_combination(
    const std::vector<std::vector<FieldScalar>>& rows,
    const std::vector<FieldScalar>& target, const FieldDesc& f) {
    std::size_t k = rows.size();
    std::size_t n = target.size();
    // Augmented system A c = t with A[j][i] = rows[i][j].
    std::vector<std::vector<FieldScalar>> a(
        n, std::vector<FieldScalar>(k + 1, FieldScalar::zero(f)));
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != n) throw Error("vector length mismatch");
        for (std::size_t j = 0; j < n; ++j) a[j][i] = rows[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) a[j][k] = target[j];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(a[row], a[sel]);
        FieldScalar inv = a[row][col].inverse();
        for (std::size_t j = col; j <= k; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldScalar c = a[i][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= c * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent iff a leftover row reads 0 = nonzero.
    for (std::size_t i = row; i < n; ++i)
        if (!a[i][k].is_zero()) return std::nullopt;

    std::vector<FieldScalar> c(k, FieldScalar::zero(f));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = a[r][k];
    return c;
}

std::vector<std::vector<FieldScalar>> nullspace(const FMatrix& m) {
    const FieldDesc& f = m.field();
    std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<FieldScalar>> a(
        nr, std::vector<FieldScalar>(nc, FieldScalar::zero(f)));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    std::vector<std::optional<std::size_t>> pivot_row(nc);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = row;
        while (sel < nr && a[sel][col].is_zero()) ++sel;
        if (sel == nr) continue;
        std::swap(a[row], a[sel]);
        FieldScalar inv = a[row][col].inverse();
        for (std::size_t j = col; j < nc; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldScalar c = a[i][col];
            for (std::size_t j = col; j < nc; ++j) a[i][j] -= c * a[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }

    std::vector<std::vector<FieldScalar>> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (pivot_row[free_col]) continue;
        std::vector<FieldScalar> x(nc, FieldScalar::zero(f));
        x[free_col] = FieldScalar::one(f);
        for (std::size_t col = 0; col < nc; ++col)
            if (pivot_row[col]) x[col] = -a[*pivot_row[col]][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank_of(const std::vector<std::vector<FieldScalar>>& vectors,
                    const FieldDesc& f) {
    LinearSpan span(f);
    for (const auto& v : vectors) span.insert(v);
    return span.rank();
}

std::optional<FMatrix> try_inverse(const FMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse needs a square matrix");
    const FieldDesc& f = m.field();
    std::size_t n = m.rows();
    // [m | I] -> [I | m^-1].
    std::vector<std::vector<FieldScalar>> a(
        n, std::vector<FieldScalar>(2 * n, FieldScalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = FieldScalar::one(f);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[col], a[sel]);
        FieldScalar inv = a[col][col].inverse();
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            FieldScalar c = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= c * a[col][j];
        }
    }
    FMatrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

}  // namespace idem
