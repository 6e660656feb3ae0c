#include "nichols/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nichols {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    data_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty()) return {};
    IntMatrix m(int(columns.front().size()), int(columns.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (int(columns[c].size()) != m.rows()) throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::column(int c) const {
    IntVector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
    IntVector out(rows_, 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

int64_t IntMatrix::trace() const {
    int64_t t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

int64_t IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    std::vector<__int128> a(data_.begin(), data_.end());
    auto at = [&](int r, int c) -> __int128& { return a[size_t(r) * n + c]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return int64_t(sign * at(n - 1, n - 1));
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const int64_t v = (*this)(r, k);
            if (v == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out(r, c) += v * rhs(k, c);
        }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int r = 0; r < rows_; ++r) {
        if (r) os << ',';
        os << '[';
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string vector_to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

int64_t total_degree(const IntVector& v) { return std::accumulate(v.begin(), v.end(), int64_t{0}); }

bool graded_lex_less(const IntVector& a, const IntVector& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

}  // namespace nichols
