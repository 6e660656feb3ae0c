#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nichols {

using IntVector = std::vector<int64_t>;

/// Dense row-major integer matrix. Small sizes only (rank <= 8 in practice).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

    static IntMatrix identity(int n);
    /// Matrix whose columns are the given vectors.
    static IntMatrix from_columns(const std::vector<IntVector>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int64_t& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    int64_t operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    IntVector column(int c) const;
    IntVector apply(const IntVector& v) const;
    int64_t trace() const;
    /// Exact determinant (fraction-free elimination on 128-bit intermediates).
    int64_t determinant() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int64_t> data_;
};

std::string vector_to_string(const IntVector& v);

/// Total degree (sum of coordinates).
int64_t total_degree(const IntVector& v);

/// Graded-lexicographic order: total degree first, then lexicographically
/// descending so that e_1 precedes e_2 within a degree.
bool graded_lex_less(const IntVector& a, const IntVector& b);

}  // namespace nichols
