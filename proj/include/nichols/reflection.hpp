#pragma once

#include <optional>

#include "nichols/braiding.hpp"
#include "nichols/int_matrix.hpp"

namespace nichols {

/// Matrix of the pseudo-reflection s_i on Z^n: column i is -e_i, column j is e_j + m_ij e_i.
class ReflectionMap {
public:
    ReflectionMap(int index, IntMatrix matrix);

    int index() const { return index_; }
    const IntMatrix& matrix() const { return matrix_; }
    IntVector apply(const IntVector& v) const { return matrix_.apply(v); }

    friend bool operator==(const ReflectionMap&, const ReflectionMap&) = default;

private:
    int index_;
    IntMatrix matrix_;
};

/// Least m >= 0 with q_ii^m q_ij q_ji = 1 or [m+1]_{q_ii} = 0; nullopt if none (i != j).
std::optional<int64_t> m_coefficient(const BraidingMatrix& q, int i, int j);

/// First j != i with undefined m_ij, or nullopt if q is reflectable at i.
std::optional<int> reflection_obstruction(const BraidingMatrix& q, int i);

/// Throws NotReflectable.
ReflectionMap pseudo_reflection(const BraidingMatrix& q, int i);

/// Braiding of the reflected Nichols algebra at i, in the basis
/// (ad x_i)^{m_ij}(x_j) for j != i and the right skew-derivation at i.
/// Throws NotReflectable.
BraidingMatrix reflect_braiding(const BraidingMatrix& q, int i);

}  // namespace nichols
