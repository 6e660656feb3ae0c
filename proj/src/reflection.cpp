#include "nichols/reflection.hpp"

#include <stdexcept>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

ReflectionMap::ReflectionMap(int index, IntMatrix matrix) : index_(index), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("reflection map must be square");
}

std::optional<int64_t> m_coefficient(const BraidingMatrix& q, int i, int j) {
    if (i == j) throw std::invalid_argument("m_coefficient needs i != j");
    const UnitMonomial& qii = q.at(i, i);
    // Branch A: q_ii^m = (q_ij q_ji)^{-1}.
    std::optional<int64_t> best = solve_power(qii, sym_product(q, i, j).inverse()).least_nonnegative();
    // Branch B: [m+1]_{q_ii} = 0 first happens at m + 1 = ord(q_ii) >= 2.
    if (const auto d = multiplicative_order(qii); d && *d >= 2) {
        if (!best || *d - 1 < *best) best = *d - 1;
    }
    return best;
}

std::optional<int> reflection_obstruction(const BraidingMatrix& q, int i) {
    for (int j = 0; j < q.rank(); ++j)
        if (j != i && !m_coefficient(q, i, j)) return j;
    return std::nullopt;
}

namespace {

std::vector<int64_t> m_row(const BraidingMatrix& q, int i) {
    std::vector<int64_t> m(size_t(q.rank()), 0);
    for (int j = 0; j < q.rank(); ++j) {
        if (j == i) continue;
        const auto v = m_coefficient(q, i, j);
        if (!v) throw NotReflectable(i, j);
        m[size_t(j)] = *v;
    }
    return m;
}

}  // namespace

ReflectionMap pseudo_reflection(const BraidingMatrix& q, int i) {
    if (i < 0 || i >= q.rank()) throw IndexOutOfRange("reflection index out of range");
    const auto m = m_row(q, i);
    IntMatrix s = IntMatrix::identity(q.rank());
    for (int j = 0; j < q.rank(); ++j) s(i, j) = j == i ? -1 : m[size_t(j)];
    return ReflectionMap(i, std::move(s));
}

BraidingMatrix reflect_braiding(const BraidingMatrix& q, int i) {
    if (i < 0 || i >= q.rank()) throw IndexOutOfRange("reflection index out of range");
    const auto m = m_row(q, i);
    const int n = q.rank();
    const UnitMonomial& qii = q.at(i, i);
    BraidingMatrix out(q.context(), n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == i && k == i) {
                out.set(j, k, qii);
            } else if (j == i) {
                out.set(j, k, qii.pow(-m[size_t(k)]) * q.at(i, k).inverse());
            } else if (k == i) {
                out.set(j, k, qii.pow(-m[size_t(j)]) * q.at(j, i).inverse());
            } else {
                const int64_t mj = m[size_t(j)], mk = m[size_t(k)];
                out.set(j, k, qii.pow(mj * mk) * q.at(i, k).pow(mj) * q.at(j, i).pow(mk) * q.at(j, k));
            }
        }
    return out;
}

}  // namespace nichols
