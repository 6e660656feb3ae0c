#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/int_matrix.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

/// Diagonal braiding sigma(x_i (x) x_j) = q_ij x_j (x) x_i, stored as an n x n
/// matrix of unit monomials. Indices are 0-based in the library API; the text
/// format and CLI use 1-based indices.
class BraidingMatrix {
public:
    BraidingMatrix(ContextPtr ctx, int rank);
    BraidingMatrix(ContextPtr ctx, int rank, std::vector<UnitMonomial> entries);

    const ContextPtr& context() const { return ctx_; }
    int rank() const { return rank_; }

    const UnitMonomial& at(int i, int j) const;
    void set(int i, int j, UnitMonomial value);

    /// Flattened exponents; a total order used for state deduplication.
    std::vector<int64_t> key() const;

    friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b);

private:
    void check_index(int i, int j) const;

    ContextPtr ctx_;
    int rank_;
    std::vector<UnitMonomial> entries_;
};

/// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal, symmetric zero pattern.
class CartanMatrix {
public:
    explicit CartanMatrix(IntMatrix a);

    int rank() const { return a_.rows(); }
    int64_t operator()(int i, int j) const { return a_(i, j); }
    const IntMatrix& matrix() const { return a_; }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    IntMatrix a_;
};

/// Reads the line-oriented text format (rank / order / params / entry directives).
/// Validates the whole input before returning; throws ParseError.
BraidingMatrix parse_braiding(const std::string& text);
std::string serialize_braiding(const BraidingMatrix& q);

/// q_ij * q_ji.
UnitMonomial sym_product(const BraidingMatrix& q, int i, int j);

/// Maximal nonpositive a with q_ij q_ji = q_ii^a, if any (i != j).
std::optional<int64_t> cartan_entry(const BraidingMatrix& q, int i, int j);

std::optional<CartanMatrix> is_cartan_type(const BraidingMatrix& q);

}  // namespace nichols
