#pragma once

// Brute-force computations in the tensor algebra of a diagonal braided vector
// space: braided symmetrizers, graded dimensions of the Nichols algebra,
// PBW data inferred from the Hilbert series, braided adjoint powers,
// skew-derivations and the pairing they induce.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/int_matrix.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

using Word = std::vector<int>;  // 0-based letters

IntVector word_degree(const Word& w, int rank);

/// Homogeneous element of the free algebra on x_1..x_n.
class WordVector {
public:
    WordVector(ContextPtr ctx, int rank) : ctx_(std::move(ctx)), rank_(rank) {}

    static WordVector monomial(ContextPtr ctx, int rank, Word w);
    static WordVector letter(ContextPtr ctx, int rank, int i) { return monomial(std::move(ctx), rank, Word{i}); }

    const ContextPtr& context() const { return ctx_; }
    int rank() const { return rank_; }
    const std::map<Word, LaurentScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Common multidegree; nullopt for the zero vector.
    std::optional<IntVector> degree() const { return degree_; }
    LaurentScalar coefficient(const Word& w) const;

    /// Throws DegreeMismatch if w has a different multidegree.
    void add(const Word& w, const LaurentScalar& c);

    WordVector operator-() const;
    friend WordVector operator+(const WordVector& a, const WordVector& b);
    friend WordVector operator-(const WordVector& a, const WordVector& b);
    WordVector scaled(const LaurentScalar& c) const;
    WordVector scaled(const UnitMonomial& u) const;
    /// Concatenation product in the free algebra.
    friend WordVector operator*(const WordVector& a, const WordVector& b);

    friend bool operator==(const WordVector& a, const WordVector& b) { return a.terms_ == b.terms_; }

private:
    ContextPtr ctx_;
    int rank_;
    std::map<Word, LaurentScalar> terms_;
    std::optional<IntVector> degree_;
};

/// sigma^{-1} at positions (p, p+1), 0-based: x_j x_m -> q_mj^{-1} x_m x_j.
/// Throws IndexOutOfRange.
WordVector braiding_inverse_swap(const BraidingMatrix& q, const Word& w, int position);
WordVector braiding_inverse_swap(const BraidingMatrix& q, const WordVector& v, int position);
/// sigma at positions (p, p+1): x_j x_m -> q_jm x_m x_j.
WordVector braiding_swap(const BraidingMatrix& q, const WordVector& v, int position);

/// Words of multidegree d in lexicographic order.
std::vector<Word> block_basis(const IntVector& d);

/// Braided symmetrizer S_m applied to v.
WordVector apply_symmetrizer(const BraidingMatrix& q, const WordVector& v);

/// Dense matrix over the Laurent ring.
class ScalarMatrix {
public:
    ScalarMatrix(ContextPtr ctx, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentScalar& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const LaurentScalar& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

private:
    int rows_;
    int cols_;
    std::vector<LaurentScalar> data_;
};

/// Column c holds S_m of the c-th basis word of the block.
ScalarMatrix symmetrizer_block(const BraidingMatrix& q, const IntVector& d);

/// Rank over the fraction field (fraction-free elimination, full pivoting).
int64_t matrix_rank(ScalarMatrix m);

/// dim of the degree-d component of the Nichols algebra.
int64_t graded_dimension(const BraidingMatrix& q, const IntVector& d);

using HilbertTable = std::map<IntVector, int64_t>;

/// All multidegrees of total degree <= max_degree. Blocks are independent and
/// may be evaluated on `threads` workers; the result does not depend on it.
HilbertTable hilbert_data(const BraidingMatrix& q, int max_degree, int threads = 1);

struct PbwDatum {
    IntVector root;
    int64_t multiplicity = 1;
    std::optional<int64_t> height;  // nullopt: not observed within the cutoff
    int64_t height_bound = 0;       // when unknown, the height is at least this

    friend bool operator==(const PbwDatum&, const PbwDatum&) = default;
};

/// Greedy factorisation of the Hilbert series as a product of truncated
/// geometric series, in graded-lex order of degrees. Throws
/// NegativeDiscrepancy or AmbiguousFactorization when the cutoff is too small.
std::vector<PbwDatum> pbw_infer(const HilbertTable& table, int rank, int max_degree);

/// (ad x_i)^m (x_j) with ad x_i(r) = x_i r - (g_i . r) x_i.
WordVector ad_power(const BraidingMatrix& q, int i, int j, int64_t m);

enum class Side { Left, Right };

/// Skew-derivation d_i; words without x_i map to zero.
WordVector skew_diff(const BraidingMatrix& q, Side side, int i, const WordVector& v);

/// For each word a_1..a_m of u, apply d_{a_1} o ... o d_{a_m} (left
/// derivations) to v and read off the constant term. Throws DegreeMismatch.
LaurentScalar pairing(const BraidingMatrix& q, const WordVector& u, const WordVector& v);

/// Entry (r, c) is the pairing of the r-th and c-th basis words of the block.
ScalarMatrix pairing_matrix(const BraidingMatrix& q, const IntVector& d);

}  // namespace nichols
