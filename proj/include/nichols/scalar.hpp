#pragma once

// Exact scalars for diagonal braidings.
//
// Two domains live here. UnitMonomial is the multiplicative group
// Z/N x Z^p of elements z^a * t_1^e_1 ... t_p^e_p, where z is a fixed
// primitive N-th root of unity and the t_k are independent transcendental
// parameters. Every structure constant q_ij is such a monomial, and all
// groupoid-side computation stays inside this group.
//
// LaurentScalar is the ring Q(z)[t_1^+-1, ..., t_p^+-1] with coefficients in
// the cyclotomic field Q(z) = Q[x]/Phi_N. It is the entry type of the
// brute-force symmetrizer matrices.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

using RationalPoly = std::vector<mpq_class>;  // low degree first, no trailing zeros
using IntegerPoly = std::vector<mpz_class>;

/// The N-th cyclotomic polynomial, by exact division of x^N - 1 by Phi_d for proper divisors d | N.
IntegerPoly cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Q(z) for a primitive N-th root of unity z, represented modulo Phi_N.
class CyclotomicField {
public:
    explicit CyclotomicField(int order);

    int order() const { return order_; }
    int degree() const { return int(modulus_.size()) - 1; }
    const RationalPoly& modulus() const { return modulus_; }

    /// Canonical representative of z^k.
    RationalPoly root_power(int64_t k) const;
    RationalPoly reduce(RationalPoly p) const;
    RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    RationalPoly inverse(const RationalPoly& a) const;

private:
    int order_;
    RationalPoly modulus_;  // monic Phi_N
    std::vector<RationalPoly> powers_;  // z^0 .. z^{N-1}, reduced
};

class ScalarContext;
using ContextPtr = std::shared_ptr<const ScalarContext>;

/// Fixes the coefficient field: the torsion order N (0 when no root of unity is
/// present) and the ordered list of free parameter names.
class ScalarContext {
public:
    /// Validates: N >= 0, names are distinct identifiers, "z" is reserved.
    static ContextPtr make(int torsion_order, std::vector<std::string> param_names);

    int torsion_order() const { return torsion_order_; }
    const std::vector<std::string>& param_names() const { return param_names_; }
    int param_count() const { return int(param_names_.size()); }
    std::optional<int> param_index(const std::string& name) const;
    const CyclotomicField& field() const { return field_; }

    friend bool operator==(const ScalarContext& a, const ScalarContext& b) {
        return a.torsion_order_ == b.torsion_order_ && a.param_names_ == b.param_names_;
    }

private:
    ScalarContext(int torsion_order, std::vector<std::string> param_names);

    int torsion_order_;
    std::vector<std::string> param_names_;
    CyclotomicField field_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// z^a * prod t_k^e_k. Immutable value; equality is exponent-wise within one context.
class UnitMonomial {
public:
    explicit UnitMonomial(ContextPtr ctx);
    UnitMonomial(ContextPtr ctx, int64_t torsion_exp, std::vector<int64_t> free_exps);

    static UnitMonomial root_of_unity(ContextPtr ctx, int64_t k);
    static UnitMonomial parameter(ContextPtr ctx, int index, int64_t exponent = 1);

    const ContextPtr& context() const { return ctx_; }
    int64_t torsion_exp() const { return torsion_; }
    const std::vector<int64_t>& free_exps() const { return free_; }

    bool is_one() const;
    UnitMonomial inverse() const;
    UnitMonomial pow(int64_t k) const;

    friend UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b);

    friend bool operator==(const UnitMonomial& a, const UnitMonomial& b);
    /// Deterministic total order (torsion exponent, then free exponents).
    friend bool operator<(const UnitMonomial& a, const UnitMonomial& b);

    /// Text form per the monomial grammar: "1", "z^4*t^-1", ...
    std::string to_string() const;

private:
    ContextPtr ctx_;
    int64_t torsion_;
    std::vector<int64_t> free_;
};

UnitMonomial unit_mul(const UnitMonomial& a, const UnitMonomial& b);
UnitMonomial unit_inv(const UnitMonomial& a);
UnitMonomial unit_pow(const UnitMonomial& a, int64_t k);
bool is_one(const UnitMonomial& a);

/// nullopt means infinite order (some parameter exponent is nonzero).
std::optional<int64_t> multiplicative_order(const UnitMonomial& a);

/// True iff [m]_a = 1 + a + ... + a^{m-1} vanishes (characteristic zero).
bool is_qnumber_zero(int64_t m, const UnitMonomial& a);

/// All integers a with base^a == target: none, exactly one, or a residue class.
struct PowerSolutions {
    enum class Kind { None, Unique, Residue } kind = Kind::None;
    int64_t value = 0;    // the unique solution, or the least nonnegative residue
    int64_t modulus = 0;  // period of the residue class (order of base)

    /// Least a >= 0 in the solution set.
    std::optional<int64_t> least_nonnegative() const;
    /// Greatest a <= 0 in the solution set.
    std::optional<int64_t> greatest_nonpositive() const;
};

PowerSolutions solve_power(const UnitMonomial& base, const UnitMonomial& target);

/// Parses `"1" | factor ("*" factor)*`, `factor := atom ("^" integer)?`, `atom := "z" | param`.
/// Throws ParseError.
UnitMonomial parse_monomial(const ContextPtr& ctx, const std::string& text);

/// Element of Q(z), kept reduced modulo Phi_N.
struct CycloRational {
    RationalPoly coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const CycloRational&, const CycloRational&) = default;
};

/// Multivariate Laurent polynomial over Q(z). Zero coefficients are never stored.
class LaurentScalar {
public:
    using Exponents = std::vector<int64_t>;
    using TermMap = std::map<Exponents, CycloRational>;

    explicit LaurentScalar(ContextPtr ctx);

    static LaurentScalar zero(ContextPtr ctx) { return LaurentScalar(std::move(ctx)); }
    static LaurentScalar one(ContextPtr ctx);
    static LaurentScalar from_integer(ContextPtr ctx, long value);
    static LaurentScalar embed(const UnitMonomial& a);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    /// Largest total exponent degree over all terms (0 for the zero element).
    int64_t total_degree() const;
    bool is_unit_term() const { return terms_.size() == 1; }

    LaurentScalar operator-() const;
    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    LaurentScalar& operator+=(const LaurentScalar& b);
    LaurentScalar& operator-=(const LaurentScalar& b);

    /// Multiply by a unit monomial (exponent shift and a root-of-unity twist).
    LaurentScalar times(const UnitMonomial& u) const;

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

    std::string to_string() const;

private:
    friend LaurentScalar exact_divide(const LaurentScalar& a, const LaurentScalar& b);
    void add_term(const Exponents& e, const RationalPoly& c);

    ContextPtr ctx_;
    TermMap terms_;
};

/// Exact quotient a / b in the Laurent ring; throws std::domain_error if b does not divide a.
LaurentScalar exact_divide(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace nichols
