#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/int_matrix.hpp"
#include "nichols/reflection.hpp"

namespace nichols {

/// Search limits. Exceeding any of them means "not shown finite", never "infinite".
struct Caps {
    size_t max_states = 10000;
    size_t max_arrows = 100000;
    int max_depth = 64;
};

struct GroupoidArrow {
    size_t source;
    size_t target;
    int label;
    ReflectionMap basis_change;  // s_label computed at the source
};

/// Reflection at `label` is undefined at `state` because m_{label,blocking} is.
struct Obstruction {
    size_t state;
    int label;
    int blocking;
};

/// Objects are braiding matrices (entrywise identity), arrows are reflections.
class Groupoid {
public:
    const std::vector<BraidingMatrix>& states() const { return states_; }
    const std::vector<GroupoidArrow>& arrows() const { return arrows_; }
    const std::vector<Obstruction>& obstructions() const { return obstructions_; }
    bool cap_exceeded() const { return cap_exceeded_; }
    int rank() const { return states_.empty() ? 0 : states_.front().rank(); }

    std::optional<size_t> find(const BraidingMatrix& q) const;
    /// Arrow index leaving `state` with `label`, if the reflection is defined there.
    std::optional<size_t> arrow_from(size_t state, int label) const;

private:
    friend Groupoid build_groupoid(const BraidingMatrix& q, const Caps& caps);

    std::vector<BraidingMatrix> states_;
    std::vector<GroupoidArrow> arrows_;
    std::vector<Obstruction> obstructions_;
    std::map<std::vector<int64_t>, size_t> index_;
    std::vector<std::vector<std::optional<size_t>>> out_;
    bool cap_exceeded_ = false;
};

/// Breadth-first closure of {q} under reflection at every admissible index.
/// State ids follow discovery order (id 0 is q). On a cap the partial graph is
/// returned with cap_exceeded() set.
Groupoid build_groupoid(const BraidingMatrix& q, const Caps& caps = {});

struct GradedLexLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return graded_lex_less(a, b); }
};

/// Delta = Delta_+ u -Delta_+, stored through its positive part.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    /// Inserts v (must be nonzero and sign-coherent); stores its positive representative.
    void insert(const IntVector& v);
    bool contains(const IntVector& v) const;
    const std::set<IntVector, GradedLexLess>& positive() const { return positive_; }
    /// Positive roots then their negatives, each half in graded-lex order.
    std::vector<IntVector> all() const;
    size_t size() const { return 2 * positive_.size(); }

    friend bool operator==(const RootSet& a, const RootSet& b) { return a.positive_ == b.positive_; }

private:
    int rank_ = 0;
    std::set<IntVector, GradedLexLess> positive_;
};

/// +1 if v in N_0^n \ {0}, -1 if -v is, 0 if v == 0, and nullopt for mixed signs.
std::optional<int> sign_of(const IntVector& v);

/// Ordered bases E reachable from the standard basis. A reflection at label i
/// taken at a state carrying E produces the basis E * s_i.
struct BasisOrbit {
    std::vector<IntMatrix> bases;  // bases[0] is the identity
    std::vector<size_t> witness;   // a state carrying each basis (first discovered)
    /// Every (state, basis index) pair reached.
    std::vector<std::pair<size_t, size_t>> nodes;
    bool cap_exceeded = false;
};

BasisOrbit basis_orbit(const BraidingMatrix& q, const Caps& caps = {});
BasisOrbit basis_orbit(const Groupoid& g, const Caps& caps = {});

/// Columns of all bases in the orbit, closed under negation.
/// Throws CapExceeded if the orbit is not finite within caps, MixedSignRoot on
/// a column with mixed signs.
RootSet real_roots(const BraidingMatrix& q, const Caps& caps = {});
RootSet real_roots(const BasisOrbit& orbit);

/// (s, E): s maps the basis E to the basis E * s. Composition
/// (s, E) o (t, F) is defined iff F * t == E and equals (t * s, F).
struct WeylBrandtElement {
    IntMatrix s;
    IntMatrix basis;

    friend auto operator<=>(const WeylBrandtElement&, const WeylBrandtElement&) = default;
    friend bool operator==(const WeylBrandtElement&, const WeylBrandtElement&) = default;
};

/// All (s, E) with E reachable and s a composite of reflections along a chain
/// starting at a state carrying E. Throws CapExceeded.
std::vector<WeylBrandtElement> weyl_brandt_elements(const BraidingMatrix& q, const Caps& caps = {});

struct AxiomResult {
    int axiom;  // 1..6 in the order of the Brandt groupoid definition
    bool pass;
    std::string witness;
};

struct BrandtReport {
    std::vector<AxiomResult> axioms;

    bool pass() const;
    /// Lowest-numbered failing axiom, if any.
    std::optional<AxiomResult> first_failure() const;
};

/// Checks the six Brandt groupoid axioms literally on a finite element set.
/// Composable pairs are those with F * t == E whose composite lies in the set.
BrandtReport check_brandt_axioms(const std::vector<WeylBrandtElement>& elements);

/// DOT rendering: nodes by state id, edges labelled by reflection index,
/// obstructed directions as dashed self-annotations.
std::string export_dot(const Groupoid& g);

}  // namespace nichols
