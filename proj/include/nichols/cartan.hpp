#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/int_matrix.hpp"

namespace nichols {

struct CartanComponent {
    std::vector<int> nodes;  // 0-based, ascending
    std::string label;       // "A_3", "G_2", ... or "not finite type"
};

struct FiniteTypeReport {
    bool finite = false;
    std::vector<CartanComponent> components;
    std::optional<std::vector<int64_t>> symmetrizer;
};

/// Positive coprime integers d with d_i a_ij = d_j a_ji, if they exist.
std::optional<std::vector<int64_t>> is_symmetrizable(const CartanMatrix& c);

/// Finite type iff symmetrizable with positive definite (d_i a_ij). Labels are
/// informational only.
FiniteTypeReport is_finite_type(const CartanMatrix& c);

/// sigma_i(e_j) = e_j - a_ij e_i.
IntMatrix simple_reflection(const CartanMatrix& c, int i);

/// Closure of the simple roots under simple reflections. Throws NotFiniteType.
RootSet root_system(const CartanMatrix& c);

/// All products of simple reflections. Throws CapExceeded beyond `cap` elements.
std::vector<IntMatrix> weyl_group(const CartanMatrix& c, size_t cap = 100000);

/// a12 a21 + a13 a31 + a23 a32 - a12 a23 a31 - 3. Throws NotA3Cycle.
int64_t trace_3cycle(const CartanMatrix& c);

/// Least k <= cap with m^k = id, or nullopt past the cap. Throws NotInvertible
/// unless det m = +-1.
std::optional<int64_t> matrix_order(const IntMatrix& m, int64_t cap = 1000);

/// Points of the box [-radius, radius]^n whose Weyl group orbit stays
/// sign-coherent, in graded-lex order. Throws NotFiniteType.
std::vector<IntVector> sign_coherent_set(const CartanMatrix& c, int64_t radius);

/// A braiding of Cartan type c, or nullopt if no diagonal braiding over any
/// context has Cartan matrix c. Solves the exponent equations
/// q_ii^a_ij = q_jj^a_ji together with ord(q_ii) > -a_ij.
/// Throws CapExceeded if the torsion search space is too large.
std::optional<BraidingMatrix> realize_cartan(const CartanMatrix& c);

}  // namespace nichols
