#include <doctest.h>

#include <set>

#include "nichols/cartan.hpp"
#include "nichols/errors.hpp"
#include "support.hpp"

using namespace nichols;

namespace {

const CartanMatrix kA2{IntMatrix{{2, -1}, {-1, 2}}};
const CartanMatrix kB2{IntMatrix{{2, -2}, {-1, 2}}};
const CartanMatrix kG2{IntMatrix{{2, -3}, {-1, 2}}};
const CartanMatrix kA3{IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
const CartanMatrix kAffine{IntMatrix{{2, -2}, {-2, 2}}};
const CartanMatrix kCycle4{IntMatrix{{2, -2, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {-1, 0, -1, 2}}};
const CartanMatrix kCycle5{
    IntMatrix{{2, -2, 0, 0, -1}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {-1, 0, 0, -1, 2}}};

CartanMatrix path(int n, std::optional<std::pair<int, int>> multi = std::nullopt, int64_t value = -1) {
    IntMatrix a = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
    if (multi) a(multi->first, multi->second) = value;
    return CartanMatrix(a);
}

CartanMatrix d_type(int n) {
    IntMatrix a = path(n).matrix();
    a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
    a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
    return CartanMatrix(a);
}

CartanMatrix e_type(int n) {
    // branch at node 2 of a path 0..n-2, extra node n-1 attached to node 2
    IntMatrix a = path(n - 1).matrix();
    IntMatrix b(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) b(i, j) = a(i, j);
    b(n - 1, n - 1) = 2;
    b(2, n - 1) = b(n - 1, 2) = -1;
    return CartanMatrix(b);
}

// The Weyl group of a finite root system has |W| = number of bases obtained
// from the simple roots, computed here by an independent orbit count.
size_t positive_count(const CartanMatrix& c) { return root_system(c).positive().size(); }

}  // namespace

TEST_CASE("symmetrizers") {
    CHECK(is_symmetrizable(kA3) == std::vector<int64_t>{1, 1, 1});
    CHECK(is_symmetrizable(kB2) == std::vector<int64_t>{1, 2});
    CHECK(is_symmetrizable(kG2) == std::vector<int64_t>{1, 3});
    CHECK_FALSE(is_symmetrizable(kCycle4).has_value());
    CHECK(is_symmetrizable(CartanMatrix(IntMatrix{{2, 0}, {0, 2}})) == std::vector<int64_t>{1, 1});
    const auto d = is_symmetrizable(path(4, std::pair{2, 3}, -2));
    REQUIRE(d);
    const auto c = path(4, std::pair{2, 3}, -2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK((*d)[size_t(i)] * c(i, j) == (*d)[size_t(j)] * c(j, i));
}

TEST_CASE("finite type and labels") {
    auto label = [](const CartanMatrix& c) {
        const auto r = is_finite_type(c);
        return r.components.size() == 1 ? r.components.front().label : std::string("?");
    };
    CHECK(label(kA3) == "A_3");
    CHECK(label(kA2) == "A_2");
    CHECK(label(kB2) == "B_2");
    CHECK(label(kG2) == "G_2");
    CHECK(label(path(3, std::pair{1, 2}, -2)) == "C_3");
    CHECK(label(path(3, std::pair{2, 1}, -2)) == "B_3");
    CHECK(label(path(4, std::pair{1, 2}, -2)) == "F_4");
    CHECK(label(d_type(4)) == "D_4");
    CHECK(label(d_type(5)) == "D_5");
    CHECK(label(e_type(6)) == "E_6");
    CHECK(label(e_type(7)) == "E_7");
    CHECK(label(e_type(8)) == "E_8");
    CHECK_FALSE(is_finite_type(kAffine).finite);
    CHECK_FALSE(is_finite_type(kCycle5).finite);
    CHECK_FALSE(is_finite_type(kCycle4).finite);
    CHECK_FALSE(is_finite_type(e_type(9)).finite);

    const auto split = is_finite_type(CartanMatrix(IntMatrix{{2, 0, 0}, {0, 2, -3}, {0, -1, 2}}));
    CHECK(split.finite);
    REQUIRE(split.components.size() == 2);
    CHECK(split.components[0].nodes == std::vector<int>{0});
    CHECK(split.components[1].label == "G_2");
}

TEST_CASE("root systems") {
    CHECK(root_system(kA2).size() == 6);
    CHECK(root_system(kB2).size() == 8);
    CHECK(root_system(kG2).size() == 12);
    const auto g2 = root_system(kG2);
    CHECK(std::vector<IntVector>(g2.positive().begin(), g2.positive().end()) ==
          std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    CHECK_THROWS_AS(root_system(kAffine), NotFiniteType);

    for (int n = 1; n <= 4; ++n) {
        CHECK(positive_count(path(n)) == size_t(n * (n + 1) / 2));
        if (n >= 2) {
            CHECK(positive_count(path(n, std::pair{n - 1, n - 2}, -2)) == size_t(n * n));
            CHECK(positive_count(path(n, std::pair{n - 2, n - 1}, -2)) == size_t(n * n));
        }
    }
    // closure under reflections and negation
    for (const auto& c : {kA3, kB2, kG2, path(4, std::pair{1, 2}, -2)}) {
        const auto roots = root_system(c);
        for (int i = 0; i < c.rank(); ++i)
            for (const auto& r : roots.all()) CHECK(roots.contains(simple_reflection(c, i).apply(r)));
    }
}

TEST_CASE("Weyl groups") {
    CHECK(weyl_group(kA2).size() == 6);
    CHECK(weyl_group(kB2).size() == 8);
    CHECK(weyl_group(kG2).size() == 12);
    CHECK(weyl_group(kA3).size() == 24);
    CHECK(weyl_group(path(4, std::pair{1, 2}, -2)).size() == 1152);
    CHECK_THROWS_AS(weyl_group(kAffine, 500), CapExceeded);
}

TEST_CASE("three-cycle trace formula") {
    const CartanMatrix c{IntMatrix{{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}}};
    const auto product = simple_reflection(c, 0) * simple_reflection(c, 1) * simple_reflection(c, 2);
    CHECK(trace_3cycle(c) == product.trace());
    CHECK(trace_3cycle(c) == 3);
    const CartanMatrix affine{IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};
    CHECK(trace_3cycle(affine) ==
          (simple_reflection(affine, 0) * simple_reflection(affine, 1) * simple_reflection(affine, 2)).trace());
    CHECK_THROWS_AS(trace_3cycle(kA3), NotA3Cycle);
    CHECK_THROWS_AS(trace_3cycle(kA2), NotA3Cycle);
}

TEST_CASE("matrix orders") {
    CHECK(matrix_order(IntMatrix::identity(3)) == 1);
    for (int i = 0; i < 3; ++i) CHECK(matrix_order(simple_reflection(kA3, i)) == 2);
    CHECK(matrix_order(simple_reflection(kG2, 0) * simple_reflection(kG2, 1)) == 6);
    const IntMatrix t4{{6, 0, 3, -5}, {3, 0, 1, -2}, {2, 1, 1, -2}, {1, 0, 1, -1}};
    CHECK_FALSE(matrix_order(t4, 500).has_value());
    CHECK_THROWS_AS(matrix_order(IntMatrix{{2, 0}, {0, 1}}), NotInvertible);

    IntMatrix product = IntMatrix::identity(4);
    for (int i = 0; i < 4; ++i) product = product * simple_reflection(kCycle4, i);
    CHECK(product == t4);
    CHECK(product.trace() == 6);
}

TEST_CASE("sign-coherent points") {
    // A2, radius 2: 0 and the multiples +-1, +-2 of the three positive roots
    std::set<IntVector> expected{{0, 0}};
    for (const auto& r : root_system(kA2).all())
        for (int64_t m : {1, 2}) expected.insert({m * r[0], m * r[1]});
    const auto got = sign_coherent_set(kA2, 2);
    CHECK(std::set<IntVector>(got.begin(), got.end()) == expected);

    const auto rank1 = sign_coherent_set(CartanMatrix(IntMatrix{{2}}), 3);
    CHECK(rank1.size() == 7);

    std::set<IntVector> b2{{0, 0}};
    for (const auto& r : root_system(kB2).all())
        for (int64_t m : {1, 2})
            if (std::abs(m * r[0]) <= 2 && std::abs(m * r[1]) <= 2) b2.insert({m * r[0], m * r[1]});
    const auto got_b2 = sign_coherent_set(kB2, 2);
    CHECK(std::set<IntVector>(got_b2.begin(), got_b2.end()) == b2);
    CHECK_THROWS_AS(sign_coherent_set(kAffine, 2), NotFiniteType);
}

TEST_CASE("realizability") {
    CHECK_FALSE(realize_cartan(kCycle5).has_value());
    const auto four = realize_cartan(kCycle4);
    REQUIRE(four);
    CHECK(is_cartan_type(*four) == kCycle4);

    const CartanMatrix cycle3{IntMatrix{{2, -2, -1}, {-1, 2, -2}, {-2, -1, 2}}};
    CHECK_FALSE(is_symmetrizable(cycle3).has_value());
    const auto three = realize_cartan(cycle3);
    REQUIRE(three);
    CHECK(is_cartan_type(*three) == cycle3);

    for (const auto& c : {kA2, kB2, kG2, kA3, kAffine}) {
        const auto q = realize_cartan(c);
        REQUIRE(q);
        CHECK(is_cartan_type(*q) == c);
    }
}

TEST_CASE("Cartan-type braidings of finite type have root systems as real roots") {
    for (const auto& q : {fixtures::a2_generic(), fixtures::b2_generic(), fixtures::g2_generic(), fixtures::a3_generic(),
                          fixtures::a2_root3()}) {
        const auto c = is_cartan_type(q);
        REQUIRE(c);
        CHECK(real_roots(q) == root_system(*c));
    }
}
