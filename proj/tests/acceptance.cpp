// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nichols/cartan.hpp"
#include "nichols/cli.hpp"
#include "nichols/errors.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/oracle.hpp"
#include "nichols/reflection.hpp"
#include "support.hpp"

using namespace nichols;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Failure details accumulate here; a criterion passes when it stays empty.
class Findings {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }
    bool ok() const { return problems_.empty(); }
    std::string summary() const {
        std::string s;
        for (size_t k = 0; k < problems_.size() && k < 3; ++k) s += (k ? "; " : "") + problems_[k];
        if (problems_.size() > 3) s += "; +" + std::to_string(problems_.size() - 3) + " more";
        return s;
    }

private:
    std::vector<std::string> problems_;
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit, const std::function<void(Findings&)>& body) {
    Findings f;
    const auto start = Clock::now();
    try {
        body(f);
    } catch (const std::exception& e) {
        f.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (time_limit > 0)
        f.expect(elapsed < time_limit, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(time_limit) + " s");
    if (!f.ok()) ++failures;
    std::cout << (f.ok() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ("
              << std::fixed << std::setprecision(2) << elapsed << " s)";
    if (!f.ok()) std::cout << "  " << f.summary();
    std::cout << std::endl;
}

std::set<IntVector> oracle_roots(const BraidingMatrix& q, int max_degree) {
    std::set<IntVector> roots;
    for (const auto& p : pbw_infer(hilbert_data(q, max_degree), q.rank(), max_degree)) roots.insert(p.root);
    return roots;
}

LaurentScalar qnumber(const UnitMonomial& a, int64_t m) {
    LaurentScalar s = LaurentScalar::zero(a.context());
    for (int64_t k = 0; k < m; ++k) s += LaurentScalar::embed(a.pow(k));
    return s;
}

int64_t squared_length(const CartanMatrix& c, const std::vector<int64_t>& d, const IntVector& b) {
    int64_t s = 0;
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) s += b[size_t(i)] * d[size_t(i)] * c(i, j) * b[size_t(j)];
    return s;
}

std::string name_of(const IntMatrix& m) { return m.to_string(); }

}  // namespace

int main() {
    const std::vector<std::pair<std::string, BraidingMatrix>> finite_generic{
        {"A2", fixtures::a2_generic()},
        {"B2", fixtures::b2_generic()},
        {"G2", fixtures::g2_generic()},
        {"A3", fixtures::a3_generic()}};

    criterion(1, "finite-type real roots equal the Cartan root system", 0, [&](Findings& f) {
        const std::map<std::string, size_t> expected{{"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}};
        for (const auto& [name, q] : finite_generic) {
            const auto start = Clock::now();
            const auto report = cli::analyze(q, Caps{});
            const double t = seconds_since(start);
            f.expect(t < 1.0, name + " took " + std::to_string(t) + " s");
            f.expect(report.positive_roots.has_value(), name + " not shown finite");
            if (!report.positive_roots) continue;
            f.expect(report.positive_roots->size() == expected.at(name), name + " root count");
            const auto system = root_system(*is_cartan_type(q));
            f.expect(*report.positive_roots == std::vector<IntVector>(system.positive().begin(), system.positive().end()),
                     name + " roots differ from root_system");
        }
    });

    criterion(2, "groupoid and oracle roots agree, multiplicity 1", 60, [&](Findings& f) {
        for (const auto& [name, q] : finite_generic) {
            const int max_degree = name == "A3" ? 5 : 6;
            const auto oracle = cli::run_oracle(q, max_degree, 4);
            f.expect(!oracle.cutoff_error, name + " oracle cutoff");
            if (oracle.cutoff_error) continue;
            const auto c = cli::compare_roots(cli::analyze(q, Caps{}), oracle);
            f.expect(c.match, name + " mismatch");
        }
    });

    criterion(3, "m_ij = -a_ij on 100 random Cartan braidings", 0, [&](Findings& f) {
        std::mt19937 rng(20260301);
        for (int trial = 0; trial < 100; ++trial) {
            const auto q = fixtures::random_cartan_braiding(rng, 4);
            const auto c = is_cartan_type(q);
            f.expect(c.has_value(), "generator produced a non-Cartan braiding");
            if (!c) continue;
            for (int i = 0; i < q.rank(); ++i)
                for (int j = 0; j < q.rank(); ++j)
                    if (i != j) f.expect(m_coefficient(q, i, j) == -(*c)(i, j), "trial " + std::to_string(trial));
        }
    });

    criterion(4, "reflected braidings carry the reflected oracle roots (D = 6)", 0, [&](Findings& f) {
        const int max_degree = 6;
        const std::vector<std::pair<std::string, BraidingMatrix>> worked{
            {"A2", fixtures::a2_generic()},
            {"A2 at z3", fixtures::a2_root3()},
            {"B2", fixtures::b2_generic()},
            {"G2", fixtures::g2_generic()}};
        for (const auto& [name, q] : worked) {
            const auto roots = oracle_roots(q, max_degree);
            for (int i = 0; i < q.rank(); ++i) {
                if (reflection_obstruction(q, i)) continue;
                const auto s = pseudo_reflection(q, i);
                std::set<IntVector> expected;
                for (const auto& r : roots) {
                    const auto image = s.apply(r);
                    if (sign_of(image) == 1 && total_degree(image) <= max_degree) expected.insert(image);
                }
                IntVector ei(size_t(q.rank()), 0);
                ei[size_t(i)] = 1;
                expected.insert(ei);
                f.expect(oracle_roots(reflect_braiding(q, i), max_degree) == expected,
                         name + " at index " + std::to_string(i + 1));
            }
        }
    });

    criterion(5, "reflection is an involution and preserves Cartan matrices", 0, [&](Findings& f) {
        std::mt19937 rng(5150);
        for (int trial = 0; trial < 100; ++trial) {
            const auto q = fixtures::random_reflectable(rng, 4);
            const auto c = is_cartan_type(q);
            for (int i = 0; i < q.rank(); ++i) {
                const auto r = reflect_braiding(q, i);
                f.expect(reflect_braiding(r, i) == q, "double reflection, trial " + std::to_string(trial));
                f.expect(r.at(i, i) == q.at(i, i), "q_ii changed");
                f.expect(is_cartan_type(r) == c, "Cartan matrix changed, trial " + std::to_string(trial));
            }
        }
        std::mt19937 rng2(5151);
        for (int trial = 0; trial < 100; ++trial) {
            const auto q = fixtures::random_cartan_braiding(rng2, 4);
            for (int i = 0; i < q.rank(); ++i) {
                const auto r = reflect_braiding(q, i);
                f.expect(reflect_braiding(r, i) == q, "double reflection on Cartan input");
                f.expect(is_cartan_type(r) == is_cartan_type(q), "Cartan matrix changed on Cartan input");
                for (int j = 0; j < q.rank(); ++j) f.expect(r.at(j, j) == q.at(j, j), "diagonal changed on Cartan input");
            }
        }
    });

    criterion(6, "infinite cases exceed caps; t1t2t3t4 has infinite order and trace 6", 0, [&](Findings& f) {
        const Caps caps{2000, 20000, 64};
        f.expect(!cli::analyze(fixtures::affine_generic(), caps).shown_finite(), "affine shown finite");
        const CartanMatrix cycle3{IntMatrix{{2, -2, -1}, {-1, 2, -2}, {-2, -1, 2}}};
        f.expect(!is_symmetrizable(cycle3), "3-cycle is symmetrizable");
        const auto q = realize_cartan(cycle3);
        f.expect(q.has_value(), "3-cycle not realized");
        if (q) f.expect(!cli::analyze(*q, caps).shown_finite(), "3-cycle shown finite");
        const CartanMatrix cycle4{IntMatrix{{2, -2, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {-1, 0, -1, 2}}};
        IntMatrix t = IntMatrix::identity(4);
        for (int i = 0; i < 4; ++i) t = t * simple_reflection(cycle4, i);
        f.expect(t == IntMatrix{{6, 0, 3, -5}, {3, 0, 1, -2}, {2, 1, 1, -2}, {1, 0, 1, -1}}, "t1t2t3t4 = " + name_of(t));
        f.expect(!matrix_order(t, 1000).has_value(), "t1t2t3t4 has finite order");
        f.expect(t.trace() == 6, "trace " + std::to_string(t.trace()));
    });

    criterion(7, "3-cycle trace formula matches the reflection product (|a_ij| <= 4)", 10, [&](Findings& f) {
        int checked = 0;
        for (int a12 = -4; a12 <= -1; ++a12)
            for (int a13 = -4; a13 <= -1; ++a13)
                for (int a21 = -4; a21 <= -1; ++a21)
                    for (int a23 = -4; a23 <= -1; ++a23)
                        for (int a31 = -4; a31 <= -1; ++a31)
                            for (int a32 = -4; a32 <= -1; ++a32) {
                                const CartanMatrix c{IntMatrix{{2, a12, a13}, {a21, 2, a23}, {a31, a32, 2}}};
                                const auto product = simple_reflection(c, 0) * simple_reflection(c, 1) * simple_reflection(c, 2);
                                f.expect(trace_3cycle(c) == product.trace(), name_of(c.matrix()));
                                ++checked;
                            }
        f.expect(checked == 4096, "enumeration size");
    });

    criterion(8, "Weyl groupoids satisfy the Brandt axioms and contain (id, E0)", 0, [&](Findings& f) {
        for (const auto& [name, q] : {std::pair{"rank 1 at -1", fixtures::rank1_minus_one()},
                                      std::pair{"A2 at z3", fixtures::a2_root3()}}) {
            const auto elements = weyl_brandt_elements(q);
            f.expect(check_brandt_axioms(elements).pass(), std::string(name) + " Brandt check");
            const WeylBrandtElement unit{IntMatrix::identity(q.rank()), IntMatrix::identity(q.rank())};
            f.expect(std::find(elements.begin(), elements.end(), unit) != elements.end(), std::string(name) + " lacks (id, E0)");
        }
        f.expect(weyl_brandt_elements(fixtures::rank1_minus_one()).size() == 4, "rank 1 size");
    });

    criterion(9, "finite-dimensional cases: dimensions 2 and 27, heights by root length", 30, [&](Findings& f) {
        int64_t total = 0;
        for (const auto& [d, v] : hilbert_data(fixtures::rank1_minus_one(), 4)) total += v;
        f.expect(total == 2, "rank 1 total " + std::to_string(total));

        const auto q = fixtures::a2_root3();
        const auto table = hilbert_data(q, 9, 4);
        total = 0;
        for (const auto& [d, v] : table) {
            total += v;
            if (total_degree(d) == 9) f.expect(v == 0, "degree 9 nonzero");
        }
        f.expect(total == 27, "A2 total " + std::to_string(total));
        const auto pbw = pbw_infer(table, 2, 9);
        f.expect(pbw.size() == 3, "A2 PBW root count");
        const auto c = *is_cartan_type(q);
        const auto d = *is_symmetrizable(c);
        std::map<int64_t, std::set<std::optional<int64_t>>> heights_by_length;
        for (const auto& p : pbw) {
            f.expect(p.height == 3, "height of " + vector_to_string(p.root));
            heights_by_length[squared_length(c, d, p.root)].insert(p.height);
        }
        for (const auto& [len, hs] : heights_by_length) f.expect(hs.size() == 1, "heights differ at one length");
    });

    criterion(10, "derivative, commutation, pairing and kernel identities", 0, [&](Findings& f) {
        std::mt19937 rng(1010);
        int instances = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto q = trial % 2 ? fixtures::random_reflectable(rng, 3) : fixtures::random_cartan_braiding(rng, 3);
            const int n = q.rank();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const auto m = m_coefficient(q, i, j);
                    if (!m || *m > 4) continue;
                    ++instances;
                    const auto qii = q.at(i, i);
                    for (int64_t k = 1; k <= *m + 1; ++k) {
                        const auto factor = LaurentScalar::embed(q.at(j, i).inverse()) * qnumber(qii.inverse(), k) *
                                            (LaurentScalar::one(q.context()) -
                                             LaurentScalar::embed(qii.pow(k - 1) * sym_product(q, i, j)));
                        f.expect(skew_diff(q, Side::Right, i, ad_power(q, i, j, k)) == ad_power(q, i, j, k - 1).scaled(factor),
                                 "right derivative formula");
                    }
                    const auto adpow = ad_power(q, i, j, *m);
                    f.expect(!pairing(q, adpow, adpow).is_zero(), "lambda vanishes");
                    const auto killed = ad_power(q, i, j, *m + 1);
                    f.expect(apply_symmetrizer(q, killed).is_zero(), "ad^(m+1) not in ker S");
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            f.expect(skew_diff(q, Side::Left, a, skew_diff(q, Side::Right, b, adpow)) ==
                                         skew_diff(q, Side::Right, b, skew_diff(q, Side::Left, a, adpow)),
                                     "derivatives do not commute");
                }
        }
        f.expect(instances >= 50, "only " + std::to_string(instances) + " instances");
    });

    criterion(11, "sign-coherent points are multiples of roots (A2, B2, radius 2)", 0, [&](Findings& f) {
        for (const auto& c : {CartanMatrix(IntMatrix{{2, -1}, {-1, 2}}), CartanMatrix(IntMatrix{{2, -2}, {-1, 2}})}) {
            std::set<IntVector> expected{{0, 0}};
            for (const auto& r : root_system(c).all())
                for (int64_t k = 1; k <= 2; ++k)
                    if (std::abs(k * r[0]) <= 2 && std::abs(k * r[1]) <= 2) expected.insert({k * r[0], k * r[1]});
            const auto got = sign_coherent_set(c, 2);
            f.expect(std::set<IntVector>(got.begin(), got.end()) == expected, name_of(c.matrix()));
        }
    });

    return failures == 0 ? 0 : 1;
}
