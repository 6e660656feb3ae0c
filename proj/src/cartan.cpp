#include "nichols/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::vector<std::vector<int>> components_of(const CartanMatrix& c) {
    const int n = c.rank();
    std::vector<int> comp(size_t(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[size_t(s)] >= 0) continue;
        std::vector<int> nodes{s};
        comp[size_t(s)] = int(out.size());
        for (size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (j != nodes[k] && c(nodes[k], j) != 0 && comp[size_t(j)] < 0) {
                    comp[size_t(j)] = int(out.size());
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(std::move(nodes));
    }
    return out;
}

bool positive_definite(const std::vector<std::vector<mpq_class>>& sym) {
    auto m = sym;
    const size_t n = m.size();
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (size_t r = k + 1; r < n; ++r) {
            const mpq_class f = m[r][k] / m[k][k];
            for (size_t col = k; col < n; ++col) m[r][col] -= f * m[k][col];
        }
    }
    return true;
}

std::string classify(const CartanMatrix& c, const std::vector<int>& nodes, const std::vector<int64_t>& d) {
    const int r = int(nodes.size());
    auto name = [](char letter, int rank) { return std::string(1, letter) + "_" + std::to_string(rank); };
    std::vector<int> degree(size_t(r), 0);
    int max_product = 1;
    std::pair<int, int> multi_edge{-1, -1};
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            if (a == b || c(nodes[size_t(a)], nodes[size_t(b)]) == 0) continue;
            ++degree[size_t(a)];
            const int64_t p = c(nodes[size_t(a)], nodes[size_t(b)]) * c(nodes[size_t(b)], nodes[size_t(a)]);
            if (p > max_product) {
                max_product = int(p);
                multi_edge = {a, b};
            }
        }
    if (r == 1) return "A_1";
    if (max_product == 3) return "G_2";
    if (max_product == 2) {
        if (r == 2) return "B_2";
        if (r == 4 && degree[size_t(multi_edge.first)] == 2 && degree[size_t(multi_edge.second)] == 2) return "F_4";
        const int64_t shortest = *std::min_element(d.begin(), d.end());
        const auto short_nodes = std::count(d.begin(), d.end(), shortest);
        return name(short_nodes == 1 ? 'B' : 'C', r);
    }
    const auto branch = std::find(degree.begin(), degree.end(), 3);
    if (branch == degree.end()) return name('A', r);
    // arm lengths from the branch node
    const int centre = int(branch - degree.begin());
    std::vector<int> arms;
    for (int start = 0; start < r; ++start) {
        if (start == centre || c(nodes[size_t(centre)], nodes[size_t(start)]) == 0) continue;
        int length = 1, prev = centre, cur = start;
        for (bool moved = true; moved;) {
            moved = false;
            for (int next = 0; next < r; ++next)
                if (next != cur && next != prev && c(nodes[size_t(cur)], nodes[size_t(next)]) != 0) {
                    prev = cur;
                    cur = next;
                    ++length;
                    moved = true;
                    break;
                }
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return name('D', r);
    if (arms == std::vector<int>{1, 2, 2}) return "E_6";
    if (arms == std::vector<int>{1, 2, 3}) return "E_7";
    if (arms == std::vector<int>{1, 2, 4}) return "E_8";
    return "unlabelled";
}

void require_finite(const CartanMatrix& c) {
    if (!is_finite_type(c).finite) throw NotFiniteType();
}

}  // namespace

std::optional<std::vector<int64_t>> is_symmetrizable(const CartanMatrix& c) {
    const int n = c.rank();
    std::vector<mpq_class> d(static_cast<size_t>(n));
    for (const auto& nodes : components_of(c)) {
        d[size_t(nodes.front())] = 1;
        std::vector<bool> set(size_t(n), false);
        set[size_t(nodes.front())] = true;
        std::deque<int> queue{nodes.front()};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || c(i, j) == 0 || set[size_t(j)]) continue;
                d[size_t(j)] = d[size_t(i)] * mpq_class(c(i, j)) / mpq_class(c(j, i));
                set[size_t(j)] = true;
                queue.push_back(j);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[size_t(i)] * c(i, j) != d[size_t(j)] * c(j, i)) return std::nullopt;

    mpz_class scale = 1;
    for (const auto& x : d) scale = lcm(scale, mpz_class(x.get_den()));
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : d) {
        ints.push_back(mpz_class(x * scale));
        g = gcd(g, ints.back());
    }
    std::vector<int64_t> out;
    for (const auto& x : ints) out.push_back(mpz_class(x / g).get_si());
    return out;
}

FiniteTypeReport is_finite_type(const CartanMatrix& c) {
    FiniteTypeReport report;
    report.symmetrizer = is_symmetrizable(c);
    const auto components = components_of(c);
    report.finite = true;
    for (const auto& nodes : components) {
        CartanComponent comp{nodes, "not finite type"};
        if (report.symmetrizer) {
            const auto& d = *report.symmetrizer;
            std::vector<std::vector<mpq_class>> sym(nodes.size(), std::vector<mpq_class>(nodes.size()));
            std::vector<int64_t> local_d;
            for (size_t a = 0; a < nodes.size(); ++a) {
                local_d.push_back(d[size_t(nodes[a])]);
                for (size_t b = 0; b < nodes.size(); ++b) sym[a][b] = mpq_class(d[size_t(nodes[a])] * c(nodes[a], nodes[b]));
            }
            if (positive_definite(sym)) comp.label = classify(c, nodes, local_d);
        }
        report.finite = report.finite && comp.label != "not finite type";
        report.components.push_back(std::move(comp));
    }
    return report;
}

IntMatrix simple_reflection(const CartanMatrix& c, int i) {
    if (i < 0 || i >= c.rank()) throw IndexOutOfRange("reflection index out of range");
    IntMatrix s = IntMatrix::identity(c.rank());
    for (int j = 0; j < c.rank(); ++j) s(i, j) = j == i ? -1 : -c(i, j);
    return s;
}

RootSet root_system(const CartanMatrix& c) {
    require_finite(c);
    const int n = c.rank();
    std::vector<IntMatrix> reflections;
    for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(c, i));
    std::set<IntVector> seen;
    std::deque<IntVector> queue;
    for (int i = 0; i < n; ++i) {
        IntVector e(size_t(n), 0);
        e[size_t(i)] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        const IntVector v = queue.front();
        queue.pop_front();
        for (const auto& s : reflections) {
            IntVector w = s.apply(v);
            if (seen.insert(w).second) queue.push_back(std::move(w));
        }
    }
    RootSet roots(n);
    for (const auto& v : seen) roots.insert(v);
    return roots;
}

std::vector<IntMatrix> weyl_group(const CartanMatrix& c, size_t cap) {
    const int n = c.rank();
    std::vector<IntMatrix> reflections;
    for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(c, i));
    std::set<IntMatrix> seen{IntMatrix::identity(n)};
    std::vector<IntMatrix> order{IntMatrix::identity(n)};
    for (size_t k = 0; k < order.size(); ++k)
        for (const auto& s : reflections) {
            IntMatrix w = order[k] * s;
            if (!seen.insert(w).second) continue;
            if (order.size() >= cap) throw CapExceeded("Weyl group exceeds " + std::to_string(cap) + " elements");
            order.push_back(std::move(w));
        }
    std::sort(order.begin(), order.end());
    return order;
}

int64_t trace_3cycle(const CartanMatrix& c) {
    if (c.rank() != 3) throw NotA3Cycle();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && c(i, j) >= 0) throw NotA3Cycle();
    return c(0, 1) * c(1, 0) + c(0, 2) * c(2, 0) + c(1, 2) * c(2, 1) - c(0, 1) * c(1, 2) * c(2, 0) - 3;
}

std::optional<int64_t> matrix_order(const IntMatrix& m, int64_t cap) {
    if (m.rows() != m.cols()) throw NotInvertible();
    const int64_t det = m.determinant();
    if (det != 1 && det != -1) throw NotInvertible();
    const int n = m.rows();
    using BigMatrix = std::vector<mpz_class>;
    BigMatrix base(size_t(n) * n), power(size_t(n) * n);
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) base[size_t(r * n + col)] = power[size_t(r * n + col)] = mpz_class(std::to_string(m(r, col)));
    auto is_identity = [&](const BigMatrix& a) {
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                if (a[size_t(r * n + col)] != (r == col ? 1 : 0)) return false;
        return true;
    };
    for (int64_t k = 1; k <= cap; ++k) {
        if (is_identity(power)) return k;
        BigMatrix next(size_t(n) * n);
        for (int r = 0; r < n; ++r)
            for (int l = 0; l < n; ++l) {
                if (power[size_t(r * n + l)] == 0) continue;
                for (int col = 0; col < n; ++col) next[size_t(r * n + col)] += power[size_t(r * n + l)] * base[size_t(l * n + col)];
            }
        power = std::move(next);
    }
    return std::nullopt;
}

std::vector<IntVector> sign_coherent_set(const CartanMatrix& c, int64_t radius) {
    require_finite(c);
    if (radius < 1) throw std::invalid_argument("box radius must be at least 1");
    const int n = c.rank();
    std::vector<IntMatrix> reflections;
    for (int i = 0; i < n; ++i) reflections.push_back(simple_reflection(c, i));

    std::vector<IntVector> out;
    IntVector point(size_t(n), -radius);
    for (;;) {
        std::set<IntVector> orbit{point};
        std::deque<IntVector> queue{point};
        bool coherent = true;
        while (!queue.empty() && coherent) {
            const IntVector v = queue.front();
            queue.pop_front();
            coherent = sign_of(v).has_value();
            for (const auto& s : reflections) {
                IntVector w = s.apply(v);
                if (orbit.insert(w).second) queue.push_back(std::move(w));
            }
        }
        if (coherent) out.push_back(point);
        int k = 0;
        while (k < n && point[size_t(k)] == radius) point[size_t(k++)] = -radius;
        if (k == n) break;
        ++point[size_t(k)];
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

// ---------------------------------------------------------------------------
// Realizability

namespace {

// Column-operation diagonalisation: returns the diagonal entries and V with
// B * V having nonzero entries only at (k, k) for k < diag.size() (after row ops).
struct Diagonalised {
    std::vector<int64_t> diag;
    IntMatrix v;
};

Diagonalised diagonalise(IntMatrix b) {
    const int rows = b.rows(), cols = b.cols();
    IntMatrix v = IntMatrix::identity(cols);
    std::vector<int64_t> diag;
    auto swap_rows = [&](int r1, int r2) {
        for (int c = 0; c < cols; ++c) std::swap(b(r1, c), b(r2, c));
    };
    auto swap_cols = [&](int c1, int c2) {
        for (int r = 0; r < rows; ++r) std::swap(b(r, c1), b(r, c2));
        for (int r = 0; r < cols; ++r) std::swap(v(r, c1), v(r, c2));
    };
    for (int k = 0; k < std::min(rows, cols); ++k) {
        for (;;) {
            // smallest nonzero entry of the remaining block becomes the pivot
            int pr = -1, pc = -1;
            for (int r = k; r < rows; ++r)
                for (int c = k; c < cols; ++c)
                    if (b(r, c) != 0 && (pr < 0 || std::llabs(b(r, c)) < std::llabs(b(pr, pc)))) pr = r, pc = c;
            if (pr < 0) return {diag, v};
            swap_rows(k, pr);
            swap_cols(k, pc);
            bool clean = true;
            for (int r = k + 1; r < rows; ++r) {
                const int64_t f = b(r, k) / b(k, k);
                for (int c = k; c < cols; ++c) b(r, c) -= f * b(k, c);
                clean = clean && b(r, k) == 0;
            }
            for (int c = k + 1; c < cols; ++c) {
                const int64_t f = b(k, c) / b(k, k);
                for (int r = k; r < rows; ++r) b(r, c) -= f * b(r, k);
                for (int r = 0; r < cols; ++r) v(r, c) -= f * v(r, k);
                clean = clean && b(k, c) == 0;
            }
            if (clean) break;
        }
        diag.push_back(std::llabs(b(k, k)));
    }
    return {diag, v};
}

}  // namespace

std::optional<BraidingMatrix> realize_cartan(const CartanMatrix& c) {
    const int n = c.rank();
    // one row per edge: a_ij x_i - a_ji x_j = 0
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c(i, j) != 0) edges.emplace_back(i, j);
    IntMatrix b(std::max<int>(1, int(edges.size())), n);
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto [i, j] = edges[e];
        b(int(e), i) = c(i, j);
        b(int(e), j) = -c(j, i);
    }
    const auto [diag, v] = diagonalise(b);
    const int r = int(diag.size());

    std::vector<int64_t> lower(size_t(n), 0);  // ord(q_ii) must exceed this
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) lower[size_t(i)] = std::max(lower[size_t(i)], -c(i, j));

    std::vector<bool> torsion_only(size_t(n), true);
    for (int i = 0; i < n; ++i)
        for (int k = r; k < n; ++k)
            if (v(i, k) != 0) torsion_only[size_t(i)] = false;

    // torsion coordinates y_k in (1/d_k)Z/Z; x_i = sum_k v_ik y_k
    int64_t space = 1;
    int64_t modulus = 1;
    for (int k = 0; k < r; ++k) {
        space *= diag[size_t(k)];
        modulus = std::lcm(modulus, diag[size_t(k)]);
        if (space > 2'000'000) throw CapExceeded("torsion search space too large");
    }
    std::vector<int64_t> counter(size_t(r), 0);
    std::optional<std::vector<int64_t>> torsion;  // exponents of x_i modulo `modulus`
    for (int64_t step = 0; step < space && !torsion; ++step) {
        std::vector<int64_t> x(size_t(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < r; ++k) x[size_t(i)] += v(i, k) * counter[size_t(k)] * (modulus / diag[size_t(k)]);
            x[size_t(i)] = ((x[size_t(i)] % modulus) + modulus) % modulus;
        }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!torsion_only[size_t(i)]) continue;
            const int64_t order = modulus / std::gcd(modulus, x[size_t(i)]);
            ok = order > lower[size_t(i)];
        }
        if (ok) torsion = x;
        for (int k = 0; k < r; ++k) {
            if (++counter[size_t(k)] < diag[size_t(k)]) break;
            counter[size_t(k)] = 0;
        }
    }
    if (!torsion) return std::nullopt;

    // generic free part: nonzero on every coordinate not pinned to torsion
    std::vector<int64_t> free(size_t(n), 0);
    const bool has_free = r < n && !std::all_of(torsion_only.begin(), torsion_only.end(), [](bool t) { return t; });
    if (has_free) {
        std::mt19937 rng(1);
        std::uniform_int_distribution<int64_t> pick(-3, 3);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000) throw std::logic_error("no generic free part found");
            std::vector<int64_t> y(size_t(n), 0);
            for (int k = r; k < n; ++k) y[size_t(k)] = pick(rng);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                free[size_t(i)] = 0;
                for (int k = r; k < n; ++k) free[size_t(i)] += v(i, k) * y[size_t(k)];
                ok = ok && (torsion_only[size_t(i)] || free[size_t(i)] != 0);
            }
            if (ok) break;
        }
    }

    const int order = modulus > 1 ? int(modulus) : 0;
    auto ctx = ScalarContext::make(order, has_free ? std::vector<std::string>{"t"} : std::vector<std::string>{});
    auto unit = [&](int64_t tors, int64_t f) {
        return UnitMonomial(ctx, order ? tors : 0, has_free ? std::vector<int64_t>{f} : std::vector<int64_t>{});
    };
    BraidingMatrix q(ctx, n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, unit((*torsion)[size_t(i)], free[size_t(i)]));
        for (int j = i + 1; j < n; ++j) q.set(i, j, unit((*torsion)[size_t(i)], free[size_t(i)]).pow(c(i, j)));
    }
    const auto check = is_cartan_type(q);
    if (!check || !(*check == c)) throw std::logic_error("realisation does not reproduce the Cartan matrix");
    return q;
}

}  // namespace nichols
