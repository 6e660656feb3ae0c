#include "nichols/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

std::optional<size_t> Groupoid::find(const BraidingMatrix& q) const {
    if (!states_.empty() && !same_context(q.context(), states_.front().context())) return std::nullopt;
    auto it = index_.find(q.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<size_t> Groupoid::arrow_from(size_t state, int label) const {
    if (state >= out_.size() || label < 0 || label >= rank()) return std::nullopt;
    return out_[state][size_t(label)];
}

Groupoid build_groupoid(const BraidingMatrix& q, const Caps& caps) {
    Groupoid g;
    const int n = q.rank();
    std::vector<int> depth;
    auto discover = [&](const BraidingMatrix& b, int d) -> size_t {
        auto [it, inserted] = g.index_.try_emplace(b.key(), g.states_.size());
        if (inserted) {
            g.states_.push_back(b);
            g.out_.emplace_back(size_t(n));
            depth.push_back(d);
        }
        return it->second;
    };
    discover(q, 0);

    for (size_t cur = 0; cur < g.states_.size(); ++cur) {
        if (depth[cur] >= caps.max_depth) {
            g.cap_exceeded_ = true;
            break;
        }
        for (int i = 0; i < n; ++i) {
            const BraidingMatrix& state = g.states_[cur];
            if (auto blocking = reflection_obstruction(state, i)) {
                g.obstructions_.push_back({cur, i, *blocking});
                continue;
            }
            if (g.arrows_.size() >= caps.max_arrows) {
                g.cap_exceeded_ = true;
                break;
            }
            ReflectionMap s = pseudo_reflection(state, i);
            BraidingMatrix next = reflect_braiding(state, i);
            if (!g.index_.count(next.key()) && g.states_.size() >= caps.max_states) {
                g.cap_exceeded_ = true;
                break;
            }
            const size_t target = discover(next, depth[cur] + 1);
            g.out_[cur][size_t(i)] = g.arrows_.size();
            g.arrows_.push_back({cur, target, i, std::move(s)});
        }
        if (g.cap_exceeded_) break;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Roots

std::optional<int> sign_of(const IntVector& v) {
    bool pos = false, neg = false;
    for (auto x : v) {
        pos |= x > 0;
        neg |= x < 0;
    }
    if (pos && neg) return std::nullopt;
    return pos ? 1 : (neg ? -1 : 0);
}

void RootSet::insert(const IntVector& v) {
    if (rank_ == 0) rank_ = int(v.size());
    if (int(v.size()) != rank_) throw std::invalid_argument("root has wrong length");
    const auto sign = sign_of(v);
    if (!sign) throw MixedSignRoot("root " + vector_to_string(v) + " has coordinates of both signs");
    if (*sign == 0) throw std::invalid_argument("zero is not a root");
    if (*sign > 0) {
        positive_.insert(v);
    } else {
        IntVector w = v;
        for (auto& x : w) x = -x;
        positive_.insert(w);
    }
}

bool RootSet::contains(const IntVector& v) const {
    const auto sign = sign_of(v);
    if (!sign || *sign == 0) return false;
    if (*sign > 0) return positive_.count(v) > 0;
    IntVector w = v;
    for (auto& x : w) x = -x;
    return positive_.count(w) > 0;
}

std::vector<IntVector> RootSet::all() const {
    std::vector<IntVector> out(positive_.begin(), positive_.end());
    for (const auto& v : positive_) {
        IntVector w = v;
        for (auto& x : w) x = -x;
        out.push_back(std::move(w));
    }
    return out;
}

BasisOrbit basis_orbit(const BraidingMatrix& q, const Caps& caps) { return basis_orbit(build_groupoid(q, caps), caps); }

BasisOrbit basis_orbit(const Groupoid& g, const Caps& caps) {
    BasisOrbit orbit;
    orbit.cap_exceeded = g.cap_exceeded();
    const int n = g.rank();
    std::map<IntMatrix, size_t> basis_index;
    std::set<std::pair<size_t, size_t>> seen;
    std::deque<std::tuple<size_t, size_t, int>> queue;  // state, basis, depth
    size_t transitions = 0;

    auto visit = [&](size_t state, const IntMatrix& basis, int depth) {
        auto [it, inserted] = basis_index.try_emplace(basis, orbit.bases.size());
        if (inserted) {
            orbit.bases.push_back(basis);
            orbit.witness.push_back(state);
        }
        if (seen.insert({state, it->second}).second) {
            orbit.nodes.emplace_back(state, it->second);
            queue.emplace_back(state, it->second, depth);
        }
    };
    visit(0, IntMatrix::identity(n), 0);

    while (!queue.empty()) {
        auto [state, b, depth] = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            const auto arrow = g.arrow_from(state, i);
            if (!arrow) continue;  // obstructed, or not explored because of a cap
            const auto& a = g.arrows()[*arrow];
            const IntMatrix next = orbit.bases[b] * a.basis_change.matrix();
            if (depth + 1 > caps.max_depth || ++transitions > caps.max_arrows ||
                (!basis_index.count(next) && orbit.bases.size() >= caps.max_states)) {
                if (!(basis_index.count(next) && seen.count({a.target, basis_index.at(next)}))) {
                    orbit.cap_exceeded = true;
                    return orbit;
                }
                continue;
            }
            visit(a.target, next, depth + 1);
        }
    }
    return orbit;
}

RootSet real_roots(const BasisOrbit& orbit) {
    if (orbit.cap_exceeded) throw CapExceeded("basis orbit not shown finite within caps");
    RootSet roots(orbit.bases.front().rows());
    for (const auto& e : orbit.bases)
        for (int c = 0; c < e.cols(); ++c) roots.insert(e.column(c));
    return roots;
}

RootSet real_roots(const BraidingMatrix& q, const Caps& caps) { return real_roots(basis_orbit(q, caps)); }

// ---------------------------------------------------------------------------
// Weyl-Brandt groupoid

std::vector<WeylBrandtElement> weyl_brandt_elements(const BraidingMatrix& q, const Caps& caps) {
    const Groupoid g = build_groupoid(q, caps);
    const BasisOrbit orbit = basis_orbit(g, caps);
    if (orbit.cap_exceeded) throw CapExceeded("Weyl-Brandt groupoid not shown finite within caps");
    const int n = g.rank();

    // Composite maps along chains starting at each state.
    std::vector<std::set<IntMatrix>> maps(g.states().size());
    std::vector<bool> done(g.states().size(), false);
    size_t work = 0;
    auto chains_from = [&](size_t start) -> const std::set<IntMatrix>& {
        if (done[start]) return maps[start];
        std::set<std::pair<size_t, IntMatrix>> seen;
        std::deque<std::pair<size_t, IntMatrix>> queue;
        seen.insert({start, IntMatrix::identity(n)});
        queue.emplace_back(start, IntMatrix::identity(n));
        while (!queue.empty()) {
            auto [state, m] = queue.front();
            queue.pop_front();
            maps[start].insert(m);
            for (int i = 0; i < n; ++i) {
                const auto arrow = g.arrow_from(state, i);
                if (!arrow) continue;
                const auto& a = g.arrows()[*arrow];
                std::pair<size_t, IntMatrix> next{a.target, m * a.basis_change.matrix()};
                if (seen.count(next)) continue;
                if (++work > caps.max_arrows * 16) throw CapExceeded("Weyl-Brandt element enumeration exceeded caps");
                seen.insert(next);
                queue.push_back(std::move(next));
            }
        }
        done[start] = true;
        return maps[start];
    };

    std::set<WeylBrandtElement> elements;
    for (const auto& [state, b] : orbit.nodes)
        for (const auto& m : chains_from(state)) elements.insert({m, orbit.bases[b]});
    return {elements.begin(), elements.end()};
}

bool BrandtReport::pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.pass; });
}

std::optional<AxiomResult> BrandtReport::first_failure() const {
    for (const auto& r : axioms)
        if (!r.pass) return r;
    return std::nullopt;
}

namespace {

std::string describe(const WeylBrandtElement& x) { return "(s=" + x.s.to_string() + ", E=" + x.basis.to_string() + ")"; }

}  // namespace

BrandtReport check_brandt_axioms(const std::vector<WeylBrandtElement>& elements) {
    const size_t count = elements.size();
    std::map<WeylBrandtElement, size_t> index;
    for (size_t k = 0; k < count; ++k) index.emplace(elements[k], k);

    // comp[x][y] = index of x o y when (x, y) is in D.
    std::vector<std::vector<std::optional<size_t>>> comp(count, std::vector<std::optional<size_t>>(count));
    for (size_t x = 0; x < count; ++x)
        for (size_t y = 0; y < count; ++y) {
            const auto& ex = elements[x];
            const auto& ey = elements[y];
            if (!(ey.basis * ey.s == ex.basis)) continue;
            auto it = index.find({ey.s * ex.s, ey.basis});
            if (it != index.end()) comp[x][y] = it->second;
        }
    auto in_d = [&](size_t x, size_t y) { return comp[x][y].has_value(); };

    BrandtReport report;
    auto fail = [&](int axiom, std::string witness) {
        report.axioms.push_back({axiom, false, std::move(witness)});
    };
    auto ok = [&](int axiom) { report.axioms.push_back({axiom, true, {}}); };

    // 1. x, y, x o y determine each other.
    {
        std::map<std::pair<size_t, size_t>, size_t> by_left, by_right;
        std::string witness;
        for (size_t x = 0; x < count && witness.empty(); ++x)
            for (size_t y = 0; y < count && witness.empty(); ++y) {
                if (!in_d(x, y)) continue;
                const size_t xy = *comp[x][y];
                auto [l, l_new] = by_left.try_emplace({x, xy}, y);
                auto [r, r_new] = by_right.try_emplace({y, xy}, x);
                if (!l_new && l->second != y)
                    witness = "x=" + describe(elements[x]) + " and x o y do not determine y";
                else if (!r_new && r->second != x)
                    witness = "y=" + describe(elements[y]) + " and x o y do not determine x";
            }
        witness.empty() ? ok(1) : fail(1, witness);
    }

    // 2-4. associativity and closure of composable chains.
    {
        std::string w2, w3, w4;
        for (size_t x = 0; x < count; ++x)
            for (size_t y = 0; y < count; ++y)
                for (size_t z = 0; z < count; ++z) {
                    const auto tag = [&] {
                        return "x=" + describe(elements[x]) + ", y=" + describe(elements[y]) + ", z=" + describe(elements[z]);
                    };
                    if (w2.empty() && in_d(x, y) && in_d(y, z)) {
                        const size_t xy = *comp[x][y], yz = *comp[y][z];
                        if (!in_d(xy, z) || !in_d(x, yz) || *comp[xy][z] != *comp[x][yz]) w2 = tag();
                    }
                    if (w3.empty() && in_d(x, y) && in_d(*comp[x][y], z)) {
                        const size_t xy = *comp[x][y];
                        if (!in_d(y, z) || !in_d(x, *comp[y][z]) || *comp[xy][z] != *comp[x][*comp[y][z]]) w3 = tag();
                    }
                    if (w4.empty() && in_d(y, z) && in_d(x, *comp[y][z])) {
                        const size_t yz = *comp[y][z];
                        if (!in_d(x, y) || !in_d(*comp[x][y], z) || *comp[*comp[x][y]][z] != *comp[x][yz]) w4 = tag();
                    }
                }
        w2.empty() ? ok(2) : fail(2, w2);
        w3.empty() ? ok(3) : fail(3, w3);
        w4.empty() ? ok(4) : fail(4, w4);
    }

    // 5. unique left unit e, right unit f, and inverse y with y o x = f.
    {
        std::string witness;
        for (size_t x = 0; x < count && witness.empty(); ++x) {
            std::vector<size_t> left_units, right_units;
            for (size_t e = 0; e < count; ++e) {
                if (in_d(e, x) && *comp[e][x] == x) left_units.push_back(e);
                if (in_d(x, e) && *comp[x][e] == x) right_units.push_back(e);
            }
            if (left_units.size() != 1 || right_units.size() != 1) {
                witness = describe(elements[x]) + " has " + std::to_string(left_units.size()) + " left and " +
                          std::to_string(right_units.size()) + " right units";
                continue;
            }
            const size_t f = right_units.front();
            size_t inverses = 0;
            for (size_t y = 0; y < count; ++y)
                if (in_d(y, x) && *comp[y][x] == f) ++inverses;
            if (inverses != 1)
                witness = describe(elements[x]) + " has " + std::to_string(inverses) + " inverses";
        }
        witness.empty() ? ok(5) : fail(5, witness);
    }

    // 6. any two idempotents are connected.
    {
        std::vector<size_t> idempotents;
        for (size_t e = 0; e < count; ++e)
            if (in_d(e, e) && *comp[e][e] == e) idempotents.push_back(e);
        std::string witness;
        for (size_t e : idempotents) {
            for (size_t f : idempotents) {
                bool found = false;
                for (size_t x = 0; x < count && !found; ++x)
                    found = in_d(e, x) && *comp[e][x] == x && in_d(x, f) && *comp[x][f] == x;
                if (!found) {
                    witness = "no element connects " + describe(elements[e]) + " and " + describe(elements[f]);
                    break;
                }
            }
            if (!witness.empty()) break;
        }
        witness.empty() ? ok(6) : fail(6, witness);
    }
    std::sort(report.axioms.begin(), report.axioms.end(),
              [](const AxiomResult& a, const AxiomResult& b) { return a.axiom < b.axiom; });
    return report;
}

std::string export_dot(const Groupoid& g) {
    std::ostringstream os;
    os << "digraph weyl_groupoid {\n";
    for (size_t s = 0; s < g.states().size(); ++s) {
        const auto& q = g.states()[s];
        std::string label;
        for (int i = 0; i < q.rank(); ++i) {
            for (int j = 0; j < q.rank(); ++j) label += (j ? " " : "") + q.at(i, j).to_string();
            label += "\\n";
        }
        os << "  s" << s << " [label=\"" << s << "\\n" << label << "\"];\n";
    }
    for (const auto& a : g.arrows())
        os << "  s" << a.source << " -> s" << a.target << " [label=\"" << a.label + 1 << "\"];\n";
    for (const auto& o : g.obstructions())
        os << "  s" << o.state << " -> s" << o.state << " [style=dashed, label=\"" << o.label + 1 << " blocked by m_"
           << o.label + 1 << o.blocking + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace nichols
